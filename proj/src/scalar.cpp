#include "frieze/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace frieze {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("scalar with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Scalar(Integer(std::string(num)));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-') {
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  }
  const Integer d{std::string(den)};
  if (d == 0) {
    throw std::invalid_argument("scalar '" + std::string(text) +
                                "' has zero denominator");
  }
  return Scalar(Integer(std::string(num)), d);
}

std::string Scalar::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar Scalar::abs() const {
  Scalar r;
  r.value_ = ::abs(value_);
  return r;
}

Scalar Scalar::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  Scalar r;
  r.value_ = 1 / value_;
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace frieze
