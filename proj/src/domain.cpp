#include "frieze/domain.hpp"

#include <algorithm>
#include <stdexcept>

namespace frieze {

namespace {

// Integers k >= lo with |factor * k| <= bound, i.e. k <= floor(bound / |factor|).
Integer max_multiplier(const Scalar& bound, const Scalar& factor) {
  const Scalar q = bound / factor.abs();
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), q.numerator().get_mpz_t(),
             q.denominator().get_mpz_t());
  return k;
}

constexpr std::string_view kScaledPrefix = "scaled:";
constexpr std::string_view kScaledNatPrefix = "scaled-nat:";
constexpr std::string_view kSetPrefix = "set:";

}  // namespace

DomainSpec DomainSpec::positive_integers(const Scalar& scale) {
  if (scale.is_zero()) throw std::invalid_argument("domain scale must be nonzero");
  return DomainSpec(DomainKind::kPositiveIntegers, scale, {});
}

DomainSpec DomainSpec::nonzero_integers() {
  return DomainSpec(DomainKind::kNonzeroIntegers, 1, {});
}

DomainSpec DomainSpec::scaled_integers(const Scalar& factor) {
  if (factor.is_zero()) {
    throw std::invalid_argument("scaled-integers factor must be nonzero");
  }
  return DomainSpec(DomainKind::kScaledIntegers, factor.abs(), {});
}

DomainSpec DomainSpec::explicit_set(std::vector<Scalar> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (std::none_of(values.begin(), values.end(),
                   [](const Scalar& v) { return !v.is_zero(); })) {
    throw std::invalid_argument("explicit domain needs a nonzero member");
  }
  return DomainSpec(DomainKind::kExplicitSet, 1, std::move(values));
}

DomainSpec DomainSpec::parse(std::string_view text) {
  if (text == "nat") return positive_integers();
  if (text == "nonzero-int") return nonzero_integers();
  if (text.starts_with(kScaledNatPrefix)) {
    return positive_integers(Scalar::parse(text.substr(kScaledNatPrefix.size())));
  }
  if (text.starts_with(kScaledPrefix)) {
    return scaled_integers(Scalar::parse(text.substr(kScaledPrefix.size())));
  }
  if (text.starts_with(kSetPrefix)) {
    std::vector<Scalar> values;
    std::string_view rest = text.substr(kSetPrefix.size());
    while (true) {
      const auto comma = rest.find(',');
      values.push_back(Scalar::parse(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return explicit_set(std::move(values));
  }
  throw std::invalid_argument("unknown domain '" + std::string(text) + "'");
}

std::string DomainSpec::to_string() const {
  switch (kind_) {
    case DomainKind::kPositiveIntegers:
      return factor_ == 1 ? "nat" : std::string(kScaledNatPrefix) + factor_.to_string();
    case DomainKind::kNonzeroIntegers:
      return "nonzero-int";
    case DomainKind::kScaledIntegers:
      return std::string(kScaledPrefix) + factor_.to_string();
    case DomainKind::kExplicitSet: {
      std::string s(kSetPrefix);
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ',';
        s += values_[i].to_string();
      }
      return s;
    }
  }
  return {};
}

Scalar DomainSpec::min_modulus() const {
  if (kind_ != DomainKind::kExplicitSet) return factor_.abs();
  Scalar best;
  bool found = false;
  for (const Scalar& v : values_) {
    if (v.is_zero()) continue;
    if (!found || v.abs() < best) best = v.abs();
    found = true;
  }
  return best;
}

bool DomainSpec::contains(const Scalar& x) const {
  switch (kind_) {
    case DomainKind::kPositiveIntegers: {
      const Scalar k = x / factor_;
      return k.is_integer() && k.sign() > 0;
    }
    case DomainKind::kNonzeroIntegers:
      return x.is_integer() && !x.is_zero();
    case DomainKind::kScaledIntegers:
      return (x / factor_).is_integer();
    case DomainKind::kExplicitSet:
      return std::binary_search(values_.begin(), values_.end(), x);
  }
  return false;
}

DomainSpec DomainSpec::scaled(const Scalar& z) const {
  if (z.is_zero()) throw std::invalid_argument("cannot scale a domain by 0");
  switch (kind_) {
    case DomainKind::kPositiveIntegers:
      return positive_integers(factor_ * z);
    case DomainKind::kNonzeroIntegers:
    case DomainKind::kScaledIntegers:
      // The zero of factor*Z is irrelevant: only nonzero members are used.
      return kind_ == DomainKind::kNonzeroIntegers && z.abs() == 1
                 ? *this
                 : scaled_integers(factor_ * z);
    case DomainKind::kExplicitSet: {
      std::vector<Scalar> v;
      v.reserve(values_.size());
      for (const Scalar& x : values_) v.push_back(x * z);
      return explicit_set(std::move(v));
    }
  }
  return *this;
}

std::vector<Scalar> DomainSpec::enumerate_bounded(const Scalar& bound) const {
  if (bound.sign() < 0) {
    throw std::invalid_argument("enumerate_bounded: bound must be >= 0");
  }
  std::vector<Scalar> out;
  switch (kind_) {
    case DomainKind::kPositiveIntegers: {
      const Integer kmax = max_multiplier(bound, factor_);
      for (Integer k = 1; k <= kmax; ++k) out.push_back(factor_ * Scalar(k));
      break;
    }
    case DomainKind::kNonzeroIntegers:
    case DomainKind::kScaledIntegers: {
      const Integer kmax = max_multiplier(bound, factor_);
      for (Integer k = -kmax; k <= kmax; ++k) {
        if (k != 0) out.push_back(factor_ * Scalar(k));
      }
      break;
    }
    case DomainKind::kExplicitSet:
      for (const Scalar& v : values_) {
        if (!v.is_zero() && v.abs() <= bound) out.push_back(v);
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace frieze
