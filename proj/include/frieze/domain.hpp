#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frieze/scalar.hpp"

namespace frieze {

enum class DomainKind {
  kPositiveIntegers,  // scale * {1, 2, 3, ...}
  kNonzeroIntegers,   // Z \ {0}
  kScaledIntegers,    // factor * Z
  kExplicitSet,       // finite list
};

/// A real discrete value domain R. Only the nonzero part of R matters to the
/// finiteness machinery; min_modulus() is inf{|x| : x in R, x != 0} > 0.
class DomainSpec {
 public:
  /// scale * N. The default scale 1 is the plain positive integers; other
  /// scales arise from DomainSpec::scaled (e.g. the positive half-integers).
  static DomainSpec positive_integers(const Scalar& scale = 1);
  static DomainSpec nonzero_integers();
  static DomainSpec scaled_integers(const Scalar& factor);
  /// Duplicates are removed; requires at least one nonzero member.
  static DomainSpec explicit_set(std::vector<Scalar> values);

  /// CLI grammar: "nat", "nonzero-int", "scaled:p/q", "set:v1,v2,...",
  /// and "scaled-nat:p/q" for scale * N. Throws std::invalid_argument.
  static DomainSpec parse(std::string_view text);
  /// Inverse of parse().
  std::string to_string() const;

  DomainKind kind() const { return kind_; }
  /// Scale of the integer kinds (1 for nonzero-integers); unused for sets.
  const Scalar& factor() const { return factor_; }
  /// Sorted, duplicate-free members of an explicit set.
  const std::vector<Scalar>& values() const { return values_; }

  Scalar min_modulus() const;
  bool contains(const Scalar& x) const;
  bool contains_nonzero(const Scalar& x) const {
    return !x.is_zero() && contains(x);
  }

  /// The domain z * R. Throws std::invalid_argument when z == 0.
  DomainSpec scaled(const Scalar& z) const;

  /// Every nonzero x in R with |x| <= bound, ascending.
  std::vector<Scalar> enumerate_bounded(const Scalar& bound) const;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;

 private:
  DomainSpec(DomainKind kind, Scalar factor, std::vector<Scalar> values)
      : kind_(kind), factor_(std::move(factor)), values_(std::move(values)) {}

  DomainKind kind_;
  Scalar factor_;
  std::vector<Scalar> values_;
};

inline std::vector<Scalar> domain_enumerate_bounded(const DomainSpec& d,
                                                    const Scalar& bound) {
  return d.enumerate_bounded(bound);
}

}  // namespace frieze
