#pragma once

#include <utility>

#include "frieze/frieze.hpp"
#include "frieze/scalar.hpp"

namespace frieze {

/// [[a11, a12], [a21, a22]] over exact rationals.
struct Mat2 {
  Scalar a11, a12, a21, a22;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  Scalar det() const { return a11 * a22 - a12 * a21; }
  Mat2 transpose() const { return {a11, a21, a12, a22}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
  }
  Mat2 operator-() const { return {-a11, -a12, -a21, -a22}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// The swap matrix [[0, 1], [1, 0]].
inline Mat2 tau() { return {0, 1, 1, 0}; }

/// [[0, -d/e], [1, c/e]]; the row-propagation step. Throws on e == 0.
Mat2 mu(const Scalar& c, const Scalar& d, const Scalar& e);

/// [[c/e, -d/e], [1, 0]]. Throws on e == 0.
Mat2 eta(const Scalar& c, const Scalar& d, const Scalar& e);

using RowPair = std::pair<Scalar, Scalar>;

/// (c_{i,j-1}, c_{i,j}) * mu(c_{j-1}, d_j, d_{j-1}) = (c_{i,j}, c_{i,j+1}).
RowPair propagate_row(const RowPair& prev, const Scalar& c_prev,
                      const Scalar& d_j, const Scalar& d_prev);

/// Generates every row from the seed (c_{i,i-1}, c_{i,i}) = (-d_{i-1}, 0) by
/// repeated row propagation. Performs no validity checks: certify the result
/// with validate_local / validate_tame / check_glide.
PatternGrid build_pattern(const BoundarySequence& b, const QuiddityCycle& q);

/// prod_{k=1}^{m} mu(q_{k-1}, d_k, d_{k-1}), indices mod m. Equals -Id for
/// boundary/quiddity data of a tame frieze.
Mat2 closure_product(const BoundarySequence& b, const QuiddityCycle& q);

/// c_{i,j} read off as -d_{i-1} * (prod_{k=i}^{j} mu(q_{k-1}, d_k, d_{k-1}))_11.
/// Requires i - 1 <= j <= i + m - 1; throws std::out_of_range otherwise.
Scalar entry_via_product(const BoundarySequence& b, const QuiddityCycle& q,
                         long i, long j);

/// The ordered product prod_{k=i}^{j} mu(q_{k-1}, d_k, d_{k-1}) (Id if j < i).
Mat2 mu_product(const BoundarySequence& b, const QuiddityCycle& q, long i,
                long j);

}  // namespace frieze
