#include "frieze/propagation.hpp"

#include <stdexcept>
#include <string>

namespace frieze {

Mat2 mu(const Scalar& c, const Scalar& d, const Scalar& e) {
  if (e.is_zero()) throw std::invalid_argument("mu: e must be nonzero");
  return {0, -d / e, 1, c / e};
}

Mat2 eta(const Scalar& c, const Scalar& d, const Scalar& e) {
  if (e.is_zero()) throw std::invalid_argument("eta: e must be nonzero");
  return {c / e, -d / e, 1, 0};
}

RowPair propagate_row(const RowPair& prev, const Scalar& c_prev,
                      const Scalar& d_j, const Scalar& d_prev) {
  if (d_prev.is_zero()) {
    throw std::invalid_argument("propagate_row: d_{j-1} must be nonzero");
  }
  // (x, y) * [[0, -d_j/d_prev], [1, c_prev/d_prev]]
  return {prev.second, (c_prev * prev.second - d_j * prev.first) / d_prev};
}

PatternGrid build_pattern(const BoundarySequence& b, const QuiddityCycle& q) {
  const int m = b.size();
  if (q.size() != m) {
    throw std::invalid_argument("boundary and quiddity lengths differ");
  }
  std::vector<std::vector<Scalar>> rows(m);
  for (long i = 0; i < m; ++i) {
    auto& row = rows[i];
    row.reserve(m + 3);
    RowPair cur{-b[i - 1], Scalar()};
    row.push_back(cur.first);
    row.push_back(cur.second);
    // Step j turns (c_{i,j-1}, c_{i,j}) into (c_{i,j}, c_{i,j+1}).
    for (long j = i; j <= i + m; ++j) {
      cur = propagate_row(cur, q[j - 1], b[j], b[j - 1]);
      row.push_back(cur.second);
    }
  }
  return PatternGrid(m, std::move(rows));
}

Mat2 mu_product(const BoundarySequence& b, const QuiddityCycle& q, long i,
                long j) {
  Mat2 acc = Mat2::identity();
  for (long k = i; k <= j; ++k) acc = acc * mu(q[k - 1], b[k], b[k - 1]);
  return acc;
}

Mat2 closure_product(const BoundarySequence& b, const QuiddityCycle& q) {
  if (q.size() != b.size()) {
    throw std::invalid_argument("boundary and quiddity lengths differ");
  }
  return mu_product(b, q, 1, b.size());
}

Scalar entry_via_product(const BoundarySequence& b, const QuiddityCycle& q,
                         long i, long j) {
  const int m = b.size();
  if (j < i - 1 || j > i + m - 1) {
    throw std::out_of_range("entry_via_product: need i-1 <= j <= i+m-1, got (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return -b[i - 1] * mu_product(b, q, i, j).a11;
}

}  // namespace frieze
