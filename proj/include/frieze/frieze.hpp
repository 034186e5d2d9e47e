#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frieze/scalar.hpp"

namespace frieze {

/// Unordered pair of polygon vertices, stored with 1 <= p < q <= m.
struct VertexPair {
  int p = 0;
  int q = 0;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Maps pattern index (i, j) with i <= j <= i + m onto the polygon. Returns
/// std::nullopt (a zero entry) iff j - i is 0 or m. Throws
/// std::out_of_range when j < i or j > i + m.
std::optional<VertexPair> normalize_index(int m, long i, long j);

/// d_0, ..., d_{m-1} with d_i = c_{i,i+1}; length >= 3, no zeros.
class BoundarySequence {
 public:
  explicit BoundarySequence(std::vector<Scalar> values);
  int size() const { return static_cast<int>(values_.size()); }
  /// Periodic access, any integer index.
  const Scalar& operator[](long i) const;
  const std::vector<Scalar>& values() const& { return values_; }
  std::vector<Scalar> values() && { return std::move(values_); }
  /// max |d_i|.
  Scalar max_modulus() const;
  BoundarySequence scaled(const Scalar& z) const;
  friend bool operator==(const BoundarySequence&, const BoundarySequence&) = default;

 private:
  std::vector<Scalar> values_;
};

/// q_0, ..., q_{m-1} with q_i = c_{i,i+2}.
class QuiddityCycle {
 public:
  explicit QuiddityCycle(std::vector<Scalar> values);
  int size() const { return static_cast<int>(values_.size()); }
  const Scalar& operator[](long i) const;
  const std::vector<Scalar>& values() const& { return values_; }
  std::vector<Scalar> values() && { return std::move(values_); }
  friend bool operator==(const QuiddityCycle&, const QuiddityCycle&) = default;

 private:
  std::vector<Scalar> values_;
};

class FriezeMap;

/// One period of a (possibly invalid) extended frieze pattern. Row i, for
/// 0 <= i < m, stores c_{i,j} for i - 1 <= j <= i + m + 1; rows are periodic
/// in i with the matching column shift, so at() accepts any row index.
class PatternGrid {
 public:
  /// rows[i] holds c_{i,i-1}, ..., c_{i,i+m+1} (m + 3 values).
  PatternGrid(int m, std::vector<std::vector<Scalar>> rows);

  /// The extended pattern of a polygon map: the map's entries plus the
  /// zero diagonals and c_{i,i-1} = -c_{i-1,i}, c_{i,i+m+1} = -c_{i,i+1}.
  static PatternGrid from_polygon(const FriezeMap& f);

  int period() const { return m_; }
  int height() const { return m_ - 3; }

  /// Throws std::out_of_range outside the stored band.
  const Scalar& at(long i, long j) const;
  bool in_band(long i, long j) const;

  BoundarySequence boundary() const;
  QuiddityCycle quiddity() const;

  /// Copy with the single stored entry c_{i,j} replaced.
  PatternGrid with_entry(long i, long j, const Scalar& value) const;

  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  friend bool operator==(const PatternGrid&, const PatternGrid&) = default;

 private:
  int m_;
  std::vector<std::vector<Scalar>> rows_;
};

/// Glide-quotiented frieze: a value on every edge and diagonal of an m-gon
/// with vertices 1..m. Zero entries c_{i,i} are lookup results, not data.
class FriezeMap {
 public:
  /// Requires every pair 1 <= p < q <= m present and nonzero edge values.
  /// Throws std::invalid_argument otherwise.
  FriezeMap(int m, const std::map<VertexPair, Scalar>& entries);

  int size() const { return m_; }
  /// Cyclic lookup by arbitrary integers: vertices are taken mod m (0 is m)
  /// and coinciding vertices read as 0.
  Scalar at(long p, long q) const;
  const Scalar& entry(VertexPair e) const;
  std::map<VertexPair, Scalar> entries() const;

  BoundarySequence boundary() const;
  QuiddityCycle quiddity() const;

  friend bool operator==(const FriezeMap&, const FriezeMap&) = default;
  friend auto operator<=>(const FriezeMap& a, const FriezeMap& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  std::size_t slot(int p, int q) const;  // 1 <= p < q <= m

  int m_;
  std::vector<Scalar> values_;  // pairs in lexicographic order
};

struct Violation {
  std::string rule;             // "structure", "local", "tame", "glide", "ptolemy"
  std::vector<long> indices;    // (i, j) or (i, j, k, l)
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void append(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
};

/// Every failing local rule E_{i,j} over one period, i in [0, m), j in
/// [i, i + m] (the extended equations included), plus structural defects:
/// nonzero c_{i,i} or c_{i,i+m}, zero boundary entries, and extended entries
/// that are not -c_{i-1,i} / -c_{i,i+1}.
ValidationReport validate_local(const PatternGrid& grid);

/// Every complete adjacent 3x3 submatrix of the extended pattern (rows
/// i..i+2, columns j..j+2 with i + 1 <= j <= i + m - 1) with nonzero
/// determinant.
ValidationReport validate_tame(const PatternGrid& grid);

/// c_{i,j} == c_{j,i+m} for every stored i <= j <= i + m.
bool check_glide(const PatternGrid& grid);

/// Throws std::invalid_argument when the glide symmetry fails.
FriezeMap to_polygon(const PatternGrid& grid);

/// Multiplies every entry by z; throws std::invalid_argument when z == 0.
FriezeMap scale(const FriezeMap& f, const Scalar& z);

}  // namespace frieze
