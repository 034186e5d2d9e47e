#include "frieze/frieze.hpp"

#include <algorithm>
#include <stdexcept>

#include "frieze/arith.hpp"

namespace frieze {

namespace {

std::string idx(long i, long j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Scalar det3(const Scalar a[3][3]) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

}  // namespace

std::optional<VertexPair> normalize_index(int m, long i, long j) {
  if (m < 3) throw std::invalid_argument("polygon needs m >= 3");
  if (j < i || j > i + m) {
    throw std::out_of_range("normalize_index: need i <= j <= i + m, got " +
                            idx(i, j));
  }
  if (j == i || j == i + m) return std::nullopt;
  // Translate so that 1 <= i <= m.
  const long shift = floor_mod(i - 1, m) + 1 - i;
  i += shift;
  j += shift;
  if (j <= m) return VertexPair{static_cast<int>(i), static_cast<int>(j)};
  return VertexPair{static_cast<int>(j - m), static_cast<int>(i)};
}

// --- BoundarySequence / QuiddityCycle --------------------------------------

BoundarySequence::BoundarySequence(std::vector<Scalar> values)
    : values_(std::move(values)) {
  if (values_.size() < 3) {
    throw std::invalid_argument("boundary sequence needs length >= 3");
  }
  for (const Scalar& v : values_) {
    if (v.is_zero()) throw std::invalid_argument("boundary entries must be nonzero");
  }
}

const Scalar& BoundarySequence::operator[](long i) const {
  return values_[floor_mod(i, size())];
}

Scalar BoundarySequence::max_modulus() const {
  Scalar p = values_.front().abs();
  for (const Scalar& v : values_) p = std::max(p, v.abs());
  return p;
}

BoundarySequence BoundarySequence::scaled(const Scalar& z) const {
  std::vector<Scalar> v;
  v.reserve(values_.size());
  for (const Scalar& x : values_) v.push_back(x * z);
  return BoundarySequence(std::move(v));
}

QuiddityCycle::QuiddityCycle(std::vector<Scalar> values)
    : values_(std::move(values)) {
  if (values_.size() < 3) {
    throw std::invalid_argument("quiddity cycle needs length >= 3");
  }
}

const Scalar& QuiddityCycle::operator[](long i) const {
  return values_[floor_mod(i, size())];
}

// --- PatternGrid -----------------------------------------------------------

PatternGrid::PatternGrid(int m, std::vector<std::vector<Scalar>> rows)
    : m_(m), rows_(std::move(rows)) {
  if (m_ < 3) throw std::invalid_argument("pattern needs period m >= 3");
  if (rows_.size() != static_cast<std::size_t>(m_)) {
    throw std::invalid_argument("pattern needs exactly m rows");
  }
  for (const auto& r : rows_) {
    if (r.size() != static_cast<std::size_t>(m_ + 3)) {
      throw std::invalid_argument("pattern rows need m + 3 entries");
    }
  }
}

PatternGrid PatternGrid::from_polygon(const FriezeMap& f) {
  const int m = f.size();
  std::vector<std::vector<Scalar>> rows(m);
  for (int i = 0; i < m; ++i) {
    auto& row = rows[i];
    row.reserve(m + 3);
    row.push_back(-f.at(i - 1, i));
    for (long j = i; j <= i + m; ++j) row.push_back(f.at(i, j));
    row.push_back(-f.at(i, i + 1));
  }
  return PatternGrid(m, std::move(rows));
}

bool PatternGrid::in_band(long i, long j) const {
  const long r = floor_mod(i, m_);
  const long jj = j - (i - r);
  return jj >= r - 1 && jj <= r + m_ + 1;
}

const Scalar& PatternGrid::at(long i, long j) const {
  const long r = floor_mod(i, m_);
  const long jj = j - (i - r);
  if (jj < r - 1 || jj > r + m_ + 1) {
    throw std::out_of_range("pattern entry " + idx(i, j) + " outside stored band");
  }
  return rows_[r][jj - (r - 1)];
}

BoundarySequence PatternGrid::boundary() const {
  std::vector<Scalar> d;
  for (int i = 0; i < m_; ++i) d.push_back(at(i, i + 1));
  return BoundarySequence(std::move(d));
}

QuiddityCycle PatternGrid::quiddity() const {
  std::vector<Scalar> q;
  for (int i = 0; i < m_; ++i) q.push_back(at(i, i + 2));
  return QuiddityCycle(std::move(q));
}

PatternGrid PatternGrid::with_entry(long i, long j, const Scalar& value) const {
  PatternGrid copy = *this;
  const long r = floor_mod(i, m_);
  const long jj = j - (i - r);
  if (!in_band(i, j)) {
    throw std::out_of_range("pattern entry " + idx(i, j) + " outside stored band");
  }
  copy.rows_[r][jj - (r - 1)] = value;
  return copy;
}

// --- FriezeMap -------------------------------------------------------------

FriezeMap::FriezeMap(int m, const std::map<VertexPair, Scalar>& entries) : m_(m) {
  if (m_ < 3) throw std::invalid_argument("polygon needs m >= 3");
  values_.reserve(static_cast<std::size_t>(m_) * (m_ - 1) / 2);
  for (int p = 1; p <= m_; ++p) {
    for (int q = p + 1; q <= m_; ++q) {
      auto it = entries.find({p, q});
      if (it == entries.end()) {
        throw std::invalid_argument("frieze is missing pair " + idx(p, q));
      }
      const bool edge = q == p + 1 || (p == 1 && q == m_);
      if (edge && it->second.is_zero()) {
        throw std::invalid_argument("boundary entry " + idx(p, q) + " is zero");
      }
      values_.push_back(it->second);
    }
  }
  if (entries.size() != values_.size()) {
    throw std::invalid_argument("frieze has pairs outside 1 <= p < q <= m");
  }
}

std::size_t FriezeMap::slot(int p, int q) const {
  // Pairs (p, *) for p' < p occupy sum_{p'<p} (m - p') slots.
  const std::size_t before = static_cast<std::size_t>(p - 1) * m_ -
                             static_cast<std::size_t>(p - 1) * p / 2;
  return before + static_cast<std::size_t>(q - p - 1);
}

Scalar FriezeMap::at(long p, long q) const {
  int a = static_cast<int>(floor_mod(p - 1, m_)) + 1;
  int b = static_cast<int>(floor_mod(q - 1, m_)) + 1;
  if (a == b) return Scalar();
  if (a > b) std::swap(a, b);
  return values_[slot(a, b)];
}

const Scalar& FriezeMap::entry(VertexPair e) const {
  if (e.p < 1 || e.p >= e.q || e.q > m_) {
    throw std::out_of_range("vertex pair " + idx(e.p, e.q) + " out of range");
  }
  return values_[slot(e.p, e.q)];
}

std::map<VertexPair, Scalar> FriezeMap::entries() const {
  std::map<VertexPair, Scalar> out;
  for (int p = 1; p <= m_; ++p) {
    for (int q = p + 1; q <= m_; ++q) out.emplace(VertexPair{p, q}, values_[slot(p, q)]);
  }
  return out;
}

BoundarySequence FriezeMap::boundary() const {
  std::vector<Scalar> d;
  for (int i = 0; i < m_; ++i) d.push_back(at(i, i + 1));
  return BoundarySequence(std::move(d));
}

QuiddityCycle FriezeMap::quiddity() const {
  std::vector<Scalar> q;
  for (int i = 0; i < m_; ++i) q.push_back(at(i, i + 2));
  return QuiddityCycle(std::move(q));
}

// --- validation ------------------------------------------------------------

ValidationReport validate_local(const PatternGrid& g) {
  ValidationReport report;
  const int m = g.period();
  auto structural = [&](long i, long j, const std::string& what) {
    report.violations.push_back({"structure", {i, j}, what});
  };
  for (long i = 0; i < m; ++i) {
    if (g.at(i, i + 1).is_zero()) structural(i, i + 1, "zero boundary entry");
    if (!g.at(i, i).is_zero()) structural(i, i, "c_{i,i} must be 0");
    if (!g.at(i, i + m).is_zero()) structural(i, i + m, "c_{i,i+m} must be 0");
    if (g.at(i, i - 1) != -g.at(i - 1, i)) {
      structural(i, i - 1, "c_{i,i-1} must equal -c_{i-1,i}");
    }
    if (g.at(i, i + m + 1) != -g.at(i, i + 1)) {
      structural(i, i + m + 1, "c_{i,i+m+1} must equal -c_{i,i+1}");
    }
  }
  for (long i = 0; i < m; ++i) {
    for (long j = i; j <= i + m; ++j) {
      const Scalar lhs = g.at(i, j) * g.at(i + 1, j + 1) -
                         g.at(i, j + 1) * g.at(i + 1, j);
      const Scalar rhs = g.at(i + 1, i + m) * g.at(j, j + 1);
      if (lhs != rhs) {
        report.violations.push_back(
            {"local", {i, j}, lhs.to_string() + " != " + rhs.to_string()});
      }
    }
  }
  return report;
}

ValidationReport validate_tame(const PatternGrid& g) {
  ValidationReport report;
  const int m = g.period();
  for (long i = 0; i < m; ++i) {
    for (long j = i + 1; j <= i + m - 1; ++j) {
      Scalar a[3][3];
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) a[r][c] = g.at(i + r, j + c);
      }
      const Scalar d = det3(a);
      if (!d.is_zero()) {
        report.violations.push_back({"tame", {i, j}, "det = " + d.to_string()});
      }
    }
  }
  return report;
}

bool check_glide(const PatternGrid& g) {
  const int m = g.period();
  for (long i = 0; i < m; ++i) {
    for (long j = i; j <= i + m; ++j) {
      if (g.at(i, j) != g.at(j, i + m)) return false;
    }
  }
  return true;
}

FriezeMap to_polygon(const PatternGrid& g) {
  if (!check_glide(g)) {
    throw std::invalid_argument("pattern does not satisfy the glide symmetry");
  }
  const int m = g.period();
  std::map<VertexPair, Scalar> entries;
  for (long i = 0; i < m; ++i) {
    for (long j = i + 1; j < i + m; ++j) {
      entries.emplace(*normalize_index(m, i, j), g.at(i, j));
    }
  }
  return FriezeMap(m, entries);
}

FriezeMap scale(const FriezeMap& f, const Scalar& z) {
  if (z.is_zero()) throw std::invalid_argument("scale factor must be nonzero");
  auto entries = f.entries();
  for (auto& [pair, v] : entries) v *= z;
  return FriezeMap(f.size(), entries);
}

}  // namespace frieze
