#include "frieze/enumeration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "frieze/propagation.hpp"

namespace frieze {

BoundData quiddity_bound(const BoundarySequence& b, const Scalar& M) {
  if (M.sign() <= 0) throw std::invalid_argument("quiddity_bound: M must be positive");
  const Scalar P = b.max_modulus();
  if (P < Scalar(1)) {
    throw std::invalid_argument(
        "quiddity_bound: P = " + P.to_string() +
        " < 1; scale boundary and domain by 1/P (scaled-nat / scaled domains) first");
  }
  const int n = b.size() - 3;
  const Scalar P2 = P * P;
  const Scalar B = P2 * (P * M + Scalar(n - 1) * P2 + M) / (M * M);
  return {P, M, n, B};
}

EnumerationPlan plan_enumeration(const BoundarySequence& b, const DomainSpec& d) {
  for (const Scalar& x : b.values()) {
    if (!d.contains(x)) {
      throw std::invalid_argument("boundary entry " + x.to_string() +
                                  " is not in the domain " + d.to_string());
    }
  }
  const Scalar P = b.max_modulus();
  const Scalar z = P < Scalar(1) ? P.reciprocal() : Scalar(1);
  BoundarySequence sb = b.scaled(z);
  DomainSpec sd = d.scaled(z);
  BoundData bound = quiddity_bound(sb, sd.min_modulus());
  return {z, std::move(sb), std::move(sd), std::move(bound)};
}

namespace {

class Search {
 public:
  Search(const BoundarySequence& b, const DomainSpec& d, std::vector<Scalar> candidates)
      : b_(b), d_(d), m_(b.size()), candidates_(std::move(candidates)) {}

  // Subtree with q_0 = candidates_[first].
  std::vector<FriezeMap> run(std::size_t first) {
    found_.clear();
    State s;
    s.q.assign(m_, Scalar());
    s.rows.assign(m_, {});
    s.next.assign(m_, 0);
    for (int i = 0; i < m_; ++i) {
      // c_{i,i-1}, c_{i,i}, c_{i,i+1}; the first step never reads a quiddity.
      s.rows[i] = {-b_[i - 1], Scalar(), b_[i]};
      s.next[i] = i;
    }
    s.q[0] = candidates_[first];
    if (advance(s, 0)) descend(s, 1);
    return std::move(found_);
  }

 private:
  struct State {
    std::vector<Scalar> q;
    std::vector<std::vector<Scalar>> rows;  // prefix of c_{i,i-1}, ...
    std::vector<long> next;                 // next step index j - 1 per row
  };

  bool known(long idx, int fixed) const {
    return (idx < m_ ? idx : idx - m_) <= fixed;
  }

  // Extends every row using q_0..q_fixed; false on the first bad entry.
  bool advance(State& s, int fixed) const {
    for (int i = 0; i < m_; ++i) {
      auto& row = s.rows[i];
      long& k = s.next[i];
      while (k <= i + m_ - 1 && known(k, fixed)) {
        const std::size_t n = row.size();
        const RowPair r = propagate_row({row[n - 2], row[n - 1]}, s.q[k % m_],
                                        b_[k + 1], b_[k]);
        const long offset = k + 2 - i;  // column of the new entry minus i
        if (!entry_ok(i, offset, r.second)) return false;
        row.push_back(r.second);
        ++k;
      }
    }
    return true;
  }

  bool entry_ok(int i, long offset, const Scalar& v) const {
    if (offset <= m_ - 2) return d_.contains_nonzero(v);
    if (offset == m_ - 1) return v == b_[i - 1];
    if (offset == m_) return v.is_zero();
    return v == -b_[i];
  }

  void descend(const State& s, int level) {
    if (level == m_) {
      accept(s);
      return;
    }
    for (const Scalar& c : candidates_) {
      State t = s;
      t.q[level] = c;
      if (advance(t, level)) descend(t, level + 1);
    }
  }

  void accept(const State& s) {
    const QuiddityCycle q(s.q);
    if (closure_product(b_, q) != -Mat2::identity()) return;
    const PatternGrid grid(m_, s.rows);
    if (!check_glide(grid)) return;
    found_.push_back(to_polygon(grid));
  }

  const BoundarySequence& b_;
  const DomainSpec& d_;
  int m_;
  std::vector<Scalar> candidates_;
  std::vector<FriezeMap> found_;
};

// Height 0: the only frieze has q_i = d_{i-1}.
std::vector<FriezeMap> triangle_frieze(const BoundarySequence& b, const DomainSpec& d) {
  std::map<VertexPair, Scalar> e{{{1, 2}, b[1]}, {{2, 3}, b[2]}, {{1, 3}, b[0]}};
  FriezeMap f(3, e);
  const PatternGrid g = PatternGrid::from_polygon(f);
  if (!validate_local(g).ok()) return {};
  for (const Scalar& x : b.values()) {
    if (!d.contains_nonzero(x)) return {};
  }
  return {f};
}

template <bool Parallel>
std::vector<FriezeMap> enumerate_impl(const BoundarySequence& b, const DomainSpec& d) {
  if (b.size() == 3) {
    plan_enumeration(b, d);
    return triangle_frieze(b, d);
  }
  const EnumerationPlan plan = plan_enumeration(b, d);
  const std::vector<Scalar> candidates =
      domain_enumerate_bounded(plan.domain, plan.bound.B);
  const long n = static_cast<long>(candidates.size());
  std::vector<std::vector<FriezeMap>> parts(n);
  if constexpr (Parallel) {
#pragma omp parallel
    {
      Search search(plan.boundary, plan.domain, candidates);
#pragma omp for schedule(dynamic)
      for (long c = 0; c < n; ++c) parts[c] = search.run(c);
    }
  } else {
    Search search(plan.boundary, plan.domain, candidates);
    for (long c = 0; c < n; ++c) parts[c] = search.run(c);
  }
  std::vector<FriezeMap> out;
  const Scalar unscale = plan.scale.reciprocal();
  for (auto& part : parts) {
    for (auto& f : part) {
      out.push_back(plan.scale == Scalar(1) ? std::move(f) : scale(f, unscale));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<FriezeMap> enumerate_friezes(const BoundarySequence& b, const DomainSpec& d) {
  return enumerate_impl<true>(b, d);
}

std::vector<FriezeMap> enumerate_friezes_serial(const BoundarySequence& b,
                                                const DomainSpec& d) {
  return enumerate_impl<false>(b, d);
}

}  // namespace frieze
