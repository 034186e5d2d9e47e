#include "frieze/triangulation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "frieze/arith.hpp"

namespace frieze {

namespace {

bool crossing(const VertexPair& x, const VertexPair& y) {
  return (x.p < y.p && y.p < x.q && x.q < y.q) ||
         (y.p < x.p && x.p < y.q && y.q < x.q);
}

VertexPair ordered(int a, int b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

std::string pair_str(const VertexPair& e) {
  return "(" + std::to_string(e.p) + "," + std::to_string(e.q) + ")";
}

}  // namespace

Triangulation::Triangulation(int m, std::vector<VertexPair> diagonals)
    : m_(m), diagonals_(std::move(diagonals)) {
  if (m_ < 3) throw std::invalid_argument("triangulation needs m >= 3");
  for (auto& d : diagonals_) {
    d = ordered(d.p, d.q);
    if (d.p < 1 || d.q > m_ || d.p == d.q) {
      throw std::invalid_argument("diagonal " + pair_str(d) + " out of range");
    }
    if (is_edge(d.p, d.q)) {
      throw std::invalid_argument("pair " + pair_str(d) + " is a polygon edge");
    }
  }
  std::sort(diagonals_.begin(), diagonals_.end());
  if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end()) {
    throw std::invalid_argument("duplicate diagonal");
  }
  if (static_cast<int>(diagonals_.size()) != m_ - 3) {
    throw std::invalid_argument("a triangulation of a " + std::to_string(m_) +
                                "-gon needs " + std::to_string(m_ - 3) +
                                " diagonals, got " +
                                std::to_string(diagonals_.size()));
  }
  for (std::size_t x = 0; x < diagonals_.size(); ++x) {
    for (std::size_t y = x + 1; y < diagonals_.size(); ++y) {
      if (crossing(diagonals_[x], diagonals_[y])) {
        throw std::invalid_argument("diagonals " + pair_str(diagonals_[x]) +
                                    " and " + pair_str(diagonals_[y]) + " cross");
      }
    }
  }

  adjacent_.assign(static_cast<std::size_t>(m_) * m_, 0);
  auto link = [&](int p, int q) {
    adjacent_[(p - 1) * m_ + (q - 1)] = 1;
    adjacent_[(q - 1) * m_ + (p - 1)] = 1;
  };
  for (int v = 1; v <= m_; ++v) link(v, v % m_ + 1);
  for (const auto& d : diagonals_) link(d.p, d.q);

  for (int a = 1; a <= m_; ++a) {
    for (int b = a + 1; b <= m_; ++b) {
      if (!connected(a, b)) continue;
      for (int c = b + 1; c <= m_; ++c) {
        if (connected(a, c) && connected(b, c)) triangles_.push_back({a, b, c});
      }
    }
  }
  if (static_cast<int>(triangles_.size()) != m_ - 2) {
    throw std::logic_error("triangulation produced the wrong number of triangles");
  }
}

bool Triangulation::is_edge(int p, int q) const {
  const int d = std::abs(p - q);
  return d == 1 || d == m_ - 1;
}

bool Triangulation::connected(int p, int q) const {
  return adjacent_[(p - 1) * m_ + (q - 1)] != 0;
}

std::vector<Integer> cc_labels_from(const Triangulation& t, int v) {
  return cc_labels_from(t, v, t.triangles());
}

std::vector<Integer> cc_labels_from(const Triangulation& t, int v,
                                    const std::vector<Triangle>& order) {
  const int m = t.size();
  if (v < 1 || v > m) throw std::out_of_range("vertex out of range");
  if (order.size() != t.triangles().size()) {
    throw std::invalid_argument("triangle order is not a permutation");
  }
  std::vector<Integer> label(m);
  std::vector<char> known(m, 0);
  auto set = [&](int w, const Integer& x) {
    label[w - 1] = x;
    known[w - 1] = 1;
  };
  set(v, 0);
  set(v % m + 1, 1);
  set((v + m - 2) % m + 1, 1);
  int remaining = m - std::min(m, 3);
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (const Triangle& tri : order) {
      const std::array<int, 3> c{tri.a, tri.b, tri.c};
      int unknown = -1, count = 0;
      for (int x = 0; x < 3; ++x) {
        if (!known[c[x] - 1]) {
          unknown = x;
          ++count;
        }
      }
      if (count != 1) continue;
      set(c[unknown], label[c[(unknown + 1) % 3] - 1] + label[c[(unknown + 2) % 3] - 1]);
      --remaining;
      progress = true;
    }
  }
  if (remaining > 0) throw std::logic_error("labelling did not reach every vertex");
  return label;
}

FriezeMap frieze_from_triangulation(const Triangulation& t) {
  const int m = t.size();
  std::vector<std::vector<Integer>> labels(m + 1);
  for (int v = 1; v <= m; ++v) labels[v] = cc_labels_from(t, v);
  std::map<VertexPair, Scalar> entries;
  for (int p = 1; p <= m; ++p) {
    for (int q = p + 1; q <= m; ++q) {
      const Integer& x = labels[p][q - 1];
      if (x != labels[q][p - 1]) {
        throw std::logic_error("Conway-Coxeter labels are not symmetric");
      }
      const bool unit_expected = t.connected(p, q);
      if ((x == 1) != unit_expected) {
        throw std::logic_error("entry 1 does not match the diagonals/edges");
      }
      entries.emplace(VertexPair{p, q}, Scalar(x));
    }
  }
  return FriezeMap(m, entries);
}

FriezeMap cut_subpolygon(const FriezeMap& f, const std::vector<int>& verts) {
  if (verts.size() < 3) throw std::invalid_argument("subpolygon needs >= 3 vertices");
  for (std::size_t a = 0; a < verts.size(); ++a) {
    if (verts[a] < 1 || verts[a] > f.size() || (a > 0 && verts[a] <= verts[a - 1])) {
      throw std::invalid_argument("subpolygon vertices must be increasing in 1..m");
    }
  }
  const int k = static_cast<int>(verts.size());
  std::map<VertexPair, Scalar> entries;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      entries.emplace(VertexPair{a + 1, b + 1}, f.at(verts[a], verts[b]));
    }
  }
  return FriezeMap(k, entries);
}

// --- accordion -------------------------------------------------------------

std::vector<Integer> euclid_quotients(const Integer& a, const Integer& b) {
  Integer r0 = std::max(a, b), r1 = std::min(a, b);
  std::vector<Integer> q;
  while (r1 != 0) {
    Integer quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    q.push_back(quot);
    r0 = r1;
    r1 = rem;
  }
  return q;
}

namespace {

// Reflection v -> 2 - v (mod m) fixes vertex 1 and reverses the orientation.
int reflect(int v, int m) { return static_cast<int>(floor_mod(1 - v, m)) + 1; }

Triangulation reflected(const Triangulation& t) {
  std::vector<VertexPair> d;
  for (const auto& e : t.diagonals()) {
    d.push_back(ordered(reflect(e.p, t.size()), reflect(e.q, t.size())));
  }
  return Triangulation(t.size(), std::move(d));
}

}  // namespace

AccordionResult accordion(const Integer& a, const Integer& b) {
  if (a < 0 || b < 0) throw std::invalid_argument("accordion: need a, b >= 0");
  if (gcd_nat(a, b) != 1) {
    throw std::invalid_argument("accordion: gcd(" + a.get_str() + "," + b.get_str() +
                                ") != 1");
  }
  const Triangulation triangle(3, {});
  if (a == 0) return {triangle, 1};  // c_{1,1} = 0, c_{1,2} = 1
  if (b == 0) return {triangle, 3};  // c_{1,3} = 1, c_{1,1} = 0

  const std::vector<Integer> q = euclid_quotients(a, b);
  long total = 0;
  for (const auto& x : q) total += x.get_si();
  const int m = static_cast<int>(2 + total);

  // Number line: start with the edge 1-2 and fan q_{l+1}, q_l, ..., q_1 arcs,
  // alternating left and right, each fan from the last endpoint reached.
  long lo = 1, hi = 2, centre = 2;
  bool left = true;
  std::vector<std::pair<long, long>> arcs;
  for (auto it = q.rbegin(); it != q.rend(); ++it) {
    long end = centre;
    for (long s = 0; s < it->get_si(); ++s) {
      end = left ? --lo : ++hi;
      arcs.emplace_back(centre, end);
    }
    centre = end;
    left = !left;
  }
  // Renumber consecutively, keeping 1: integers x <= 0 follow hi.
  auto vertex = [&](long x) { return static_cast<int>(x >= 1 ? x : x + m); };
  std::vector<VertexPair> diagonals;
  for (const auto& [x, y] : arcs) {
    const VertexPair e = ordered(vertex(x), vertex(y));
    const int gap = e.q - e.p;
    if (gap != 1 && gap != m - 1) diagonals.push_back(e);
  }
  Triangulation t(m, std::move(diagonals));

  // The closing arc joins hi and lo, i.e. vertices hi and hi + 1.
  const int k = static_cast<int>(hi);
  const auto labels = cc_labels_from(t, 1);
  if (labels[k - 1] == a && labels[k % m] == b) return {t, k};
  // The labels came out mirrored; reflecting through vertex 1 swaps them.
  Triangulation r = reflected(t);
  const int rk = reflect(k + 1, m);
  const auto rl = cc_labels_from(r, 1);
  if (rl[rk - 1] != a || rl[rk % m] != b) {
    throw std::logic_error("accordion construction failed its label check");
  }
  return {r, rk};
}

// --- gluing ----------------------------------------------------------------

GlueResult glue_three(const std::array<const Triangulation*, 3>& parts,
                      const std::array<int, 3>& marks) {
  for (int t = 0; t < 3; ++t) {
    if (parts[t] == nullptr) throw std::invalid_argument("glue_three: null part");
    if (marks[t] < 1 || marks[t] > parts[t]->size()) {
      throw std::invalid_argument("glue_three: marked edge out of range");
    }
  }
  GlueResult out{Triangulation(3, {}), {}};
  int next = 1;
  for (int t = 0; t < 3; ++t) {
    const int mt = parts[t]->size();
    auto& map = out.maps[t];
    map.assign(mt, 0);
    // Walk u + 1, u + 2, ..., u around input t.
    for (int s = 1; s <= mt; ++s) {
      const int v = (marks[t] - 1 + s) % mt + 1;
      if (s == 1 && t > 0) {
        map[v - 1] = out.maps[t - 1][marks[t - 1] - 1];
      } else if (s == mt && t == 2) {
        map[v - 1] = out.maps[0][marks[0] % parts[0]->size()];
      } else {
        map[v - 1] = next++;
      }
    }
  }
  const int m = next - 1;
  std::vector<VertexPair> diagonals;
  for (int t = 0; t < 3; ++t) {
    const auto& map = out.maps[t];
    for (const auto& e : parts[t]->diagonals()) {
      diagonals.push_back(ordered(map[e.p - 1], map[e.q - 1]));
    }
    const int u = marks[t];
    diagonals.push_back(ordered(map[u - 1], map[u % parts[t]->size()]));
  }
  out.triangulation = Triangulation(m, std::move(diagonals));
  return out;
}

// --- enumeration -----------------------------------------------------------

namespace {

using DiagonalSets = std::vector<std::vector<VertexPair>>;

// Triangulations of the polygon lo, lo+1, ..., hi (closing side lo-hi).
const DiagonalSets& triangulate_range(int lo, int hi,
                                      std::map<std::pair<int, int>, DiagonalSets>& memo) {
  auto key = std::make_pair(lo, hi);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  DiagonalSets result;
  if (hi - lo < 2) {
    result.push_back({});
  } else {
    for (int apex = lo + 1; apex < hi; ++apex) {
      const DiagonalSets left = triangulate_range(lo, apex, memo);
      const DiagonalSets right = triangulate_range(apex, hi, memo);
      for (const auto& l : left) {
        for (const auto& r : right) {
          std::vector<VertexPair> d = l;
          d.insert(d.end(), r.begin(), r.end());
          if (apex - lo >= 2) d.push_back({lo, apex});
          if (hi - apex >= 2) d.push_back({apex, hi});
          result.push_back(std::move(d));
        }
      }
    }
  }
  return memo.emplace(key, std::move(result)).first->second;
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int m) {
  if (m < 3 || m > 12) {
    throw std::invalid_argument("enumerate_triangulations: need 3 <= m <= 12");
  }
  std::map<std::pair<int, int>, DiagonalSets> memo;
  const DiagonalSets& sets = triangulate_range(1, m, memo);
  std::vector<Triangulation> out;
  out.reserve(sets.size());
  for (const auto& d : sets) out.emplace_back(m, d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace frieze
