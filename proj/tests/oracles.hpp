// Independent reference computations used as test oracles.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "frieze/domain.hpp"
#include "frieze/propagation.hpp"
#include "frieze/triangulation.hpp"

namespace oracle {

using frieze::Integer;
using frieze::Scalar;

inline long gcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const long r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline int nu2(long x) {
  int e = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++e;
  }
  return e;
}

// The triangle predicate evaluated with machine integers.
inline bool triangle_predicate(long a, long b, long c) {
  const long g = gcd(a, b);
  if (gcd(b, c) != g || gcd(a, c) != g) return false;
  const int x = nu2(a), y = nu2(b), z = nu2(c);
  return (x == 0 && y == 0 && z == 0) || !(x == y && y == z);
}

inline std::vector<long> euclid_quotients(long a, long b) {
  long r0 = std::max(a, b), r1 = std::min(a, b);
  std::vector<long> q;
  while (r1 != 0) {
    q.push_back(r0 / r1);
    const long r = r0 % r1;
    r0 = r1;
    r1 = r;
  }
  return q;
}

// Quiddity of a triangulation: q_i counts the triangles at vertex i + 1
// (vertex 0 is m), which is c_{i,i+2} of its frieze.
inline std::vector<Scalar> triangle_counts(const frieze::Triangulation& t) {
  const int m = t.size();
  std::vector<Scalar> q(m, Scalar());
  for (const auto& tri : t.triangles()) {
    for (int v : {tri.a, tri.b, tri.c}) q[v - 1] += Scalar(1);
  }
  return q;
}

// Every quiddity in [1, bound]^m, built row by row and kept when the pattern
// is a glide-symmetric frieze with all interior entries in d \ {0}.
inline std::set<frieze::FriezeMap> brute_force_friezes(const frieze::BoundarySequence& b,
                                                       const frieze::DomainSpec& d,
                                                       long bound) {
  const int m = b.size();
  std::set<frieze::FriezeMap> out;
  std::vector<long> q(m, 1);
  while (true) {
    std::vector<Scalar> qs(q.begin(), q.end());
    const frieze::PatternGrid g = frieze::build_pattern(b, frieze::QuiddityCycle(qs));
    bool ok = frieze::validate_local(g).ok() && frieze::check_glide(g);
    for (int i = 0; ok && i < m; ++i) {
      for (long j = i + 2; ok && j <= i + m - 2; ++j) ok = d.contains_nonzero(g.at(i, j));
    }
    if (ok) out.insert(frieze::to_polygon(g));
    int pos = 0;
    while (pos < m && q[pos] == bound) q[pos++] = 1;
    if (pos == m) break;
    ++q[pos];
  }
  return out;
}

inline std::set<frieze::FriezeMap> classic_friezes(int m) {
  std::set<frieze::FriezeMap> out;
  for (const auto& t : frieze::enumerate_triangulations(m)) {
    out.insert(frieze::frieze_from_triangulation(t));
  }
  return out;
}

}  // namespace oracle
