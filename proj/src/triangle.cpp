#include "frieze/triangle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "frieze/arith.hpp"

namespace frieze {

namespace {

Integer gcd_abs(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer mod(const Integer& a, const Integer& p) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

bool divides(const Integer& p, const Integer& x) {
  return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0;
}

void require_S(const CoeffTuple& t, const char* who) {
  if (!in_S(t)) {
    throw std::invalid_argument(std::string(who) + ": tuple is not in S");
  }
}

std::string triple_str(const TriangleTriple& tr) {
  return "(" + tr.a.get_str() + "," + tr.b.get_str() + "," + tr.c.get_str() + ")";
}

}  // namespace

bool CoeffTuple::nonnegative() const {
  return a1 >= 0 && a2 >= 0 && b1 >= 0 && b2 >= 0 && c1 >= 0 && c2 >= 0;
}

std::ostream& operator<<(std::ostream& os, const CoeffTuple& t) {
  return os << "(" << t.a1 << "," << t.a2 << "," << t.b1 << "," << t.b2 << ","
            << t.c1 << "," << t.c2 << ")";
}

bool in_S(const CoeffTuple& t) {
  return gcd_abs(t.a1, t.a2) == 1 && gcd_abs(t.b1, t.b2) == 1 &&
         gcd_abs(t.c1, t.c2) == 1;
}

IntTriple delta(const CoeffTuple& t) {
  require_S(t, "delta");
  return {t.b1 * t.c1 + t.b1 * t.c2 + t.b2 * t.c2,
          t.a1 * t.c1 + t.a2 * t.c1 + t.a2 * t.c2,
          t.a1 * t.b1 + t.a1 * t.b2 + t.a2 * t.b2};
}

CoeffTuple gamma_t(const CoeffTuple& t, const Integer& s) {
  require_S(t, "gamma_t");
  return {t.a1 * s - t.a2,         t.a1 * (1 - s) + t.a2,
          -t.b2,                   t.b1 + t.b2 * (s + 1),
          t.c1 * s + t.c2 * (s - 1), t.c1 + t.c2};
}

bool classify_triangle(const TriangleTriple& tr) {
  if (tr.a < 1 || tr.b < 1 || tr.c < 1) {
    throw std::invalid_argument("classify_triangle: entries must be >= 1");
  }
  const Integer g = gcd_nat(tr.a, tr.b);
  if (gcd_nat(tr.b, tr.c) != g || gcd_nat(tr.a, tr.c) != g) return false;
  const Integer two = 2;
  const auto va = p_valuation(two, tr.a);
  const auto vb = p_valuation(two, tr.b);
  const auto vc = p_valuation(two, tr.c);
  if (va == 0 && vb == 0 && vc == 0) return true;
  return !(va == vb && vb == vc);
}

Witness coefficient_witness(const TriangleTriple& tr) {
  if (!classify_triangle(tr)) {
    throw std::invalid_argument("coefficient_witness: " + triple_str(tr) +
                                " fails the triangle conditions");
  }
  const Integer d = gcd_nat(tr.a, tr.b);
  const Integer a = tr.a / d, b = tr.b / d, c = tr.c / d;
  const Bezout bz = extended_gcd(a, b);  // u a + v b = 1
  const Integer& u = bz.u;
  const Integer& v = bz.v;

  std::vector<Integer> residues, moduli;
  for (const Integer& p : prime_divisors(d)) {
    Integer k = -1;
    if (p == 2) {
      if (!divides(p, c) && !divides(p, a) && !divides(p, b)) {
        throw std::logic_error("coefficient_witness: no even cofactor");
      }
      if (divides(p, c)) {
        k = 1;
      } else if (divides(p, a)) {
        k = mod(u + 1, p);
      } else {
        k = mod(v + 1, p);
      }
    } else {
      for (Integer r = 0; r < p; ++r) {
        if (!divides(p, u * c + r * b) && !divides(p, v * c - r * a)) {
          k = r;
          break;
        }
      }
    }
    if (k < 0) throw std::logic_error("coefficient_witness: no residue mod " + p.get_str());
    residues.push_back(k);
    moduli.push_back(p);
  }
  const Integer k = crt(residues, moduli);
  Witness w{u * c + k * b, v * c - k * a};
  if (w.a1 * tr.a + tr.b * w.b2 != tr.c || gcd_abs(w.a1, tr.b) != 1 ||
      gcd_abs(tr.a, w.b2) != 1) {
    throw std::logic_error("coefficient_witness: postcondition failed for " +
                           triple_str(tr));
  }
  return w;
}

std::vector<CoeffTuple> iceberg_descent_trace(const CoeffTuple& start) {
  require_S(start, "iceberg_descent");
  if (start.a1 < 0) throw std::invalid_argument("iceberg_descent: need a1 >= 0");
  const IntTriple target = delta(start);
  if (target[0] < 1 || target[1] < 1 || target[2] < 1) {
    throw std::invalid_argument("iceberg_descent: Delta must be positive");
  }
  std::vector<CoeffTuple> trace{start};
  if (start.nonnegative()) return trace;
  if (start.a1 == 0) {
    // gcd(0, a2) = 1 forces b = 1, and (0, 1, a - c, c, 0, 1) has Delta (a, 1, c).
    CoeffTuple t{0, 1, target[0] - target[2], target[2], 0, 1};
    if (target[1] != 1 || !t.nonnegative()) {
      throw std::invalid_argument("iceberg_descent: a1 = 0 needs b = 1 and c <= a");
    }
    trace.push_back(t);
    return trace;
  }
  CoeffTuple cur = start;
  while (!cur.nonnegative()) {
    if (cur.a1 <= 0) throw std::logic_error("iceberg_descent: a1 dropped to 0");
    CoeffTuple next = gamma_t(cur, ceil_div(cur.a2, cur.a1));
    if (next.b2 < 0 && !(cur.b2 < next.b2)) {
      throw std::logic_error("iceberg_descent: b2 did not increase");
    }
    trace.push_back(next);
    cur = std::move(next);
  }
  return trace;
}

CoeffTuple iceberg_descent(const CoeffTuple& t) {
  return iceberg_descent_trace(t).back();
}

RealizedTriangle realize_triangle(const TriangleTriple& tr) {
  if (!classify_triangle(tr)) {
    throw std::invalid_argument("realize_triangle: " + triple_str(tr) +
                                " fails the triangle conditions");
  }
  const IntTriple vals{tr.a, tr.b, tr.c};
  // perm[s] is the requested side realized in slot s of (i,j), (j,k), (k,i).
  std::array<int, 3> perm{0, 1, 2};
  const int smallest = static_cast<int>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  std::rotate(perm.begin(), perm.begin() + (smallest + 1) % 3, perm.end());
  Witness w = coefficient_witness({vals[perm[0]], vals[perm[1]], vals[perm[2]]});
  if (w.a1 < 0) {
    std::swap(perm[0], perm[1]);
    std::swap(w.a1, w.b2);
  }
  const Integer a = vals[perm[0]], b = vals[perm[1]], c = vals[perm[2]];

  const CoeffTuple start = w.a1 == 0 ? CoeffTuple{0, 1, a - c, c, 0, 1}
                                     : CoeffTuple{w.a1, b, a - w.b2, w.b2, 0, 1};
  const CoeffTuple x = iceberg_descent(start);

  const AccordionResult A = accordion(x.a1, x.a2);
  const AccordionResult B = accordion(x.b1, x.b2);
  const AccordionResult C = accordion(x.c1, x.c2);
  const GlueResult g = glue_three({&A.triangulation, &B.triangulation, &C.triangulation},
                                  {A.k, B.k, C.k});
  const int vi = g.maps[1][0], vj = g.maps[2][0], vk = g.maps[0][0];

  // Side s of the realized triangle carries requested value perm[s].
  const std::array<std::array<int, 2>, 3> slot{{{vi, vj}, {vj, vk}, {vk, vi}}};
  std::array<std::array<int, 2>, 3> side{};
  for (int s = 0; s < 3; ++s) side[perm[s]] = slot[s];
  auto common = [](const std::array<int, 2>& x, const std::array<int, 2>& y) {
    return (x[0] == y[0] || x[0] == y[1]) ? x[0] : x[1];
  };
  RealizedTriangle out{g.triangulation, common(side[0], side[2]),
                       common(side[0], side[1]), common(side[1], side[2])};

  const auto li = cc_labels_from(out.triangulation, out.i);
  const auto lj = cc_labels_from(out.triangulation, out.j);
  if (li[out.j - 1] != tr.a || lj[out.k - 1] != tr.b || li[out.k - 1] != tr.c) {
    throw std::logic_error("realize_triangle: label check failed for " + triple_str(tr));
  }
  return out;
}

CoeffTuple decompose_triangle(const Triangulation& t, int i, int j, int k) {
  return decompose_triangle(t, frieze_from_triangulation(t), i, j, k);
}

CoeffTuple decompose_triangle(const Triangulation& t, const FriezeMap& f, int i,
                              int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= t.size())) {
    throw std::invalid_argument("decompose_triangle: need 1 <= i < j < k <= m");
  }
  if (f.size() != t.size()) throw std::invalid_argument("decompose_triangle: size mismatch");
  auto in_ij = [&](int v) { return i <= v && v <= j; };
  auto in_jk = [&](int v) { return j <= v && v <= k; };
  auto in_ki = [&](int v) { return v >= k || v <= i; };
  for (const Triangle& tri : t.triangles()) {
    std::array<int, 3> v{tri.a, tri.b, tri.c};
    do {
      if (in_ij(v[0]) && in_jk(v[1]) && in_ki(v[2])) {
        const int ip = v[0], jp = v[1], kp = v[2];
        auto c = [&](int p, int q) { return f.at(p, q).numerator(); };
        return {c(k, kp), c(jp, k), c(i, ip), c(kp, i), c(j, jp), c(ip, j)};
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
  throw std::logic_error("decompose_triangle: no separating triangle");
}

}  // namespace frieze
