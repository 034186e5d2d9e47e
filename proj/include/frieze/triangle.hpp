#pragma once

#include <array>
#include <compare>
#include <ostream>
#include <vector>

#include "frieze/scalar.hpp"
#include "frieze/triangulation.hpp"

namespace frieze {

struct CoeffTuple {
  Integer a1, a2, b1, b2, c1, c2;
  friend bool operator==(const CoeffTuple&, const CoeffTuple&) = default;
  bool nonnegative() const;
};

std::ostream& operator<<(std::ostream& os, const CoeffTuple& t);

/// Side labels (c_{i,j}, c_{j,k}, c_{k,i}) of a triangle.
struct TriangleTriple {
  Integer a, b, c;
  friend bool operator==(const TriangleTriple&, const TriangleTriple&) = default;
};

using IntTriple = std::array<Integer, 3>;

/// gcd(a1,a2) = gcd(b1,b2) = gcd(c1,c2) = 1.
bool in_S(const CoeffTuple& t);

/// Throws std::invalid_argument unless in_S(t).
IntTriple delta(const CoeffTuple& t);

/// Throws std::invalid_argument unless in_S(t).
CoeffTuple gamma_t(const CoeffTuple& t, const Integer& param);

/// Equal pairwise gcds, and 2-adic valuations either all zero or not all
/// equal. Throws std::invalid_argument unless a, b, c >= 1.
bool classify_triangle(const TriangleTriple& tr);

struct Witness {
  Integer a1, b2;
};

/// Integers with a1 a + b b2 = c, gcd(a1, b) = gcd(a, b2) = 1. Built from a
/// Bezout pair of (a/d, b/d) shifted by k (b/d, -a/d), with k fixed modulo
/// each prime of d and combined by CRT. Throws std::invalid_argument when
/// classify_triangle is false.
Witness coefficient_witness(const TriangleTriple& tr);

/// Repeated Gamma_t with t = ceil(a2 / a1) until all entries are >= 0.
/// Needs a1 >= 0, Delta(t) positive, and (for progress) Delta's third
/// component no larger than the first. Throws std::logic_error if a step
/// fails to raise a negative b2 strictly.
CoeffTuple iceberg_descent(const CoeffTuple& t);

/// The tuples visited by iceberg_descent, input first, result last.
std::vector<CoeffTuple> iceberg_descent_trace(const CoeffTuple& t);

struct RealizedTriangle {
  Triangulation triangulation;
  int i, j, k;  // c_{i,j} = a, c_{j,k} = b, c_{k,i} = c
};

/// Builds a triangulation carrying tr as labels of a triangle: witness,
/// descent, one accordion per coefficient pair, gluing. Verified with
/// cc_labels_from before returning. Throws std::invalid_argument when
/// classify_triangle is false.
RealizedTriangle realize_triangle(const TriangleTriple& tr);

/// For vertices i < j < k, finds a triangle (i', j', k') of t with i' in the
/// arc [i, j], j' in [j, k] and k' in [k, i], and returns
/// (c_{k,k'}, c_{j',k}, c_{i,i'}, c_{k',i}, c_{j,j'}, c_{i',j}).
CoeffTuple decompose_triangle(const Triangulation& t, int i, int j, int k);

/// Same, reading entries from an already computed frieze of t.
CoeffTuple decompose_triangle(const Triangulation& t, const FriezeMap& f, int i,
                              int j, int k);

}  // namespace frieze
