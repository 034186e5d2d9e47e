#pragma once

#include <array>
#include <compare>
#include <vector>

#include "frieze/frieze.hpp"

namespace frieze {

/// Vertices of one triangle, sorted increasingly.
struct Triangle {
  int a = 0, b = 0, c = 0;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// An m-gon (vertices 1..m) with m - 3 pairwise noncrossing diagonals.
class Triangulation {
 public:
  /// Diagonals may be given in either orientation. Throws
  /// std::invalid_argument on a wrong count, an edge or out-of-range pair,
  /// a duplicate, or two crossing diagonals.
  Triangulation(int m, std::vector<VertexPair> diagonals);

  int size() const { return m_; }
  /// Sorted, each with p < q.
  const std::vector<VertexPair>& diagonals() const { return diagonals_; }
  bool is_edge(int p, int q) const;
  /// Edge or diagonal.
  bool connected(int p, int q) const;
  /// The m - 2 triangles, sorted.
  const std::vector<Triangle>& triangles() const { return triangles_; }

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.m_ == b.m_ && a.diagonals_ == b.diagonals_;
  }
  friend auto operator<=>(const Triangulation& a, const Triangulation& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.diagonals_ <=> b.diagonals_;
  }

 private:
  int m_;
  std::vector<VertexPair> diagonals_;
  std::vector<Triangle> triangles_;
  std::vector<char> adjacent_;  // m x m, 0-based
};

/// Conway-Coxeter labels seen from vertex v: entry w - 1 is c_{v,w}.
/// Vertex v gets 0, its two polygon neighbours 1, and any triangle with
/// exactly two labelled corners labels the third with their sum.
std::vector<Integer> cc_labels_from(const Triangulation& t, int v);

/// Same labelling, processing triangles in the supplied order on every
/// sweep. `order` must be a permutation of t.triangles().
std::vector<Integer> cc_labels_from(const Triangulation& t, int v,
                                    const std::vector<Triangle>& order);

/// The classic frieze of t: all edges 1, entries from cc_labels_from.
FriezeMap frieze_from_triangulation(const Triangulation& t);

/// Restriction of f to the strictly increasing vertex list verts (size >= 3);
/// vertex verts[a] becomes vertex a + 1.
FriezeMap cut_subpolygon(const FriezeMap& f, const std::vector<int>& verts);

struct AccordionResult {
  Triangulation triangulation;
  int k;  // c_{1,k} = a, c_{k,k+1} = 1, c_{1,k+1} = b; k + 1 is taken mod m
};

/// Builds a triangulation from the quotients of the Euclidean algorithm on
/// (max(a, b), min(a, b)) by fanning arcs alternately left and right along
/// the number line. Requires gcd(a, b) = 1; throws std::invalid_argument.
AccordionResult accordion(const Integer& a, const Integer& b);

/// Euclidean quotients q_1, ..., q_{l+1} of (max(a, b), min(a, b)).
std::vector<Integer> euclid_quotients(const Integer& a, const Integer& b);

struct GlueResult {
  Triangulation triangulation;
  /// maps[t][v - 1] is the glued vertex of vertex v of the t-th input.
  std::array<std::vector<int>, 3> maps;
};

/// Glues three triangulations onto the sides of a new central triangle. The
/// marked edge of input t is (marks[t], marks[t] + 1) (mod m_t). Vertex
/// marks[t] + 1 of input t is identified with vertex marks[t] of input
/// t - 1 (cyclically), so the three marked edges become the sides of one
/// triangle of the result, an (m_1 + m_2 + m_3 - 3)-gon numbered
/// counterclockwise starting at vertex marks[0] + 1 of the first input.
GlueResult glue_three(const std::array<const Triangulation*, 3>& parts,
                      const std::array<int, 3>& marks);

/// All triangulations of the m-gon (Catalan(m - 2) of them), sorted.
/// Guardrail 3 <= m <= 12; throws std::invalid_argument outside it.
std::vector<Triangulation> enumerate_triangulations(int m);

}  // namespace frieze
