#include <gtest/gtest.h>

#include <random>

#include "frieze/triangle.hpp"
#include "oracles.hpp"

using namespace frieze;

namespace {

IntTriple triple(long a, long b, long c) { return {a, b, c}; }

CoeffTuple random_in_S(std::mt19937& rng, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  auto pair = [&](Integer& x, Integer& y) {
    long p = 0, q = 0;
    do {
      p = d(rng);
      q = d(rng);
    } while (oracle::gcd(p, q) != 1);
    x = p;
    y = q;
  };
  CoeffTuple t;
  pair(t.a1, t.a2);
  pair(t.b1, t.b2);
  pair(t.c1, t.c2);
  return t;
}

}  // namespace

TEST(Delta, WorkedValues) {
  EXPECT_EQ(delta({0, 1, 5 - 2, 2, 0, 1}), triple(5, 1, 2));
  EXPECT_EQ(delta({1, 1, 1, 0, 1, 1}), triple(2, 3, 1));
  EXPECT_EQ(delta({2, 3, 3, -1, 0, 1}), triple(2, 3, 1));
  EXPECT_THROW(delta({2, 4, 1, 1, 1, 1}), std::invalid_argument);
}

TEST(Gamma, WorkedValue) {
  EXPECT_EQ(gamma_t({2, 3, 3, -1, 0, 1}, 2), (CoeffTuple{1, 1, 1, 0, 1, 1}));
}

TEST(Gamma, PreservesDeltaAndS) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> ts(-30, 30);
  for (int n = 0; n < 1000; ++n) {
    const CoeffTuple x = random_in_S(rng, 60);
    const CoeffTuple y = gamma_t(x, ts(rng));
    ASSERT_TRUE(in_S(y)) << x;
    ASSERT_EQ(delta(y), delta(x)) << x;
  }
}

TEST(Classify, Examples) {
  EXPECT_FALSE(classify_triangle({1, 2, 2}));
  EXPECT_TRUE(classify_triangle({1, 1, 1}));
  EXPECT_FALSE(classify_triangle({2, 2, 2}));
  EXPECT_TRUE(classify_triangle({2, 4, 6}));
  EXPECT_TRUE(classify_triangle({4, 2, 2}));
  EXPECT_FALSE(classify_triangle({2, 3, 4}));
  EXPECT_THROW(classify_triangle({0, 1, 1}), std::invalid_argument);
}

TEST(Classify, MatchesMachineIntegerPredicate) {
  for (long a = 1; a <= 30; ++a) {
    for (long b = 1; b <= 30; ++b) {
      for (long c = 1; c <= 30; ++c) {
        ASSERT_EQ(classify_triangle({a, b, c}), oracle::triangle_predicate(a, b, c));
      }
    }
  }
}

TEST(Witness, Postcondition) {
  for (long a = 1; a <= 40; ++a) {
    for (long b = 1; b <= 40; ++b) {
      for (long c = 1; c <= 40; ++c) {
        if (!oracle::triangle_predicate(a, b, c)) {
          ASSERT_THROW(coefficient_witness({a, b, c}), std::invalid_argument);
          continue;
        }
        const Witness w = coefficient_witness({a, b, c});
        ASSERT_EQ(w.a1 * a + b * w.b2, c);
        ASSERT_EQ(oracle::gcd(w.a1.get_si(), b), 1);
        ASSERT_EQ(oracle::gcd(a, w.b2.get_si()), 1);
      }
    }
  }
}

TEST(Witness, SmallSearchAgrees) {
  // A witness with |a1|, |b2| <= 10 exists for (2,3,1) and (2,4,6).
  for (const auto& tr : {TriangleTriple{2, 3, 1}, TriangleTriple{2, 4, 6}}) {
    bool found = false;
    for (long x = -10; x <= 10 && !found; ++x) {
      for (long y = -10; y <= 10 && !found; ++y) {
        found = x * tr.a + tr.b * y == tr.c && oracle::gcd(x, tr.b.get_si()) == 1 &&
                oracle::gcd(tr.a.get_si(), y) == 1;
      }
    }
    EXPECT_TRUE(found);
    EXPECT_NO_THROW(coefficient_witness(tr));
  }
}

TEST(Descent, OneStepExample) {
  EXPECT_EQ(iceberg_descent({2, 3, 3, -1, 0, 1}), (CoeffTuple{1, 1, 1, 0, 1, 1}));
  const CoeffTuple dry{1, 1, 1, 0, 1, 1};
  EXPECT_EQ(iceberg_descent_trace(dry).size(), 1u);
  EXPECT_THROW(iceberg_descent({-1, 2, 1, 1, 0, 1}), std::invalid_argument);
}

TEST(Descent, RandomAdmissibleTriples) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<long> d(1, 50);
  int done = 0;
  while (done < 500) {
    long v[3] = {d(rng), d(rng), d(rng)};
    if (!oracle::triangle_predicate(v[0], v[1], v[2])) continue;
    std::sort(v, v + 3, std::greater<>());  // third component minimal
    Witness w = coefficient_witness({v[0], v[1], v[2]});
    if (w.a1 < 0) {
      std::swap(v[0], v[1]);
      std::swap(w.a1, w.b2);
    }
    const CoeffTuple start = w.a1 == 0 ? CoeffTuple{0, 1, v[0] - v[2], v[2], 0, 1}
                                       : CoeffTuple{w.a1, v[1], v[0] - w.b2, w.b2, 0, 1};
    ASSERT_EQ(delta(start), triple(v[0], v[1], v[2]));
    const auto trace = iceberg_descent_trace(start);
    for (std::size_t s = 1; s < trace.size(); ++s) {
      if (trace[s].b2 < 0) ASSERT_LT(trace[s - 1].b2, trace[s].b2);
    }
    ASSERT_LE(trace.size(), static_cast<std::size_t>(Integer(abs(start.b2)).get_si() + 2));
    const CoeffTuple x = trace.back();
    ASSERT_TRUE(x.nonnegative());
    ASSERT_TRUE(in_S(x));
    ASSERT_EQ(delta(x), triple(v[0], v[1], v[2]));
    ++done;
  }
}

TEST(Realize, Examples) {
  for (const auto& tr : {TriangleTriple{1, 1, 1}, TriangleTriple{2, 3, 1}, TriangleTriple{2, 4, 6},
                         TriangleTriple{4, 2, 2}, TriangleTriple{1, 3, 2}}) {
    const RealizedTriangle r = realize_triangle(tr);
    const FriezeMap f = frieze_from_triangulation(r.triangulation);
    EXPECT_EQ(f.at(r.i, r.j), Scalar(tr.a));
    EXPECT_EQ(f.at(r.j, r.k), Scalar(tr.b));
    EXPECT_EQ(f.at(r.k, r.i), Scalar(tr.c));
  }
  EXPECT_THROW(realize_triangle({1, 2, 2}), std::invalid_argument);
}

TEST(Realize, DecompositionRecoversTheTriple) {
  for (long a = 1; a <= 12; ++a) {
    for (long b = 1; b <= 12; ++b) {
      for (long c = 1; c <= 12; ++c) {
        if (!oracle::triangle_predicate(a, b, c)) continue;
        const RealizedTriangle r = realize_triangle({a, b, c});
        std::array<int, 3> v{r.i, r.j, r.k};
        std::sort(v.begin(), v.end());
        const CoeffTuple x = decompose_triangle(r.triangulation, v[0], v[1], v[2]);
        const FriezeMap f = frieze_from_triangulation(r.triangulation);
        const IntTriple expected{f.at(v[0], v[1]).numerator(), f.at(v[1], v[2]).numerator(),
                                 f.at(v[2], v[0]).numerator()};
        ASSERT_EQ(delta(x), expected);
        ASSERT_TRUE(x.nonnegative());
      }
    }
  }
}

TEST(Decompose, HexagonExample) {
  const Triangulation t(6, {{2, 4}, {2, 5}, {2, 6}});
  const CoeffTuple x = decompose_triangle(t, 1, 3, 5);
  EXPECT_EQ(delta(x), triple(4, 2, 2));
  EXPECT_TRUE(x.nonnegative());
  EXPECT_TRUE(classify_triangle({4, 2, 2}));
}

TEST(Decompose, TriangleOfTheTriangulation) {
  const Triangulation t(6, {{2, 4}, {2, 5}, {2, 6}});
  const CoeffTuple x = decompose_triangle(t, 2, 4, 5);
  EXPECT_EQ(delta(x), triple(1, 1, 1));
  EXPECT_TRUE(x.nonnegative());
  EXPECT_THROW(decompose_triangle(t, 3, 2, 5), std::invalid_argument);
}

TEST(Decompose, ExhaustiveSmallPolygons) {
  for (int m = 3; m <= 7; ++m) {
    for (const auto& t : enumerate_triangulations(m)) {
      const FriezeMap f = frieze_from_triangulation(t);
      for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
          for (int k = j + 1; k <= m; ++k) {
            const CoeffTuple x = decompose_triangle(t, f, i, j, k);
            ASSERT_TRUE(x.nonnegative());
            ASSERT_TRUE(in_S(x));
            ASSERT_EQ(delta(x), (IntTriple{f.at(i, j).numerator(), f.at(j, k).numerator(),
                                           f.at(k, i).numerator()}));
          }
        }
      }
    }
  }
}

TEST(Soundness, ClassicTriplesSatisfyThePredicate) {
  for (int m = 3; m <= 8; ++m) {
    for (const auto& t : enumerate_triangulations(m)) {
      const FriezeMap f = frieze_from_triangulation(t);
      for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
          for (int k = j + 1; k <= m; ++k) {
            ASSERT_TRUE(classify_triangle({f.at(i, j).numerator(), f.at(j, k).numerator(),
                                           f.at(k, i).numerator()}));
          }
        }
      }
    }
  }
}
