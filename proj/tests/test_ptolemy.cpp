#include <gtest/gtest.h>

#include "frieze/propagation.hpp"
#include "frieze/ptolemy.hpp"
#include "frieze/triangulation.hpp"

using namespace frieze;

TEST(Ptolemy, SquareRelation) {
  const FriezeMap f =
      to_polygon(build_pattern(BoundarySequence({3, 7, 5, 3}), QuiddityCycle({4, 9, 4, 9})));
  // 9 * 4 = 3 * 5 + 7 * 3
  EXPECT_TRUE(ptolemy_holds(f, 1, 2, 3, 4));
  EXPECT_TRUE(verify_all_ptolemy(f).ok());
}

TEST(Ptolemy, DegenerateQuadruplesHold) {
  const FriezeMap f = frieze_from_triangulation(Triangulation(6, {{2, 4}, {2, 5}, {2, 6}}));
  EXPECT_TRUE(ptolemy_holds(f, 1, 1, 3, 5));
  EXPECT_TRUE(ptolemy_holds(f, 2, 4, 4, 6));
  EXPECT_TRUE(ptolemy_holds(f, 3, 3, 3, 3));
  EXPECT_THROW(ptolemy_holds(f, 2, 1, 3, 4), std::out_of_range);
  EXPECT_THROW(ptolemy_holds(f, 1, 2, 3, 7), std::out_of_range);
}

TEST(Ptolemy, DetectsCorruption) {
  auto e = frieze_from_triangulation(Triangulation(6, {{2, 4}, {2, 5}, {2, 6}})).entries();
  e[{1, 4}] = 5;
  const FriezeMap bad(6, e);
  const ValidationReport r = verify_all_ptolemy(bad);
  ASSERT_FALSE(r.ok());
  for (const auto& v : r.violations) {
    EXPECT_EQ(v.rule, "ptolemy");
    const auto& x = v.indices;
    EXPECT_TRUE(x[0] == 1 || x[1] == 1 || x[2] == 4 || x[3] == 4 || x[1] == 4 || x[2] == 1);
  }
  EXPECT_EQ(r.violations, verify_all_ptolemy_serial(bad).violations);
}

TEST(Ptolemy, ParallelMatchesSerialOrder) {
  for (const auto& t : enumerate_triangulations(8)) {
    auto e = frieze_from_triangulation(t).entries();
    e[{2, 6}] += Scalar(1);
    const FriezeMap f(8, e);
    const auto par = verify_all_ptolemy(f).violations;
    ASSERT_EQ(par, verify_all_ptolemy_serial(f).violations);
    ASSERT_TRUE(std::is_sorted(par.begin(), par.end(), [](const Violation& a, const Violation& b) {
      return a.indices < b.indices;
    }));
  }
}
