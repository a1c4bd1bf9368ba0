#include <gtest/gtest.h>

#include "sgeo/rational.hpp"
#include "sgeo/simplex.hpp"

using sgeo::Rational;
using namespace sgeo::lp;

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST(Simplex, TextbookMaximum) {
  // max 3x + 5y  s.t.  x <= 4, 2y <= 12, 3x + 2y <= 18.
  const ExactSimplex<Rational>::Matrix a{{1, 0}, {0, 2}, {3, 2}};
  const std::vector<Rational> b{4, 12, 18}, c{3, 5};
  const auto sol = ExactSimplex<Rational>(a, b, c).solve();
  ASSERT_EQ(sol.status, Status::optimal);
  EXPECT_EQ(sol.value, Rational(36));
  EXPECT_EQ(sol.primal, (std::vector<Rational>{2, 6}));
  // Dual: b.y equals the optimum, y >= 0 and A^T y >= c.
  EXPECT_EQ(dot(b, sol.dual), sol.value);
  for (std::size_t j = 0; j < c.size(); ++j) {
    Rational col;
    for (std::size_t i = 0; i < b.size(); ++i) col += a[i][j] * sol.dual[i];
    EXPECT_GE(col, c[j]);
  }
  for (const Rational& y : sol.dual) EXPECT_GE(y, Rational(0));
}

TEST(Simplex, FractionalOptimum) {
  // max x + y  s.t.  2x + y <= 1, x + 2y <= 1.
  const auto sol = ExactSimplex<Rational>({{2, 1}, {1, 2}}, {1, 1}, {1, 1}).solve();
  ASSERT_EQ(sol.status, Status::optimal);
  EXPECT_EQ(sol.value, Rational(2, 3));
  EXPECT_EQ(sol.primal, (std::vector<Rational>{Rational(1, 3), Rational(1, 3)}));
}

TEST(Simplex, NegativeRightHandSide) {
  // max -x  s.t.  -x <= -2 (x >= 2).
  const auto sol = ExactSimplex<Rational>({{-1}}, {-2}, {-1}).solve();
  ASSERT_EQ(sol.status, Status::optimal);
  EXPECT_EQ(sol.value, Rational(-2));
}

TEST(Simplex, InfeasibleAndUnbounded) {
  EXPECT_EQ(ExactSimplex<Rational>({{1}, {-1}}, {1, -2}, {1}).solve().status, Status::infeasible);
  EXPECT_EQ(ExactSimplex<Rational>({{-1}}, {1}, {1}).solve().status, Status::unbounded);
}

TEST(Simplex, Cutoff) {
  const auto sol = ExactSimplex<Rational>({{1}}, {10}, {1}).solve(Rational(5));
  EXPECT_EQ(sol.status, Status::cutoff);
}

TEST(Simplex, DegenerateProblemTerminates) {
  // Bland's rule on a classically cycling instance (Beale).
  const ExactSimplex<Rational>::Matrix a{{Rational(1, 4), -60, Rational(-1, 25), 9},
                                         {Rational(1, 2), -90, Rational(-1, 50), 3},
                                         {0, 0, 1, 0}};
  const auto sol = ExactSimplex<Rational>(a, {0, 0, 1}, {Rational(3, 4), -150, Rational(1, 50), -6}).solve();
  ASSERT_EQ(sol.status, Status::optimal);
  EXPECT_EQ(sol.value, Rational(1, 20));
}
