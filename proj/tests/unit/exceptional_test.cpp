#include <gtest/gtest.h>

#include <random>

#include "random_poly.hpp"
#include "sangaku/errors.hpp"
#include "sangaku/exceptional.hpp"
#include "sangaku/polyring.hpp"

using namespace sangaku;

namespace {

Poly P(const char* s) { return parse_poly(s); }

UPoly from_roots(const std::vector<Rational>& rs) { return UPoly::from_roots(rs); }

// Squarefree polynomial with distinct rational roots in (0, 8) times a
// positive quadratic. With `one_per_cell` every root sits strictly inside
// its own cell of the 13-step grid on [0, 8].
UPoly random_squarefree(std::mt19937_64& rng, bool one_per_cell) {
  std::vector<Rational> rs;
  const int count = std::uniform_int_distribution<int>(1, 6)(rng);
  std::vector<long> cells;
  while (static_cast<int>(rs.size()) < count) {
    Rational r;
    if (one_per_cell) {
      const long cell = std::uniform_int_distribution<long>(0, 12)(rng);
      if (std::find(cells.begin(), cells.end(), cell) != cells.end()) continue;
      cells.push_back(cell);
      r = Rational(8 * (10 * cell + std::uniform_int_distribution<long>(1, 9)(rng)), 130);
    } else {
      r = Rational(std::uniform_int_distribution<long>(1, 79)(rng), 10);
    }
    r.canonicalize();
    if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
  }
  return from_roots(rs) * UPoly({5, 2, 1});
}

}  // namespace

TEST(Discriminant, SmallExamples) {
  for (ResultantBackend b : {ResultantBackend::sylvester, ResultantBackend::prs, ResultantBackend::modular}) {
    EXPECT_EQ(discriminant(P("y^2 - k"), {}, b), P("-4*k"));
    // (y - k)(y - 2k): disc = 9k^2 - 8k^2, and Res(f, f') = -disc for n = 2.
    EXPECT_EQ(discriminant(P("y^2 - 3*k*y + 2*k^2"), {}, b), P("-k^2"));
    const Poly d = discriminant(P("(y - 1)*(y - 2)*(y + 3)"), {}, b);
    EXPECT_TRUE(d.is_constant());
    EXPECT_NE(d.constant_value(), 0);
  }
}

TEST(Discriminant, RepeatedRootIsStructural) {
  EXPECT_THROW(discriminant(P("(y - k)^2*(y + 1)")), StructuralError);
  EXPECT_THROW(discriminant(P("k^2 + 1")), PreconditionError);
}

TEST(Discriminant, PointwiseMatchesSymbolic) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly p = sangaku::testing::random_nonconstant(rng, {Var::y, Var::k}, 4, 20);
    const Poly d = resultant(p, derivative(p, Var::y), Var::y, ResultantBackend::sylvester);
    for (int i = 0; i < 3; ++i) {
      Rational k0(num(rng), den(rng));
      k0.canonicalize();
      const Rational expected = d.is_zero() ? Rational(0) : evaluate(d.with_vars(VarSet{Var::k}), {{Var::k, k0}});
      EXPECT_EQ(discriminant_at(p, k0), expected) << to_string(p) << " at " << to_string(k0);
    }
  }
}

TEST(Discriminant, PointwiseDegreeDrop) {
  // k y^2 + y + 1 loses its leading term at k = 0.
  const Poly p = P("k*y^2 + y + 1");
  EXPECT_EQ(discriminant_at(p, Rational(0)), Rational(0));
  EXPECT_EQ(evaluate(discriminant(p), {{Var::k, Rational(0)}}), Rational(0));
  EXPECT_EQ(discriminant_at(p, Rational(1, 4)), evaluate(discriminant(p), {{Var::k, Rational(1, 4)}}));
}

TEST(GridSigns, Examples) {
  const UPoly d = from_roots({Rational(1), Rational(2)});
  const GridScan scan = grid_signs(d, Rational(0), Rational(3), 7);
  EXPECT_EQ(scan.points.size(), 8u);
  ASSERT_EQ(scan.brackets.size(), 2u);
  EXPECT_LT(scan.brackets[0].lo, Rational(1));
  EXPECT_GT(scan.brackets[0].hi, Rational(1));
  EXPECT_TRUE(scan.zeros.empty());

  EXPECT_TRUE(grid_signs(UPoly({1, 0, 1}), Rational(-5), Rational(5), 50).brackets.empty());

  // Exact zeros at grid points are reported separately, never as brackets.
  const GridScan on = grid_signs(d, Rational(0), Rational(3), 3);
  EXPECT_TRUE(on.brackets.empty());
  ASSERT_EQ(on.zeros.size(), 2u);
  EXPECT_EQ(on.zeros[0], Rational(1));

  EXPECT_THROW(grid_signs(d, Rational(0), Rational(3), 1), PreconditionError);
}

TEST(GridSigns, CountIsLowerBound) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const UPoly f = random_squarefree(rng, false);
    EXPECT_LE(grid_signs(f, Rational(0), Rational(8), 13).brackets.size(),
              isolate_roots(f, Rational(0), Rational(8)).size());
  }
}

TEST(GridSigns, BracketsHoldExactlyOneIsolatedRoot) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const UPoly f = random_squarefree(rng, true);
    const GridScan scan = grid_signs(f, Rational(0), Rational(8), 13);
    const auto roots = isolate_roots(f, Rational(0), Rational(8));
    EXPECT_EQ(scan.brackets.size(), roots.size());
    for (const SignBracket& b : scan.brackets) {
      int inside = 0;
      for (const auto& iv : roots) {
        if (b.lo <= iv.lo && iv.hi <= b.hi) {
          ++inside;
        } else if (iv.lo < b.hi && b.lo < iv.hi) {
          // Straddles an endpoint: decide by refining.
          const IsolatingInterval fine = refine_root(iv, f, Rational(1, 1000000));
          if (b.lo < fine.hi && fine.hi < b.hi) ++inside;
        }
      }
      EXPECT_EQ(inside, 1);
    }
  }
}

TEST(GridSigns, PointwiseMatchesSymbolic) {
  const Poly p = P("y^3 - 3*y*k + k^2 - 2");
  const UPoly d = to_upoly(discriminant(p), Var::k);
  const GridScan a = grid_signs(d, Rational(-3), Rational(4), 21);
  const GridScan b = grid_signs_pointwise(p, Rational(-3), Rational(4), 21);
  EXPECT_EQ(a.signs, b.signs);
  ASSERT_EQ(a.brackets.size(), b.brackets.size());
  EXPECT_FALSE(a.brackets.empty());
}

TEST(GridSigns, PointwiseDeadline) {
  GridOptions opt;
  opt.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  EXPECT_THROW(grid_signs_pointwise(P("y^2 - k"), Rational(1), Rational(2), 4, opt), BudgetExceeded);
}

TEST(Exceptional, ToyRoots) {
  const ExceptionalReport rep = exceptional_candidates(P("(k - 1)*(k - 2)"), Rational(10));
  ASSERT_EQ(rep.roots.size(), 2u);
  EXPECT_EQ(rep.roots[0].lo, Rational(1));
  EXPECT_EQ(rep.roots[0].hi, Rational(1));
  EXPECT_LT(rep.roots[1].lo, Rational(2));
  EXPECT_GE(rep.roots[1].hi, Rational(2));
}

TEST(Exceptional, SquarefreeReduction) {
  const Poly delta = P("-12*(k - 1)^2*(k - 3)*(k + 5)^3*(k^2 + 1)");
  const ExceptionalReport rep = exceptional_candidates(delta, Rational(200));
  EXPECT_TRUE(is_squarefree(rep.delta0));
  EXPECT_EQ(rep.delta0.content(), 1);
  EXPECT_TRUE(exact_quotient(to_upoly(delta, Var::k), rep.delta0).has_value());
  EXPECT_EQ(rep.delta0.degree(), 5);
  ASSERT_EQ(rep.roots.size(), 2u);
  EXPECT_EQ(rep.roots[0].hi, Rational(1));
  EXPECT_LT(rep.roots[1].lo, Rational(3));
  EXPECT_GE(rep.roots[1].hi, Rational(3));
  // Intervals stay inside [1, bound] and are disjoint.
  for (std::size_t i = 0; i < rep.roots.size(); ++i) {
    EXPECT_GE(rep.roots[i].lo, Rational(1));
    EXPECT_LE(rep.roots[i].hi, rep.bound);
    if (i > 0) {
      EXPECT_LE(rep.roots[i - 1].hi, rep.roots[i].lo);
    }
  }
}

TEST(Exceptional, ConstantAndInvalid) {
  EXPECT_TRUE(exceptional_candidates(P("7"), Rational(10)).roots.empty());
  EXPECT_THROW(exceptional_candidates(Poly(), Rational(10)), PreconditionError);
  EXPECT_THROW(exceptional_candidates(P("k*y"), Rational(10)), PreconditionError);
}
