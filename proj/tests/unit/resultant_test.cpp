#include <gtest/gtest.h>

#include <random>

#include "random_poly.hpp"
#include "sangaku/errors.hpp"
#include "sangaku/modular.hpp"
#include "sangaku/polyring.hpp"
#include "sangaku/resultant.hpp"

using namespace sangaku;
using sangaku::testing::random_nonconstant;
using sangaku::testing::random_poly;

namespace {

Poly P(const char* s) { return parse_poly(s); }

constexpr ResultantBackend kAll[] = {ResultantBackend::sylvester, ResultantBackend::prs,
                                     ResultantBackend::modular, ResultantBackend::automatic};

// Random polynomial in (x, k) with x-degree exactly in [1, 8].
Poly random_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(1, 8);
  const int dx = deg(rng);
  const int dk = std::uniform_int_distribution<int>(0, 3)(rng);
  std::uniform_int_distribution<long> coeff(-100, 100);
  std::vector<Poly::Term> terms;
  for (int i = 0; i <= dx; ++i) {
    for (int j = 0; j <= dk; ++j) {
      if (rng() % 3 == 0 && i != dx) continue;
      terms.emplace_back(Monomial::of(Var::x, i) * Monomial::of(Var::k, j), Integer(coeff(rng)));
    }
  }
  terms.emplace_back(Monomial::of(Var::x, dx), Integer(1 + rng() % 100));
  return Poly::from_terms(VarSet{Var::x, Var::k}, std::move(terms));
}

}  // namespace

TEST(Resultant, SmallExamplesEveryBackend) {
  for (ResultantBackend b : kAll) {
    EXPECT_TRUE(resultant(P("x^2 - 1"), P("x - 1"), Var::x, b).is_zero()) << backend_name(b);
    EXPECT_EQ(resultant(P("x^2 + 1"), P("x - 2"), Var::x, b), P("5")) << backend_name(b);
    // Product formula: roots of x^2 - 2 are +-sqrt2, and (2 - 3)(2 - 3) = 1.
    EXPECT_EQ(resultant(P("x^2 - 2"), P("x^2 - 3"), Var::x, b), P("1")) << backend_name(b);
    EXPECT_EQ(resultant(P("y^2 - k"), P("2*y"), Var::y, b), P("-4*k")) << backend_name(b);
  }
}

TEST(Resultant, SylvesterMatrixLayout) {
  const PolyMatrix M = sylvester_matrix(P("y^2 - k"), P("2*y"), Var::y);
  ASSERT_EQ(M.size(), 3u);
  const char* expected[3][3] = {{"1", "0", "-k"}, {"2", "0", "0"}, {"0", "2", "0"}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(M[i][j], P(expected[i][j])) << i << "," << j;
  }
  // Cofactor expansion along the last column: -k * (2*2 - 0*0) = -4k.
  EXPECT_EQ(determinant(M), P("-4*k"));
  EXPECT_EQ(sylvester_matrix(P("x + 1"), P("2*x - 3"), Var::x).size(), 2u);
}

TEST(Resultant, ZeroInputIsStructural) {
  EXPECT_THROW(resultant(Poly{}, P("x"), Var::x), StructuralError);
  EXPECT_THROW(resultant(P("k"), P("k + 1"), Var::x), StructuralError);
}

TEST(Resultant, ConstantInMainVariable) {
  // Res(c, g) = c^deg g.
  for (ResultantBackend b : kAll) {
    EXPECT_EQ(resultant(P("k + 1"), P("x^3 + k"), Var::x, b), P("(k + 1)^3")) << backend_name(b);
  }
}

TEST(Resultant, BackendsAgreeOnRandomInstances) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly f = random_instance(rng);
    const Poly g = random_instance(rng);
    const Poly syl = resultant(f, g, Var::x, ResultantBackend::sylvester);
    ASSERT_EQ(resultant(f, g, Var::x, ResultantBackend::prs), syl) << "trial " << trial;
    ASSERT_EQ(resultant(f, g, Var::x, ResultantBackend::modular), syl) << "trial " << trial;
    // Bezout-type degree bound.
    const int bound = f.degree(Var::k) * g.degree(Var::x) + g.degree(Var::k) * f.degree(Var::x);
    EXPECT_LE(syl.degree(Var::k), bound);
  }
}

TEST(Resultant, VanishesExactlyWithCommonFactor) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly a = random_instance(rng);
    const Poly b = random_instance(rng);
    const bool share = trial % 2 == 0;
    const Poly f = share ? a * P("x - k") : a;
    const Poly g = share ? b * P("x - k") : b;
    const Poly r = resultant(f, g, Var::x, ResultantBackend::modular);
    const bool common = gcd_poly(f, g, Var::x).degree(Var::x) > 0;
    EXPECT_EQ(r.is_zero(), common) << "trial " << trial;
    if (share) EXPECT_TRUE(r.is_zero());
  }
}

TEST(Resultant, Multiplicativity) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly f = random_nonconstant(rng, {Var::x, Var::k}, 3, 20);
    const Poly g = random_nonconstant(rng, {Var::x, Var::k}, 2, 20);
    const Poly h = random_nonconstant(rng, {Var::x, Var::k}, 2, 20);
    EXPECT_EQ(resultant(f, g * h, Var::x), resultant(f, g, Var::x) * resultant(f, h, Var::x));
  }
}

TEST(Resultant, ThreeVariableModularMatchesPrs) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const Poly f = random_nonconstant(rng, {Var::x, Var::k, Var::y}, 2, 30);
    const Poly g = random_nonconstant(rng, {Var::x, Var::k, Var::y}, 2, 30);
    EXPECT_EQ(resultant(f, g, Var::x, ResultantBackend::modular), resultant(f, g, Var::x, ResultantBackend::prs));
  }
}

TEST(Resultant, UserDegreeBounds) {
  ResultantRequest req;
  req.f = P("y^2 - k");
  req.g = P("2*y");
  req.var = Var::y;
  req.backend = ResultantBackend::modular;
  req.degree_bounds = {{Var::k, 1}};
  EXPECT_EQ(resultant(req), P("-4*k"));
  req.f = P("y^2 - k^3");
  EXPECT_THROW(resultant(req), StructuralError);
}

TEST(Resultant, PrimeBudgetExhaustion) {
  ResultantRequest req;
  req.f = P("x^2 - 123456789123456789123456789*k");
  req.g = P("x^3 + 98765432198765432198765432*k^2 - 1");
  req.backend = ResultantBackend::modular;
  req.modular.prime_budget = 1;
  EXPECT_THROW(resultant(req), ResourceError);
}

TEST(Resultant, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(35);
  const Poly f = random_nonconstant(rng, {Var::x, Var::k}, 6, 1000);
  const Poly g = random_nonconstant(rng, {Var::x, Var::k}, 6, 1000);
  ResultantRequest req{f, g, Var::x, ResultantBackend::modular, {}, {}};
  const Poly serial = resultant(req);
  req.modular.threads = 3;
  EXPECT_EQ(resultant(req), serial);
}

TEST(Interpolation, LongPlanReproducesValues) {
  const modular::PrimeField F(modular::word_prime(0));
  std::mt19937_64 rng(8);
  const std::size_t n = modular::InterpolationPlan::kTableLimit + 37;
  std::vector<std::uint64_t> nodes(n);
  std::vector<std::uint64_t> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i] = F.from_plain(3 * i + 1);
    values[i] = F.from_plain(rng() % 1000);
  }
  const modular::InterpolationPlan plan(F, nodes);
  const modular::DenseMod c = plan.interpolate(values);
  EXPECT_LE(c.size(), n);
  for (std::size_t i = 0; i < n; i += 97) EXPECT_EQ(modular::eval(F, c, nodes[i]), values[i]);
}
