#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "effint/darboux.hpp"
#include "effint/error.hpp"
#include "effint/linear_algebra.hpp"
#include "effint/poly_parser.hpp"

namespace effint {
namespace {

Poly P(const char* s) { return parse_poly(s, 2); }
VectorField field(const char* p, const char* q) { return VectorField(P(p), P(q)); }

DarbouxCandidate cand(const VectorField& X, const char* f) {
  auto c = cofactor(X, P(f));
  if (!c) throw std::runtime_error("not invariant");
  return *c;
}

// Independent oracle: d(R w) for R = prod f_i^{e_i} with integer e_i and w = Q dx - P dy,
// via the quotient rule on R = N / M. Returns the numerator of the dx^dy coefficient.
Poly d_of_R_omega_numerator(const VectorField& X, const std::vector<std::pair<Poly, int>>& r) {
  Poly n = Poly::constant(2, 1);
  Poly m = Poly::constant(2, 1);
  for (const auto& [f, e] : r) {
    if (e > 0) n *= pow(f, static_cast<unsigned>(e));
    if (e < 0) m *= pow(f, static_cast<unsigned>(-e));
  }
  // d(A dx + B dy) = (B_x - A_y) dx^dy with A = Q N / M and B = -P N / M.
  const Poly a = X.Q() * n;
  const Poly b = -(X.P() * n);
  const Poly bx = diff(b, 0) * m - b * diff(m, 0);
  const Poly ay = diff(a, 1) * m - a * diff(m, 1);
  return bx - ay;
}

TEST(DegreeBound, Goldens) {
  EXPECT_EQ(degree_bound(3, BoundProfile::ThmA), 24);
  EXPECT_EQ(degree_bound(2, BoundProfile::ThmA2_g1_isotrivial), 6);
  EXPECT_EQ(degree_bound(2, BoundProfile::ThmA2_g1_nonisotrivial), 12);
  EXPECT_EQ(degree_bound(2, BoundProfile::ThmA2_hyperbolic), 42);
  EXPECT_EQ(degree_bound(5, BoundProfile::ThmA2_hyperbolic), 168);
  EXPECT_THROW(degree_bound(1, BoundProfile::ThmA), DegreeTooSmall);
}

TEST(DegreeBound, ProfileNames) {
  EXPECT_EQ(parse_profile("a2hyp"), BoundProfile::ThmA2_hyperbolic);
  EXPECT_EQ(parse_profile("thmA"), BoundProfile::ThmA);
  EXPECT_FALSE(parse_profile("thmB").has_value());
}

TEST(Search, LinearNodeFindsAxes) {
  SearchOptions opts;
  opts.n_max = 1;
  const auto r = search_invariant_curves(field("x", "2*y"), opts);
  ASSERT_EQ(r.candidates.size(), 2u);
  EXPECT_EQ(r.candidates[0].f, P("x"));
  EXPECT_EQ(r.candidates[0].cofactor, P("1"));
  EXPECT_EQ(r.candidates[1].f, P("y"));
  EXPECT_EQ(r.candidates[1].cofactor, P("2"));
  EXPECT_FALSE(r.first_integral_regime.has_value());
  EXPECT_FALSE(r.truncated);
}

TEST(Search, RotationHasOnlyComplexLines) {
  SearchOptions opts;
  opts.n_max = 1;
  const auto r = search_invariant_curves(field("y", "-x"), opts);
  EXPECT_TRUE(r.candidates.empty());
  // x + i y and x - i y: invariant but not rational.
  EXPECT_EQ(r.nonrational_count, 2u);
}

TEST(Search, RotationReachesFirstIntegralRegime) {
  SearchOptions opts;
  opts.n_max = 2;
  const auto r = search_invariant_curves(field("y", "-x"), opts);
  ASSERT_TRUE(r.first_integral_regime.has_value());
  EXPECT_EQ(*r.first_integral_regime, 2u);
}

TEST(Search, AutoModeNeedsDegreeTwo) {
  EXPECT_THROW(search_invariant_curves(field("x", "2*y")), DegreeTooSmall);
}

TEST(Search, TruncationIsReported) {
  SearchOptions opts;
  opts.extactic.max_size = 6;
  // Degree-2 Lotka-Volterra system; auto cap 12 (2 - 1) = 12 is cut to n = 2.
  const VectorField X = field("x*(1 - y)", "y*(x - 2)");
  ASSERT_EQ(foliation_degree(X).degree_d, 2);
  const auto r = search_invariant_curves(X, opts);
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.requested_n_max, 12u);
  EXPECT_EQ(r.searched_up_to, 2u);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.front().find("truncated"), std::string::npos);
}

TEST(Search, QuadraticSystemCurves) {
  SearchOptions opts;
  opts.n_max = 2;
  const VectorField X = field("x*(1 - y)", "y*(x - 2)");
  const auto r = search_invariant_curves(X, opts);
  ASSERT_FALSE(r.first_integral_regime.has_value());
  std::vector<Poly> fs;
  for (const auto& c : r.candidates) {
    EXPECT_EQ(lie_derivative(X, c.f), c.cofactor * c.f);
    fs.push_back(c.f);
  }
  EXPECT_NE(std::find(fs.begin(), fs.end(), P("x")), fs.end());
  EXPECT_NE(std::find(fs.begin(), fs.end(), P("y")), fs.end());
  EXPECT_NE(std::find(fs.begin(), fs.end(), P("x*y")), fs.end());
}

TEST(Search, WithoutProductsKeepsIrreducibleCurves) {
  SearchOptions opts;
  opts.n_max = 3;
  const auto r = search_invariant_curves(field("x*(1 - y)", "y*(x - 2)"), opts);
  const auto kept = without_products(r.candidates);
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0].f, P("x"));
  EXPECT_EQ(kept[1].f, P("y"));
}

TEST(Search, ScalingRobust) {
  SearchOptions opts;
  opts.n_max = 1;
  const auto a = search_invariant_curves(field("x", "2*y"), opts);
  const auto b = search_invariant_curves(field("-5/3*x", "-10/3*y"), opts);
  ASSERT_EQ(a.candidates.size(), b.candidates.size());
  for (std::size_t i = 0; i < a.candidates.size(); ++i)
    EXPECT_EQ(a.candidates[i].f, b.candidates[i].f);
}

TEST(Search, ThreadCountDoesNotChangeOutput) {
  SearchOptions one;
  one.n_max = 2;
  SearchOptions four = one;
  four.threads = 4;
  const VectorField X = field("x*(1 - y)", "y*(x - 2)");
  const auto a = search_invariant_curves(X, one);
  const auto b = search_invariant_curves(X, four);
  ASSERT_EQ(a.candidates.size(), b.candidates.size());
  for (std::size_t i = 0; i < a.candidates.size(); ++i) EXPECT_EQ(a.candidates[i], b.candidates[i]);
  EXPECT_EQ(a.notes, b.notes);
}

TEST(FirstIntegral, Examples) {
  const VectorField X = field("x", "2*y");
  const auto s = assemble_first_integral({cand(X, "x"), cand(X, "y")});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->kind, StructureKind::FirstIntegral);
  EXPECT_EQ(s->curves[0].exponent, 2);
  EXPECT_EQ(s->curves[1].exponent, -1);
  // X(x^2 / y) = 0: numerator y X(x^2) - x^2 X(y).
  EXPECT_TRUE((P("y") * lie_derivative(X, P("x^2")) - P("x^2") * lie_derivative(X, P("y"))).is_zero());

  const VectorField R = field("y", "-x");
  const auto circle = assemble_first_integral({cand(R, "x^2 + y^2")});
  ASSERT_TRUE(circle.has_value());
  EXPECT_EQ(circle->curves[0].exponent, 1);

  EXPECT_FALSE(assemble_first_integral({cand(X, "x")}).has_value());
}

TEST(IntegratingFactor, LinearNodeTwoCurves) {
  const VectorField X = field("x", "2*y");
  const auto s = assemble_integrating_factor(X, {cand(X, "x"), cand(X, "y")});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->curves[0].exponent, -1);
  EXPECT_EQ(s->curves[1].exponent, -1);
  EXPECT_EQ(s->curves[0].pole, 1);
  EXPECT_EQ(s->curves[1].pole, 1);
  EXPECT_EQ(*s->pole_at_infinity, 1);
  EXPECT_TRUE(s->closedness_verified);
  EXPECT_TRUE(d_of_R_omega_numerator(X, {{P("x"), -1}, {P("y"), -1}}).is_zero());

  const auto budget = check_residue_budget(*s, 1);
  EXPECT_EQ(budget.budget_sum, 3);
  EXPECT_EQ(budget.residue_infinity, 2);
  EXPECT_TRUE(budget.holds());
}

TEST(IntegratingFactor, RotationIsAlreadyClosed) {
  const VectorField X = field("y", "-x");
  const auto s = assemble_integrating_factor(X, {cand(X, "x^2 + y^2")});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->curves[0].exponent, 0);
  EXPECT_EQ(*s->pole_at_infinity, 3);
  EXPECT_TRUE(verify_residue_budget(*s, 1));
  EXPECT_TRUE(d_of_R_omega_numerator(X, {}).is_zero());
}

TEST(IntegratingFactor, SingleCurveCubicPole) {
  const VectorField X = field("x", "2*y");
  const auto s = assemble_integrating_factor(X, {cand(X, "x")});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->curves[0].exponent, -3);
  EXPECT_EQ(s->curves[0].pole, 3);
  EXPECT_EQ(*s->pole_at_infinity, 0);
  EXPECT_TRUE(s->closedness_verified);
  EXPECT_TRUE(d_of_R_omega_numerator(X, {{P("x"), -3}}).is_zero());
  EXPECT_TRUE(verify_residue_budget(*s, 1));
}

TEST(IntegratingFactor, UnsolvableReturnsNothing) {
  // x y^2 is invariant for (2x, -y) with cofactor 0, which cannot reach -div = -1.
  const VectorField X = field("2*x", "-y");
  const auto c = cand(X, "x*y^2");
  EXPECT_TRUE(c.cofactor.is_zero());
  EXPECT_FALSE(assemble_integrating_factor(X, {c}).has_value());
  EXPECT_TRUE(assemble_integrating_factor(X, {cand(X, "y")}).has_value());
}

TEST(ResidueBudget, AllResiduesMinusOneBoundsPolarDegree) {
  // mu_i = 1 for every curve forces sum deg f_i + mu_infinity = d + 2.
  const VectorField X = field("x", "2*y");
  const auto s = assemble_integrating_factor(X, {cand(X, "x"), cand(X, "y")});
  ASSERT_TRUE(s.has_value());
  Rational degrees = 0;
  for (const auto& c : s->curves) {
    ASSERT_EQ(c.pole, 1);
    degrees += static_cast<long>(c.curve.f.degree().value());
  }
  EXPECT_EQ(degrees + *s->pole_at_infinity, 3);
  EXPECT_LE(degrees, 3);
}

TEST(ResidueBudget, KindMismatch) {
  const VectorField X = field("x", "2*y");
  const auto fi = assemble_first_integral({cand(X, "x"), cand(X, "y")});
  ASSERT_TRUE(fi.has_value());
  EXPECT_THROW(verify_residue_budget(*fi, 1), KindMismatch);
}

TEST(ResidueBudget, ResidueTheoremSumVanishes) {
  const VectorField X = field("x", "2*y");
  const auto s = assemble_integrating_factor(X, {cand(X, "x"), cand(X, "y")});
  EXPECT_EQ(residue_degree_sum(s->curves), 0);
}

TEST(LinearAlgebra, MinHeightSolution) {
  // e1 + 2 e2 = -3: the max-norm minimizer is (-1, -1).
  const RationalMatrix a{{1, 2}};
  const auto e = min_height_solution(a, {-3}, 2);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(*e, (RationalVector{-1, -1}));
  // Inconsistent.
  const RationalMatrix b{{1, 1}, {1, 1}};
  EXPECT_FALSE(min_height_solution(b, {1, 2}, 2).has_value());
  // Unique.
  const RationalMatrix c{{2}};
  EXPECT_EQ(*min_height_solution(c, {3}, 1), (RationalVector{Rational(3, 2)}));
}

TEST(LinearAlgebra, PrimitiveIntegerVector) {
  EXPECT_EQ(primitive_integer_vector({Rational(-2, 3), Rational(1, 3)}), (RationalVector{2, -1}));
  EXPECT_EQ(primitive_integer_vector({0, Rational(4), Rational(6)}), (RationalVector{0, 2, 3}));
}

}  // namespace
}  // namespace effint
