#include <gtest/gtest.h>

#include "effint/error.hpp"
#include "effint/foliation.hpp"
#include "effint/poly_parser.hpp"

namespace effint {
namespace {

Poly P(const char* s) { return parse_poly(s, 2); }
VectorField field(const char* p, const char* q) { return VectorField(P(p), P(q)); }

TEST(FoliationDegree, Examples) {
  const auto a = foliation_degree(field("x", "2*y"));
  EXPECT_EQ(a.degree_d, 1);
  EXPECT_EQ(a.max_coeff_degree_D, 1);
  EXPECT_TRUE(a.infinity_invariant);

  const auto radial = foliation_degree(field("x", "y"));
  EXPECT_EQ(radial.degree_d, 0);
  EXPECT_EQ(radial.max_coeff_degree_D, 1);
  EXPECT_FALSE(radial.infinity_invariant);

  const auto rotation = foliation_degree(field("y", "-x"));
  EXPECT_EQ(rotation.degree_d, 1);
  EXPECT_TRUE(rotation.infinity_invariant);
}

TEST(FoliationDegree, RadialTopPartLowersDegree) {
  // Top part x*(x^2 + y^2) d/dx + y*(x^2 + y^2) d/dy is radial.
  const auto info = foliation_degree(field("x^3 + x*y^2 + y", "x^2*y + y^3 - x"));
  EXPECT_EQ(info.max_coeff_degree_D, 3);
  EXPECT_EQ(info.degree_d, 2);
  EXPECT_FALSE(info.infinity_invariant);
}

TEST(VectorField, RemovesCommonFactor) {
  const VectorField X(P("(x + 1)*x"), P("(x + 1)*2*y"));
  ASSERT_TRUE(X.removed_factor().has_value());
  EXPECT_EQ(*X.removed_factor(), P("x + 1"));
  EXPECT_EQ(X.P(), P("x"));
  EXPECT_EQ(X.Q(), P("2*y"));
  EXPECT_THROW(VectorField(Poly(2), Poly(2)), DomainError);
}

TEST(VectorField, ScalingLeavesDegreeData) {
  const auto a = foliation_degree(field("x^2 - y", "x*y + 1"));
  const auto b = foliation_degree(field("-7/3*x^2 + 7/3*y", "-7/3*x*y - 7/3"));
  EXPECT_EQ(a.degree_d, b.degree_d);
  EXPECT_EQ(a.max_coeff_degree_D, b.max_coeff_degree_D);
  EXPECT_EQ(a.infinity_invariant, b.infinity_invariant);
}

TEST(LieDerivative, Examples) {
  EXPECT_EQ(lie_derivative(field("x", "2*y"), P("x")), P("x"));
  EXPECT_TRUE(lie_derivative(field("y", "-x"), P("x^2 + y^2")).is_zero());
  EXPECT_EQ(divergence(field("x", "2*y")), P("3"));
}

TEST(Cofactor, Examples) {
  const auto y = cofactor(field("x", "2*y"), P("y"));
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ(y->cofactor, P("2"));
  EXPECT_FALSE(cofactor(field("x", "2*y"), P("x + y")).has_value());
  const auto circle = cofactor(field("y", "-x"), P("x^2 + y^2"));
  ASSERT_TRUE(circle.has_value());
  EXPECT_TRUE(circle->cofactor.is_zero());
  EXPECT_THROW(cofactor(field("y", "-x"), P("5")), ConstantInput);
}

TEST(Cofactor, RecordsSquareFreeness) {
  const auto sq = cofactor(field("x", "2*y"), P("x^2"));
  ASSERT_TRUE(sq.has_value());
  EXPECT_FALSE(sq->square_free);
  EXPECT_EQ(sq->cofactor, P("2"));
}

TEST(Extactic, LinearGoldens) {
  // Rows (1, x, y), (0, x, 2y), (0, x, 4y).
  EXPECT_EQ(extactic(field("x", "2*y"), 1), P("2*x*y"));
  // Rows (1, x, y), (0, y, -x), (0, -x, -y).
  EXPECT_EQ(extactic(field("y", "-x"), 1), P("-x^2 - y^2"));
  const Poly e = extactic(field("x", "2*y"), 1);
  EXPECT_TRUE(exact_div(e, P("x")).has_value());
  EXPECT_TRUE(exact_div(e, P("y")).has_value());
}

TEST(Extactic, CapIsEnforced) {
  ExtacticOptions small;
  small.max_size = 6;
  EXPECT_EQ(extactic_max_degree(small), 2u);
  EXPECT_EQ(extactic_max_degree(), 5u);
  EXPECT_THROW(extactic(field("x", "2*y"), 3, small), ResourceLimit);
}

TEST(DetectRationalFirstIntegral, Examples) {
  EXPECT_TRUE(detect_rational_first_integral(field("y", "-x"), 2));
  EXPECT_FALSE(detect_rational_first_integral(field("y", "-x"), 1));
  EXPECT_TRUE(detect_rational_first_integral(field("x", "2*y"), 2));
}

TEST(Extactic, NonIntegrableQuadraticSystem) {
  // x' = y, y' = -x + x^2 - y has no polynomial first integral in low degree.
  const VectorField X = field("y", "-x + x^2 - y");
  EXPECT_FALSE(detect_rational_first_integral(X, 2));
}

TEST(Determinant, SmallMatrices) {
  std::vector<std::vector<Poly>> m{{P("0"), P("1")}, {P("1"), P("0")}};
  EXPECT_EQ(determinant(m), P("-1"));
  std::vector<std::vector<Poly>> n{{P("x"), P("y")}, {P("y"), P("x")}};
  EXPECT_EQ(determinant(n), P("x^2 - y^2"));
  std::vector<std::vector<Poly>> singular{{P("x"), P("x*y")}, {P("1"), P("y")}};
  EXPECT_TRUE(determinant(singular).is_zero());
}

}  // namespace
}  // namespace effint
