#include <map>

#include "effint/darboux.hpp"
#include "effint/error.hpp"
#include "effint/linear_algebra.hpp"

namespace effint {

std::string_view to_string(StructureKind kind) {
  return kind == StructureKind::FirstIntegral ? "FirstIntegral" : "IntegratingFactor";
}

namespace {

// Coefficient matrix of the cofactors (columns) over the union of their monomials (rows),
// plus the right-hand side `rhs` expanded on the same rows.
struct CofactorSystem {
  RationalMatrix a;
  RationalVector b;
};

CofactorSystem cofactor_system(const std::vector<DarbouxCandidate>& cands, const Poly& rhs) {
  std::map<Monomial, std::size_t, DegRevLexGreater> rows;
  for (const auto& c : cands)
    for (const auto& [m, v] : c.cofactor.terms()) rows.try_emplace(m, 0);
  for (const auto& [m, v] : rhs.terms()) rows.try_emplace(m, 0);
  std::size_t index = 0;
  for (auto& [m, i] : rows) i = index++;

  CofactorSystem sys;
  sys.a.assign(rows.size(), RationalVector(cands.size(), Rational(0)));
  sys.b.assign(rows.size(), Rational(0));
  for (std::size_t j = 0; j < cands.size(); ++j)
    for (const auto& [m, v] : cands[j].cofactor.terms()) sys.a[rows.at(m)][j] = v;
  for (const auto& [m, v] : rhs.terms()) sys.b[rows.at(m)] = v;
  return sys;
}

Poly weighted_cofactor_sum(const std::vector<CurveExponent>& curves) {
  Poly sum(2);
  for (const auto& c : curves) sum += c.curve.cofactor * c.exponent;
  return sum;
}

std::vector<CurveExponent> attach(const std::vector<DarbouxCandidate>& cands,
                                  const RationalVector& e) {
  std::vector<CurveExponent> out;
  for (std::size_t i = 0; i < cands.size(); ++i) out.push_back({cands[i], e[i], -e[i]});
  return out;
}

void require_candidates(const std::vector<DarbouxCandidate>& cands) {
  if (cands.empty()) throw DomainError("assembly needs at least one invariant curve");
}

}  // namespace

std::optional<LiouvillianStructure> assemble_first_integral(
    const std::vector<DarbouxCandidate>& candidates) {
  require_candidates(candidates);
  const auto sys = cofactor_system(candidates, Poly(2));
  const auto kernel = kernel_basis(sys.a, candidates.size());
  if (kernel.empty()) return std::nullopt;

  LiouvillianStructure s;
  s.kind = StructureKind::FirstIntegral;
  s.curves = attach(candidates, primitive_integer_vector(kernel.front()));
  if (!weighted_cofactor_sum(s.curves).is_zero())
    throw DomainError("internal: first integral exponents do not cancel the cofactors");
  return s;
}

bool closedness_identity_holds(const VectorField& X, const std::vector<CurveExponent>& curves) {
  // dw = -div(X) dx^dy and w ^ dlog f = X(f)/f dx^dy, so over the denominator prod f_j:
  //   -div(X) prod f_j == sum_i e_i X(f_i) prod_{j != i} f_j.
  Poly all = Poly::constant(2, Rational(1));
  for (const auto& c : curves) all *= c.curve.f;
  Poly rhs(2);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    Poly term = lie_derivative(X, curves[i].curve.f) * curves[i].exponent;
    for (std::size_t j = 0; j < curves.size(); ++j)
      if (j != i) term *= curves[j].curve.f;
    rhs += term;
  }
  return (-(divergence(X) * all) - rhs).is_zero();
}

std::optional<LiouvillianStructure> assemble_integrating_factor(
    const VectorField& X, const std::vector<DarbouxCandidate>& candidates) {
  require_candidates(candidates);
  const auto sys = cofactor_system(candidates, -divergence(X));
  const auto e = min_height_solution(sys.a, sys.b, candidates.size());
  if (!e) return std::nullopt;

  const int d = foliation_degree(X).degree_d;
  LiouvillianStructure s;
  s.kind = StructureKind::IntegratingFactor;
  s.curves = attach(candidates, *e);
  s.foliation_degree = d;
  Rational polar = 0;
  for (const auto& c : s.curves) polar += c.pole * static_cast<long>(c.curve.f.degree().value());
  s.pole_at_infinity = Rational(d + 2) - polar;

  if (weighted_cofactor_sum(s.curves) != -divergence(X))
    throw DomainError("internal: integrating factor exponents do not match the divergence");
  s.closedness_verified = closedness_identity_holds(X, s.curves);
  if (!s.closedness_verified)
    throw DomainError("internal: dw - w ^ eta0 does not vanish for the assembled structure");
  return s;
}

Rational residue_at_infinity(const std::vector<CurveExponent>& curves) {
  // Chart u = 1/x, v = y/x: f(1/u, v/u) = F(1, v, u) / u^deg f with F the homogenization,
  // so f^*dlog f = dlog F(1, v, u) - deg f du/u, and the residue of dlog F(1, v, u) along
  // u = 0 is the u-adic valuation of F(1, v, u). Chart ring: variable 0 is u, 1 is v.
  const std::vector<Poly> chart{Poly::constant(2, Rational(1)), Poly::variable(2, 1),
                                Poly::variable(2, 0)};
  Rational residue = 0;
  for (const auto& c : curves) {
    const long deg = c.curve.f.degree().value();
    const Poly pulled = substitute(homogenize(c.curve.f, deg), chart);
    std::uint32_t valuation = UINT32_MAX;
    for (const auto& [m, v] : pulled.terms()) valuation = std::min(valuation, m[0]);
    residue += c.exponent * (static_cast<long>(valuation) - deg);
  }
  return residue;
}

Rational residue_degree_sum(const std::vector<CurveExponent>& curves) {
  Rational sum = residue_at_infinity(curves);
  for (const auto& c : curves) sum += c.exponent * static_cast<long>(c.curve.f.degree().value());
  return sum;
}

ResidueBudget check_residue_budget(const LiouvillianStructure& structure, int d) {
  if (structure.kind != StructureKind::IntegratingFactor || !structure.pole_at_infinity)
    throw KindMismatch("residue budget applies to integrating-factor structures only");
  ResidueBudget out;
  out.expected = d + 2;
  out.budget_sum = *structure.pole_at_infinity;
  out.expected_residue = 0;
  for (const auto& c : structure.curves) {
    const long deg = c.curve.f.degree().value();
    out.budget_sum += c.pole * deg;
    out.expected_residue -= c.exponent * deg;
  }
  out.residue_infinity = residue_at_infinity(structure.curves);
  return out;
}

bool verify_residue_budget(const LiouvillianStructure& structure, int d) {
  return check_residue_budget(structure, d).holds();
}

}  // namespace effint
