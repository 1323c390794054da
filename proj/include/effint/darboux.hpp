#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "effint/error.hpp"
#include "effint/foliation.hpp"
#include "effint/groebner.hpp"
#include "effint/poly.hpp"

namespace effint {

// Degree caps for invariant curves: multiplier * (d - 1) on a foliation of degree d >= 2.
enum class BoundProfile {
  ThmA,                   // 12 (d - 1): no rational first integral, Liouvillian
  ThmA2_g1_isotrivial,    // 6 (d - 1)
  ThmA2_g1_nonisotrivial, // 12 (d - 1)
  ThmA2_hyperbolic,       // 42 (d - 1)
};

int bound_multiplier(BoundProfile profile);
std::string_view profile_name(BoundProfile profile);
// CLI spelling: thmA | a2g1 | a2g1n | a2hyp.
std::string_view profile_cli_name(BoundProfile profile);
std::optional<BoundProfile> parse_profile(std::string_view text);

// multiplier * (d - 1). Throws DegreeTooSmall for d < 2.
int degree_bound(int d, BoundProfile profile);

// ResourceLimit raised inside the curve search, tagged with where it happened.
class SearchResourceLimit : public ResourceLimit {
 public:
  SearchResourceLimit(unsigned degree, std::string normalization, const std::string& cause)
      : ResourceLimit("curve search at n = " + std::to_string(degree) + ", normalization " +
                      normalization + ": " + cause),
        degree_(degree),
        normalization_(std::move(normalization)) {}
  unsigned degree() const noexcept { return degree_; }
  const std::string& normalization() const noexcept { return normalization_; }

 private:
  unsigned degree_;
  std::string normalization_;
};

struct SearchOptions {
  std::optional<unsigned> n_max;  // nullopt: degree_bound(d, profile)
  BoundProfile profile = BoundProfile::ThmA;
  ExtacticOptions extactic;
  GroebnerLimits groebner;
  unsigned threads = 1;
};

struct SearchResult {
  std::vector<DarbouxCandidate> candidates;       // deduplicated, sorted by (degree, degrevlex)
  std::optional<unsigned> first_integral_regime;  // n with vanishing extactic, if reached
  std::size_t nonrational_count = 0;              // solutions dropped for non-rational coordinates
  unsigned requested_n_max = 0;
  unsigned searched_up_to = 0;
  bool truncated = false;  // requested_n_max exceeded the extactic cap
  std::vector<std::string> notes;
};

// Invariant algebraic curves of degree <= n_max via the bilinear ansatz X(f) = k f.
// Auto mode (no n_max) throws DegreeTooSmall for d < 2; Groebner ceilings surface as
// SearchResourceLimit.
SearchResult search_invariant_curves(const VectorField& X, const SearchOptions& options = {});

// Orders candidates by degree, then degrevlex term sequence of f.
bool candidate_less(const DarbouxCandidate& a, const DarbouxCandidate& b);

// Drops every candidate divisible by another candidate of smaller degree. Factors of a
// Darboux polynomial are Darboux, so on complete search output this keeps the curves that
// are irreducible over Q. Order is preserved.
std::vector<DarbouxCandidate> without_products(const std::vector<DarbouxCandidate>& candidates);

enum class StructureKind { FirstIntegral, IntegratingFactor };
std::string_view to_string(StructureKind kind);

struct CurveExponent {
  DarbouxCandidate curve;
  Rational exponent;  // e_i in prod f_i^{e_i}; eta0 carries e_i dlog f_i
  Rational pole;      // mu_i = -e_i
};

struct LiouvillianStructure {
  StructureKind kind = StructureKind::FirstIntegral;
  std::vector<CurveExponent> curves;
  std::optional<Rational> pole_at_infinity;  // mu_infinity, integrating factors only
  int foliation_degree = 0;
  bool closedness_verified = false;  // dw - w ^ eta0 == 0 as a polynomial identity
};

// Nontrivial integer relation sum e_i k_i = 0, or nullopt.
std::optional<LiouvillianStructure> assemble_first_integral(
    const std::vector<DarbouxCandidate>& candidates);

// Exponents with sum e_i k_i = -div X (minimal max |e_i|), or nullopt if unsolvable.
std::optional<LiouvillianStructure> assemble_integrating_factor(
    const VectorField& X, const std::vector<DarbouxCandidate>& candidates);

// Checks the 2-form identity dw = w ^ eta0 with w = Q dx - P dy, over the common
// denominator prod f_i.
bool closedness_identity_holds(const VectorField& X, const std::vector<CurveExponent>& curves);

// Residue of eta0 along the line at infinity, by pulling back to u = 1/x, v = y/x.
Rational residue_at_infinity(const std::vector<CurveExponent>& curves);

// Sum over polar components of residue times degree (affine curves plus infinity).
Rational residue_degree_sum(const std::vector<CurveExponent>& curves);

struct ResidueBudget {
  Rational budget_sum;         // sum mu_i deg f_i + mu_infinity
  int expected = 0;            // d + 2
  Rational residue_infinity;   // from the chart pullback
  Rational expected_residue;   // -sum e_i deg f_i
  bool holds() const { return budget_sum == expected && residue_infinity == expected_residue; }
};

// Throws KindMismatch for first-integral structures.
ResidueBudget check_residue_budget(const LiouvillianStructure& structure, int d);
bool verify_residue_budget(const LiouvillianStructure& structure, int d);

}  // namespace effint
