#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "effint/rational.hpp"

namespace effint {

// Fiber data of the reference fibration over a curve of genus `genus`. Transverse smooth
// fibers contribute nothing and are not stored.
struct OrbifoldData {
  int genus = 0;
  std::vector<int> b_orders;  // transverse, quotient singularities of order o >= 2
  int c_count = 0;            // invariant smooth, no multiplicity
  std::vector<int> d_mults;   // invariant smooth, two saddle-nodes of multiplicity m >= 1
  std::vector<int> e_mults;   // invariant singular, saddle-node of multiplicity l >= 1
};

// Throws DomainError when a field is out of range.
void validate(const OrbifoldData& data);

enum class KodairaOneProfile { Riccati, Turbulent, IsotrivialHyperbolic, EllipticNonisotrivial };
std::string_view to_string(KodairaOneProfile profile);
std::optional<KodairaOneProfile> parse_kodaira_profile(std::string_view text);
// Bound on k_min guaranteed for the profile: 42, 12, 42, 12.
int profile_cap(KodairaOneProfile profile);

// Degree of the orbifold canonical divisor and of the direct image, kept apart.
struct OrbifoldDegree {
  Rational canonical;     // 2g - 2 + sum (o - 1)/o + sum 1/2 over e
  Rational direct_image;  // c_count + sum m + sum l/2
  Rational total() const { return canonical + direct_image; }
};
OrbifoldDegree orbifold_degree(const OrbifoldData& data);

int sigma_k(const OrbifoldData& data, int k);
// Genus 0 only (GenusMismatch otherwise): -2k + sum floor(k (o - 1)/o) + sigma_k.
int delta_k(const OrbifoldData& data, int k);
// Degree of the rounded-down k-th multiple on any genus: k (2g - 2) + sum floor + sigma_k.
long long rounded_degree(const OrbifoldData& data, int k);

struct KminReport {
  int k_min = 0;
  std::vector<std::pair<int, long long>> delta_trace;  // (k, rounded degree), k = 1..k_min
  KodairaOneProfile profile = KodairaOneProfile::Riccati;
  int threshold = 1;  // genus 0: 1, genus 1: 2, genus >= 2: none (k_min = 1)
  bool within_profile_cap() const;
};

// genus >= 2: 1; genus 1: smallest k with rounded degree >= 2; genus 0: smallest k with
// delta_k >= 1. Throws NotBig when the orbifold degree is <= 0. Turbulent data must have
// orders in {2, 3, 4, 6}; isotrivial hyperbolic data must have only transverse fibers.
KminReport k_min(const OrbifoldData& data, KodairaOneProfile profile = KodairaOneProfile::Riccati);

// Genus 0 with only transverse fibers: -2 + sum (o - 1)/o > 0. GenusMismatch otherwise.
bool is_big(const OrbifoldData& data);

using Triple = std::array<int, 3>;

enum class TripleConstraint { All, Lcm };

struct TripleEntry {
  Triple orders;
  int k_min = 0;
};

struct TripleScan {
  std::vector<TripleEntry> table;  // lexicographic on triples
  TripleEntry worst;               // first maximum in table order
  bool monotone = true;            // larger weights never raise k_min
  std::size_t monotonicity_checks = 0;
};

// Every big o1 <= o2 <= o3 <= o_max (Lcm: o3 = lcm(o1, o2)). DomainError for o_max < 7.
TripleScan scan_triples(TripleConstraint constraint, int o_max, unsigned threads = 1);

}  // namespace effint
