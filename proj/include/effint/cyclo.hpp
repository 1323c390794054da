#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace effint {

// Additive model of the m-th roots of unity: residues mod m, units U(m) = (Z/mZ)*.

enum class SpeyerVariant { Plain, Lambda };
std::string_view to_string(SpeyerVariant variant);

int euler_phi(int m);
// Ascending list of the units mod m.
std::vector<int> units(int m);

struct UnitDecomposition {
  int m = 0;
  std::vector<int> phi_set;   // sorted
  std::optional<int> lambda;  // Lambda variant only
};
bool operator==(const UnitDecomposition& a, const UnitDecomposition& b);

// Plain: U(m) = Phi + (-Phi). Lambda: U(m) = Phi + (-Phi) + {lambda, -lambda}.
// Order: lambda ascending, then one bit per pair {a, m - a} (a < m/2 ascending), bit set
// meaning m - a is chosen, counted up from zero.
// Throws NoValidDecomposition for m <= 2, PhiTooSmall for the Lambda variant with phi(m) < 4.
void for_each_unit_decomposition(int m, SpeyerVariant variant,
                                 const std::function<void(const UnitDecomposition&)>& visit);
std::vector<UnitDecomposition> unit_decompositions(int m, SpeyerVariant variant);
// 2^{phi/2} (Plain) or phi 2^{(phi-2)/2} (Lambda).
std::size_t decomposition_count(int m, SpeyerVariant variant);

// Smallest N >= 1 with 0 in the N-fold sumset of phi (repetition allowed).
int min_sumset_index(std::span<const int> phi, int m);
// Lexicographically least sorted multiset of size min_sumset_index from phi summing to 0.
std::vector<int> min_zero_sum_witness(std::span<const int> phi, int m);

struct SpeyerWitness {
  UnitDecomposition decomposition;
  std::vector<int> multiset;
};

struct SpeyerReport {
  int m = 0;
  SpeyerVariant variant = SpeyerVariant::Plain;
  int worst_N = 0;
  SpeyerWitness witness;
  std::size_t cases_scanned = 0;
};

struct SpeyerOptions {
  unsigned threads = 1;
  int phi_cap = 32;  // phi(m) above this raises ResourceLimit
};

// 6 for Plain, 12 for Lambda.
int speyer_bound(SpeyerVariant variant);

// Worst minimal N over every decomposition; the witness is the first decomposition in
// enumeration order attaining it. Throws BoundViolated if worst_N exceeds speyer_bound.
SpeyerReport verify_speyer(int m, const SpeyerOptions& options = {});
SpeyerReport verify_speyer2(int m, const SpeyerOptions& options = {});
SpeyerReport scan_speyer(int m, SpeyerVariant variant, const SpeyerOptions& options = {});

// True iff the report's witness sums to 0 mod m, lies in Phi and has worst_N elements.
bool witness_valid(const SpeyerReport& report);

bool is_prime(int p);
// |X_1 + ... + X_N| >= min(p, sum |X_i| - (N - 1)) by exact sumsets. Elements are taken
// mod p and deduplicated. Throws NotPrime; DomainError for an empty family or empty set.
bool cauchy_davenport_check(const std::vector<std::vector<int>>& sets, int p);
// Exact size of X_1 + ... + X_N in Z/pZ.
std::size_t sumset_size(const std::vector<std::vector<int>>& sets, int p);

}  // namespace effint
