#include "effint/cyclo.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

#include "effint/error.hpp"

namespace effint {

std::string_view to_string(SpeyerVariant variant) {
  return variant == SpeyerVariant::Plain ? "plain" : "lambda";
}

int euler_phi(int m) {
  if (m < 1) throw DomainError("euler_phi needs m >= 1");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<int> units(int m) {
  std::vector<int> out;
  for (int a = 1; a < m; ++a)
    if (std::gcd(a, m) == 1) out.push_back(a);
  return out;
}

bool operator==(const UnitDecomposition& a, const UnitDecomposition& b) {
  return a.m == b.m && a.phi_set == b.phi_set && a.lambda == b.lambda;
}

namespace {

void require_decomposable(int m, SpeyerVariant variant) {
  if (m <= 2)
    throw NoValidDecomposition("m = " + std::to_string(m) +
                               ": every unit is its own negative, no decomposition exists");
  if (variant == SpeyerVariant::Lambda && euler_phi(m) < 4)
    throw PhiTooSmall("lambda variant needs phi(m) >= 4 (m = " + std::to_string(m) +
                      ", phi = " + std::to_string(euler_phi(m)) + ")");
}

// Representatives a < m/2 of the pairs {a, m - a}, skipping the pair of `skip`.
std::vector<int> pair_representatives(int m, std::optional<int> skip) {
  std::vector<int> reps;
  for (int a : units(m)) {
    if (2 * a >= m) break;
    if (skip && (a == *skip || a == m - *skip)) continue;
    reps.push_back(a);
  }
  return reps;
}

UnitDecomposition make_decomposition(int m, const std::vector<int>& reps, std::uint64_t mask,
                                     std::optional<int> lambda) {
  UnitDecomposition d;
  d.m = m;
  d.lambda = lambda;
  for (std::size_t i = 0; i < reps.size(); ++i)
    d.phi_set.push_back((mask >> i) & 1U ? m - reps[i] : reps[i]);
  std::sort(d.phi_set.begin(), d.phi_set.end());
  return d;
}

std::vector<std::optional<int>> lambda_choices(int m, SpeyerVariant variant) {
  if (variant == SpeyerVariant::Plain) return {std::nullopt};
  std::vector<std::optional<int>> out;
  for (int a : units(m)) out.emplace_back(a);
  return out;
}

// reach[k][s] is true iff s is a sum of exactly k elements of phi (mod m), k = 0..n.
std::vector<std::vector<char>> reachability(std::span<const int> phi, int m, int n) {
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(m, 0));
  reach[0][0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int s = 0; s < m; ++s)
      if (reach[k - 1][s])
        for (int a : phi) reach[k][(s + a) % m] = 1;
  return reach;
}

std::vector<int> normalized(std::span<const int> phi, int m) {
  if (m < 1) throw DomainError("modulus must be at least 1");
  if (phi.empty()) throw DomainError("sumset index needs a nonempty set");
  std::vector<int> out;
  for (int a : phi) out.push_back(((a % m) + m) % m);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

void for_each_unit_decomposition(int m, SpeyerVariant variant,
                                 const std::function<void(const UnitDecomposition&)>& visit) {
  require_decomposable(m, variant);
  for (const auto& lambda : lambda_choices(m, variant)) {
    const auto reps = pair_representatives(m, lambda);
    if (reps.size() >= 63) throw ResourceLimit("too many unit pairs to enumerate");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << reps.size()); ++mask)
      visit(make_decomposition(m, reps, mask, lambda));
  }
}

std::vector<UnitDecomposition> unit_decompositions(int m, SpeyerVariant variant) {
  std::vector<UnitDecomposition> out;
  for_each_unit_decomposition(m, variant, [&](const UnitDecomposition& d) { out.push_back(d); });
  return out;
}

std::size_t decomposition_count(int m, SpeyerVariant variant) {
  require_decomposable(m, variant);
  const int phi = euler_phi(m);
  if (variant == SpeyerVariant::Plain) return std::size_t{1} << (phi / 2);
  return static_cast<std::size_t>(phi) << ((phi - 2) / 2);
}

int min_sumset_index(std::span<const int> phi, int m) {
  const auto set = normalized(phi, m);
  std::vector<char> current(m, 0);
  for (int a : set) current[a] = 1;
  for (int n = 1;; ++n) {
    if (current[0]) return n;
    std::vector<char> next(m, 0);
    for (int s = 0; s < m; ++s)
      if (current[s])
        for (int a : set) next[(s + a) % m] = 1;
    current = std::move(next);
  }
}

std::vector<int> min_zero_sum_witness(std::span<const int> phi, int m) {
  const auto set = normalized(phi, m);
  const int n = min_sumset_index(set, m);
  const auto reach = reachability(set, m, n);
  // Greedy smallest element first; the chosen elements come out non-decreasing.
  std::vector<int> witness;
  int target = 0;
  for (int left = n; left > 0; --left) {
    for (int a : set) {
      const int rest = ((target - a) % m + m) % m;
      if (reach[left - 1][rest]) {
        witness.push_back(a);
        target = rest;
        break;
      }
    }
  }
  return witness;
}

int speyer_bound(SpeyerVariant variant) { return variant == SpeyerVariant::Plain ? 6 : 12; }

SpeyerReport scan_speyer(int m, SpeyerVariant variant, const SpeyerOptions& options) {
  require_decomposable(m, variant);
  const int phi = euler_phi(m);
  if (phi > options.phi_cap)
    throw ResourceLimit("phi(" + std::to_string(m) + ") = " + std::to_string(phi) +
                        " exceeds the enumeration cap " + std::to_string(options.phi_cap));

  // Work items: one per lambda choice, each scanning all masks of its pairs.
  const auto lambdas = lambda_choices(m, variant);
  struct Partial {
    int worst = 0;
    std::optional<UnitDecomposition> first;
    std::size_t scanned = 0;
  };
  std::vector<Partial> partials(lambdas.size());
  auto work = [&](std::size_t i) {
    const auto reps = pair_representatives(m, lambdas[i]);
    Partial& p = partials[i];
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << reps.size()); ++mask) {
      auto d = make_decomposition(m, reps, mask, lambdas[i]);
      const int n = min_sumset_index(d.phi_set, m);
      ++p.scanned;
      if (n > p.worst) {
        p.worst = n;
        p.first = std::move(d);
      }
    }
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || lambdas.size() == 1) {
    for (std::size_t i = 0; i < lambdas.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, lambdas.size()); ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < lambdas.size(); i = next++) work(i);
      });
  }

  SpeyerReport report;
  report.m = m;
  report.variant = variant;
  for (auto& p : partials) {
    report.cases_scanned += p.scanned;
    if (p.worst > report.worst_N) {
      report.worst_N = p.worst;
      report.witness.decomposition = std::move(*p.first);
    }
  }
  report.witness.multiset = min_zero_sum_witness(report.witness.decomposition.phi_set, m);
  return report;
}

namespace {

SpeyerReport verified(int m, SpeyerVariant variant, const SpeyerOptions& options) {
  auto report = scan_speyer(m, variant, options);
  if (report.worst_N > speyer_bound(variant))
    throw BoundViolated("m = " + std::to_string(m) + " (" + std::string(to_string(variant)) +
                        "): worst N = " + std::to_string(report.worst_N) + " exceeds " +
                        std::to_string(speyer_bound(variant)));
  return report;
}

}  // namespace

SpeyerReport verify_speyer(int m, const SpeyerOptions& options) {
  return verified(m, SpeyerVariant::Plain, options);
}

SpeyerReport verify_speyer2(int m, const SpeyerOptions& options) {
  return verified(m, SpeyerVariant::Lambda, options);
}

bool witness_valid(const SpeyerReport& report) {
  const auto& w = report.witness;
  if (static_cast<int>(w.multiset.size()) != report.worst_N) return false;
  long long sum = 0;
  for (int a : w.multiset) {
    if (!std::binary_search(w.decomposition.phi_set.begin(), w.decomposition.phi_set.end(), a))
      return false;
    sum += a;
  }
  return sum % report.m == 0;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::size_t sumset_size(const std::vector<std::vector<int>>& sets, int p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (sets.empty()) throw DomainError("sumset of an empty family");
  std::vector<char> acc(p, 0);
  acc[0] = 1;
  for (const auto& x : sets) {
    if (x.empty()) throw DomainError("sumset with an empty set");
    std::vector<char> next(p, 0);
    for (int s = 0; s < p; ++s)
      if (acc[s])
        for (int a : x) next[((s + a) % p + p) % p] = 1;
    acc = std::move(next);
  }
  return static_cast<std::size_t>(std::count(acc.begin(), acc.end(), 1));
}

bool cauchy_davenport_check(const std::vector<std::vector<int>>& sets, int p) {
  const std::size_t size = sumset_size(sets, p);
  long long total = 0;
  for (const auto& x : sets) total += static_cast<long long>(normalized(x, p).size());
  const long long bound =
      std::min<long long>(p, total - (static_cast<long long>(sets.size()) - 1));
  return static_cast<long long>(size) >= bound;
}

}  // namespace effint
