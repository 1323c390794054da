#include "effint/orbifold.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

#include "effint/error.hpp"

namespace effint {

namespace {

constexpr int kMaxK = 1'000'000;

bool only_transverse(const OrbifoldData& data) {
  return data.c_count == 0 && data.d_mults.empty() && data.e_mults.empty();
}

long long floor_part(const OrbifoldData& data, int k) {
  long long sum = 0;
  for (int o : data.b_orders) sum += static_cast<long long>(k) * (o - 1) / o;
  return sum;
}

long long sigma(const OrbifoldData& data, int k) {
  long long s = static_cast<long long>(k) * data.c_count;
  for (int m : data.d_mults) s += static_cast<long long>(k) * m;
  for (int l : data.e_mults) s += static_cast<long long>(k) * (l + 1) / 2;
  return s;
}

}  // namespace

void validate(const OrbifoldData& data) {
  if (data.genus < 0) throw DomainError("genus must be >= 0");
  if (data.c_count < 0) throw DomainError("c count must be >= 0");
  for (int o : data.b_orders)
    if (o < 2) throw DomainError("b orders must be >= 2 (got " + std::to_string(o) + ")");
  for (int m : data.d_mults)
    if (m < 1) throw DomainError("d multiplicities must be >= 1 (got " + std::to_string(m) + ")");
  for (int l : data.e_mults)
    if (l < 1) throw DomainError("e multiplicities must be >= 1 (got " + std::to_string(l) + ")");
}

std::string_view to_string(KodairaOneProfile profile) {
  switch (profile) {
    case KodairaOneProfile::Riccati:
      return "riccati";
    case KodairaOneProfile::Turbulent:
      return "turbulent";
    case KodairaOneProfile::IsotrivialHyperbolic:
      return "isotrivial_hyperbolic";
    case KodairaOneProfile::EllipticNonisotrivial:
      return "elliptic_nonisotrivial";
  }
  return "riccati";
}

std::optional<KodairaOneProfile> parse_kodaira_profile(std::string_view text) {
  for (auto p : {KodairaOneProfile::Riccati, KodairaOneProfile::Turbulent,
                 KodairaOneProfile::IsotrivialHyperbolic, KodairaOneProfile::EllipticNonisotrivial})
    if (text == to_string(p)) return p;
  return std::nullopt;
}

int profile_cap(KodairaOneProfile profile) {
  switch (profile) {
    case KodairaOneProfile::Turbulent:
    case KodairaOneProfile::EllipticNonisotrivial:
      return 12;
    case KodairaOneProfile::Riccati:
    case KodairaOneProfile::IsotrivialHyperbolic:
      return 42;
  }
  return 42;
}

OrbifoldDegree orbifold_degree(const OrbifoldData& data) {
  validate(data);
  OrbifoldDegree deg;
  deg.canonical = 2 * data.genus - 2;
  for (int o : data.b_orders) deg.canonical += Rational(o - 1, o);
  for (std::size_t i = 0; i < data.e_mults.size(); ++i) deg.canonical += Rational(1, 2);
  deg.direct_image = data.c_count;
  for (int m : data.d_mults) deg.direct_image += m;
  for (int l : data.e_mults) deg.direct_image += Rational(l, 2);
  deg.canonical.canonicalize();
  deg.direct_image.canonicalize();
  return deg;
}

int sigma_k(const OrbifoldData& data, int k) {
  validate(data);
  if (k < 1) throw DomainError("k must be >= 1");
  return static_cast<int>(sigma(data, k));
}

int delta_k(const OrbifoldData& data, int k) {
  if (data.genus != 0)
    throw GenusMismatch("delta_k is the genus-0 formula (genus = " + std::to_string(data.genus) +
                        ")");
  return static_cast<int>(rounded_degree(data, k));
}

long long rounded_degree(const OrbifoldData& data, int k) {
  validate(data);
  if (k < 1) throw DomainError("k must be >= 1");
  return static_cast<long long>(k) * (2 * data.genus - 2) + floor_part(data, k) + sigma(data, k);
}

bool KminReport::within_profile_cap() const { return k_min <= profile_cap(profile); }

KminReport k_min(const OrbifoldData& data, KodairaOneProfile profile) {
  validate(data);
  if (profile == KodairaOneProfile::Turbulent) {
    for (int o : data.b_orders)
      if (o != 2 && o != 3 && o != 4 && o != 6)
        throw DomainError("turbulent data allows orders in {2, 3, 4, 6} only (got " +
                          std::to_string(o) + ")");
  }
  if (profile == KodairaOneProfile::IsotrivialHyperbolic && !only_transverse(data))
    throw DomainError("isotrivial hyperbolic data has transverse (b) fibers only");
  if (orbifold_degree(data).total() <= 0)
    throw NotBig("orbifold degree is not positive: not Kodaira dimension one");

  KminReport report;
  report.profile = profile;
  if (data.genus >= 2) {
    report.k_min = 1;
    report.threshold = 0;
    report.delta_trace.emplace_back(1, rounded_degree(data, 1));
    return report;
  }
  report.threshold = data.genus == 1 ? 2 : 1;
  for (int k = 1; k <= kMaxK; ++k) {
    const long long deg = rounded_degree(data, k);
    report.delta_trace.emplace_back(k, deg);
    if (deg >= report.threshold) {
      report.k_min = k;
      return report;
    }
  }
  throw ResourceLimit("k_min search exceeded k = " + std::to_string(kMaxK));
}

bool is_big(const OrbifoldData& data) {
  validate(data);
  if (data.genus != 0 || !only_transverse(data))
    throw GenusMismatch("is_big applies to genus-0 data with transverse fibers only");
  return orbifold_degree(data).total() > 0;
}

namespace {

OrbifoldData triple_data(const Triple& t) {
  OrbifoldData d;
  d.b_orders = {t[0], t[1], t[2]};
  return d;
}

}  // namespace

TripleScan scan_triples(TripleConstraint constraint, int o_max, unsigned threads) {
  if (o_max < 7) throw DomainError("scan_triples needs o_max >= 7");
  std::vector<Triple> triples;
  for (int a = 2; a <= o_max; ++a)
    for (int b = a; b <= o_max; ++b)
      for (int c = b; c <= o_max; ++c) {
        if (constraint == TripleConstraint::Lcm && c != std::lcm(a, b)) continue;
        if (is_big(triple_data({a, b, c}))) triples.push_back({a, b, c});
      }

  struct Row {
    int k = 0;
    bool monotone = true;
    std::size_t checks = 0;
  };
  std::vector<Row> rows(triples.size());
  auto work = [&](std::size_t i) {
    const Triple& t = triples[i];
    rows[i].k = k_min(triple_data(t)).k_min;
    // Raising any single weight must not raise k_min.
    for (int j = 0; j < 3; ++j) {
      Triple up = t;
      if (++up[j] > o_max) continue;
      std::sort(up.begin(), up.end());
      ++rows[i].checks;
      if (k_min(triple_data(up)).k_min > rows[i].k) rows[i].monotone = false;
    }
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < triples.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < triples.size(); i = next++) work(i);
      });
  }

  TripleScan scan;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    scan.table.push_back({triples[i], rows[i].k});
    if (rows[i].k > scan.worst.k_min) scan.worst = scan.table.back();
    scan.monotone = scan.monotone && rows[i].monotone;
    scan.monotonicity_checks += rows[i].checks;
  }
  return scan;
}

}  // namespace effint
