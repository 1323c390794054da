// Acceptance runner: one PASS/FAIL line per criterion, with pinned tolerances and wall-clock
// limits. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "effint/cyclo.hpp"
#include "effint/darboux.hpp"
#include "effint/orbifold.hpp"
#include "effint/poly_parser.hpp"
#include "support/checkers.hpp"

namespace {

using namespace effint;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0: no time limit
  std::function<Verdict()> run;
};

Poly P(const char* s) { return parse_poly(s, 2); }

int kmin_of(std::vector<int> orders) {
  OrbifoldData d;
  d.b_orders = std::move(orders);
  return k_min(d).k_min;
}

Verdict orbifold_tables() {
  Verdict v;
  const std::vector<std::pair<std::vector<int>, int>> table{
      {{2, 3, 7}, 42}, {{2, 3, 8}, 24},  {{2, 4, 5}, 20}, {{2, 3, 9}, 18},
      {{2, 3, 10}, 18}, {{2, 3, 11}, 18}, {{3, 3, 4}, 12}, {{4, 4, 4}, 4}};
  for (const auto& [orders, expected] : table) {
    const int got = kmin_of(orders);
    v.require(got == expected, "k_min(" + std::to_string(orders[0]) + "," +
                                   std::to_string(orders[1]) + "," + std::to_string(orders[2]) +
                                   ") = " + std::to_string(got) + ", expected " +
                                   std::to_string(expected));
  }
  return v;
}

Verdict triple_scans() {
  Verdict v;
  const auto all = scan_triples(TripleConstraint::All, 12);
  v.require(all.worst.orders == Triple{2, 3, 7} && all.worst.k_min == 42,
            "all-scan worst is not (2,3,7) -> 42");
  v.require(all.monotone, "monotonicity cross-check failed on the full table");
  const auto lcm = scan_triples(TripleConstraint::Lcm, 12);
  v.require(lcm.worst.k_min <= 8, "lcm-scan worst " + std::to_string(lcm.worst.k_min) + " > 8");
  v.require(lcm.monotone, "monotonicity cross-check failed on the lcm table");
  for (Triple t : {Triple{2, 6, 6}, Triple{2, 8, 8}, Triple{3, 4, 12}, Triple{3, 6, 6},
                   Triple{3, 9, 9}}) {
    bool found = false;
    for (const auto& e : lcm.table) {
      if (e.orders != t) continue;
      found = true;
      v.require(e.k_min <= 6, "special triple has k_min " + std::to_string(e.k_min));
    }
    v.require(found, "special triple missing from the lcm table");
  }
  v.detail = v.pass ? "all: " + std::to_string(all.table.size()) + " triples, worst 42 at (2,3,7); lcm: " +
                          std::to_string(lcm.table.size()) + " triples, worst " +
                          std::to_string(lcm.worst.k_min)
                    : v.detail;
  return v;
}

Verdict speyer_plain() {
  Verdict v;
  int worst = 0;
  for (int m = 3; m <= 30; ++m) {
    const auto r = verify_speyer(m);
    worst = std::max(worst, r.worst_N);
    v.require(r.worst_N <= 6, "m = " + std::to_string(m) + " worst_N " + std::to_string(r.worst_N));
    v.require(witness_valid(r), "invalid witness at m = " + std::to_string(m));
    if (m == 6) v.require(r.worst_N == 6, "worst_N(6) != 6");
    if (m == 4) v.require(r.worst_N == 4, "worst_N(4) != 4");
  }
  if (v.pass) v.detail = "max worst_N = " + std::to_string(worst) + " over m = 3..30";
  return v;
}

Verdict speyer_lambda() {
  Verdict v;
  int worst = 0;
  int scanned = 0;
  for (int m = 3; m <= 30; ++m) {
    if (euler_phi(m) < 4) continue;
    const auto r = verify_speyer2(m);
    ++scanned;
    worst = std::max(worst, r.worst_N);
    v.require(r.worst_N <= 12, "m = " + std::to_string(m) + " worst_N " + std::to_string(r.worst_N));
    v.require(witness_valid(r), "invalid witness at m = " + std::to_string(m));
    if (m == 12) v.require(r.worst_N == 12, "worst_N(12) != 12");
    if (m == 5) v.require(r.worst_N == 5, "worst_N(5) != 5");
  }
  if (v.pass)
    v.detail = "max worst_N = " + std::to_string(worst) + " over " + std::to_string(scanned) +
               " moduli with phi(m) >= 4";
  return v;
}

Verdict cauchy_davenport_fuzz() {
  Verdict v;
  std::mt19937_64 rng(1000);
  const int primes[] = {3, 5, 7, 11, 13};
  int passed = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int p = primes[rng() % 5];
    std::vector<std::vector<int>> sets(1 + rng() % 5);
    for (auto& x : sets) {
      for (int a = 0; a < p; ++a)
        if (rng() % 3 == 0) x.push_back(a);
      if (x.empty()) x.push_back(static_cast<int>(rng() % p));
    }
    if (cauchy_davenport_check(sets, p)) ++passed;
  }
  v.require(passed == 1000, std::to_string(1000 - passed) + " instances violate the bound");
  if (v.pass) v.detail = "1000/1000 instances satisfy the bound";
  return v;
}

// e is a nonzero rational multiple of target.
bool nonzero_multiple(const Poly& e, const Poly& target) {
  if (e.is_zero()) return false;
  const auto q = exact_div(e, target);
  return q && q->is_constant();
}

Verdict foliation_goldens() {
  Verdict v;
  const VectorField node(P("x"), P("2*y"));
  const VectorField rot(P("y"), P("-x"));
  v.require(nonzero_multiple(extactic(node, 1), P("x*y")), "E1(x,2y) is not c x y");
  v.require(nonzero_multiple(extactic(rot, 1), P("x^2 + y^2")), "E1(y,-x) is not c (x^2+y^2)");
  v.require(detect_rational_first_integral(rot, 2), "detector false at n = 2 for (y,-x)");
  v.require(detect_rational_first_integral(node, 2), "detector false at n = 2 for (x,2y)");
  SearchOptions opts;
  opts.n_max = 1;
  const auto r = search_invariant_curves(node, opts);
  v.require(r.candidates.size() == 2 && r.candidates[0].f == P("x") &&
                r.candidates[0].cofactor == P("1") && r.candidates[1].f == P("y") &&
                r.candidates[1].cofactor == P("2"),
            "search on (x,2y) at n = 1 is not exactly {x: 1, y: 2}");
  return v;
}

Verdict darboux_golden() {
  Verdict v;
  const VectorField X(P("x"), P("2*y"));
  const auto cx = *cofactor(X, P("x"));
  const auto cy = *cofactor(X, P("y"));
  const auto two = assemble_integrating_factor(X, {cx, cy});
  v.require(two.has_value(), "no integrating factor from {x, y}");
  if (two) {
    v.require(two->curves[0].exponent == -1 && two->curves[1].exponent == -1, "R != 1/(x y)");
    v.require(two->closedness_verified && closedness_identity_holds(X, two->curves),
              "dw - w ^ eta0 != 0 for 1/(x y)");
    const auto b = check_residue_budget(*two, 1);
    v.require(b.budget_sum == 3 && b.expected == 3 && b.holds(), "budget != 3 for 1/(x y)");
  }
  const auto one = assemble_integrating_factor(X, {cx});
  v.require(one.has_value(), "no integrating factor from {x}");
  if (one) {
    v.require(one->curves[0].exponent == -3, "single-curve R != x^-3");
    v.require(one->closedness_verified && closedness_identity_holds(X, one->curves),
              "dw - w ^ eta0 != 0 for x^-3");
    v.require(*one->pole_at_infinity == 0, "mu_infinity != 0 for x^-3");
    v.require(verify_residue_budget(*one, 1), "budget fails for x^-3");
  }
  return v;
}

Verdict property_suites() {
  Verdict v;
  std::string summary;
  for (const auto& suite : testing::property_suites()) {
    const auto r = testing::run_suite(suite, 200, 20240601);
    v.require(r.cases >= 200 && r.failures == 0,
              std::string(suite.name) + ": " + std::to_string(r.failures) + " failures" +
                  (r.first_failure ? " (" + *r.first_failure + ")" : ""));
    summary += (summary.empty() ? "" : ", ") + std::string(suite.name) + " " +
               std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases);
  }
  if (v.pass) v.detail = summary;
  return v;
}

Verdict bounds_and_caps() {
  Verdict v;
  for (int d = 2; d <= 6; ++d) {
    v.require(degree_bound(d, BoundProfile::ThmA) == 12 * (d - 1), "ThmA bound");
    v.require(degree_bound(d, BoundProfile::ThmA2_g1_isotrivial) == 6 * (d - 1), "A2 g1 bound");
    v.require(degree_bound(d, BoundProfile::ThmA2_g1_nonisotrivial) == 12 * (d - 1),
              "A2 g1 nonisotrivial bound");
    v.require(degree_bound(d, BoundProfile::ThmA2_hyperbolic) == 42 * (d - 1), "A2 hyperbolic bound");
  }
  const VectorField X(P("x*(1 - y)"), P("y*(x - 2)"));
  for (std::size_t cap : {std::size_t{6}, std::size_t{10}, std::size_t{21}}) {
    SearchOptions opts;
    opts.extactic.max_size = cap;
    const auto r = search_invariant_curves(X, opts);
    const unsigned n_cap = extactic_max_degree(opts.extactic);
    v.require(r.searched_up_to <= n_cap, "search ran past the extactic cap");
    v.require(r.truncated && r.requested_n_max == 12, "auto search not flagged as truncated");
    bool noted = false;
    for (const auto& n : r.notes) noted = noted || n.find("truncated") != std::string::npos;
    v.require(noted, "truncation not reported in notes");
  }
  SearchOptions within;
  within.n_max = 3;
  const auto r = search_invariant_curves(X, within);
  v.require(!r.truncated && r.searched_up_to == 3, "explicit n_max within the cap misreported");
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "orbifold k_min tables", 1.0, orbifold_tables},
      {2, "triple scans (all, lcm) with monotonicity", 5.0, triple_scans},
      {3, "plain sumset scan, m = 3..30", 10.0, speyer_plain},
      {4, "lambda sumset scan, m <= 30, phi(m) >= 4", 60.0, speyer_lambda},
      {5, "Cauchy-Davenport fuzz, 1000 instances", 5.0, cauchy_davenport_fuzz},
      {6, "foliation engine goldens", 0.0, foliation_goldens},
      {7, "Darboux pipeline golden", 0.0, darboux_golden},
      {8, "property suites, 200 cases each", 0.0, property_suites},
      {9, "degree bound profiles and search caps", 0.0, bounds_and_caps},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      v.pass = false;
      v.detail += (v.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.3fs < %.0fs", secs, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::printf("%s [%d] %s (%s)%s%s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, timing,
                v.detail.empty() ? "" : ": ", v.detail.c_str());
    if (!v.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
