#pragma once

// Randomized property checks shared by the property suite and the acceptance runner.
// Each check draws one case from the generator and returns a failure description, or
// nullopt when the property holds.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "effint/foliation.hpp"
#include "effint/groebner.hpp"
#include "effint/orbifold.hpp"
#include "effint/poly_parser.hpp"
#include "support/generators.hpp"

namespace effint::testing {

using Failure = std::optional<std::string>;

inline Failure check_ring_axioms(Rng& rng) {
  const Poly a = random_poly(rng, 2, 3, 4);
  const Poly b = random_poly(rng, 2, 3, 4);
  const Poly c = random_poly(rng, 2, 3, 4);
  const std::string where = " for a = " + to_string(a) + ", b = " + to_string(b);
  if (a + b != b + a) return "addition not commutative" + where;
  if (a * b != b * a) return "multiplication not commutative" + where;
  if ((a + b) + c != a + (b + c)) return "addition not associative" + where;
  if ((a * b) * c != a * (b * c)) return "multiplication not associative" + where;
  if (a * (b + c) != a * b + a * c) return "distributivity fails" + where;
  if (!(a - a).is_zero()) return "a - a is not zero" + where;
  if (a * Poly::constant(2, Rational(1)) != a) return "1 is not a unit" + where;
  if (!b.is_zero()) {
    const auto quotient = exact_div(a * b, b);
    if (!quotient || *quotient != a) return "exact_div(a b, b) != a" + where;
  }
  for (std::size_t v = 0; v < 2; ++v)
    if (diff(a * b, v) != diff(a, v) * b + a * diff(b, v)) return "Leibniz rule fails" + where;
  return std::nullopt;
}

inline Failure check_parser_roundtrip(Rng& rng) {
  const std::size_t arity = rng() % 2 == 0 ? 2 : 3;
  const Poly p = random_poly(rng, arity, 6, 6, 40, 9);
  const std::string text = to_string(p);
  const Poly back = parse_poly(text, arity);
  if (back != p) return "parse(print(p)) != p for '" + text + "'";
  if (to_string(back) != text) return "print is not idempotent for '" + text + "'";
  return std::nullopt;
}

// Every S-polynomial of the computed basis, and every input, reduces to zero.
inline Failure check_groebner_spairs(Rng& rng) {
  const std::size_t count = 2 + rng() % 2;
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_nonzero_poly(rng, 2, 2, 3));
  const TermOrder order = rng() % 2 == 0 ? TermOrder::degrevlex(2) : TermOrder::lex(2);
  const IdealBasis g = buchberger(gens, order);
  const auto& gs = g.generators;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!normal_form(s_polynomial(gs[i], gs[j], order), g).is_zero())
        return "S(" + to_string(gs[i]) + ", " + to_string(gs[j]) + ") does not reduce to 0";
  for (const auto& f : gens)
    if (!normal_form(f, g).is_zero()) return "input " + to_string(f) + " not in the basis ideal";
  return std::nullopt;
}

// X = A (-f_y, f_x) + f (B, C) leaves f invariant; f must divide the degree-deg f extactic.
inline Failure check_extactic_divisibility(Rng& rng) {
  for (;;) {
    const Poly f = random_poly(rng, 2, 2, 3, 4, 2);
    if (f.is_constant()) continue;
    const Poly a = random_nonzero_poly(rng, 2, 1, 2);
    const Poly b = random_poly(rng, 2, 1, 2);
    const Poly c = random_poly(rng, 2, 1, 2);
    const Poly p = -(a * diff(f, 1)) + f * b;
    const Poly q = a * diff(f, 0) + f * c;
    if (p.is_zero() && q.is_zero()) continue;
    const VectorField X(p, q);
    if (X.removed_factor()) continue;
    const auto cand = cofactor(X, f);
    if (!cand) return "constructed curve " + to_string(f) + " is not invariant";
    const auto n = static_cast<unsigned>(f.degree().value());
    const Poly e = extactic(X, n);
    if (!exact_div(e, cand->f)) {
      return to_string(f) + " does not divide the degree-" + std::to_string(n) +
             " extactic of (" + to_string(p) + ", " + to_string(q) + ")";
    }
    return std::nullopt;
  }
}

inline Failure check_delta_superadditivity(Rng& rng) {
  OrbifoldData d;
  const int nb = static_cast<int>(rng() % 6);
  for (int i = 0; i < nb; ++i) d.b_orders.push_back(2 + static_cast<int>(rng() % 40));
  d.c_count = static_cast<int>(rng() % 3);
  for (int i = static_cast<int>(rng() % 3); i > 0; --i)
    d.d_mults.push_back(1 + static_cast<int>(rng() % 5));
  for (int i = static_cast<int>(rng() % 3); i > 0; --i)
    d.e_mults.push_back(1 + static_cast<int>(rng() % 5));
  const int k1 = 1 + static_cast<int>(rng() % 60);
  const int k2 = 1 + static_cast<int>(rng() % 60);
  if (delta_k(d, k1 + k2) < delta_k(d, k1) + delta_k(d, k2))
    return "delta_" + std::to_string(k1 + k2) + " < delta_" + std::to_string(k1) + " + delta_" +
           std::to_string(k2);
  return std::nullopt;
}

struct PropertySuite {
  const char* name;
  std::function<Failure(Rng&)> check;
};

inline std::vector<PropertySuite> property_suites() {
  return {{"ring_axioms", check_ring_axioms},
          {"parser_roundtrip", check_parser_roundtrip},
          {"groebner_spairs", check_groebner_spairs},
          {"extactic_divisibility", check_extactic_divisibility},
          {"delta_superadditivity", check_delta_superadditivity}};
}

struct SuiteResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_failure;
};

inline SuiteResult run_suite(const PropertySuite& suite, std::size_t cases, std::uint64_t seed) {
  Rng rng(seed);
  SuiteResult result;
  for (std::size_t i = 0; i < cases; ++i) {
    ++result.cases;
    Failure f;
    try {
      f = suite.check(rng);
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    if (f) {
      ++result.failures;
      if (!result.first_failure) result.first_failure = "case " + std::to_string(i) + ": " + *f;
    }
  }
  return result;
}

}  // namespace effint::testing
