#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <string>
#include <thread>

#include "effint/darboux.hpp"
#include "effint/error.hpp"

namespace effint {

bool candidate_less(const DarbouxCandidate& a, const DarbouxCandidate& b) {
  const Degree da = a.f.degree();
  const Degree db = b.f.degree();
  if (da != db) return da < db;
  auto ia = a.f.terms().begin();
  auto ib = b.f.terms().begin();
  for (; ia != a.f.terms().end() && ib != b.f.terms().end(); ++ia, ++ib) {
    const int c = compare_degrevlex(ia->first, ib->first);
    if (c != 0) return c > 0;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.f.terms().end() && ib != b.f.terms().end();
}

std::vector<DarbouxCandidate> without_products(const std::vector<DarbouxCandidate>& candidates) {
  std::vector<DarbouxCandidate> out;
  for (const auto& c : candidates) {
    const bool product = std::any_of(candidates.begin(), candidates.end(), [&](const auto& g) {
      return g.f.degree() < c.f.degree() && exact_div(c.f, g.f).has_value();
    });
    if (!product) out.push_back(c);
  }
  return out;
}

namespace {

struct LevelOutcome {
  std::vector<DarbouxCandidate> candidates;
  std::size_t nonrational = 0;
  bool positive_dimensional = false;
  std::exception_ptr error;
};

// Unknowns: coefficients of every monomial below `lead` (degree <= n), then the cofactor
// coefficients. The lex order puts the f-unknowns first, so the eliminant lives in k.
LevelOutcome solve_normalization(const VectorField& X, int D, unsigned n, const Monomial& lead,
                                 const GroebnerLimits& limits) {
  LevelOutcome out;
  std::vector<Monomial> f_monos;
  for (const auto& m : monomials_up_to(2, n))
    if (compare_degrevlex(m, lead) < 0) f_monos.push_back(m);
  const std::vector<Monomial> k_monos =
      D >= 1 ? monomials_up_to(2, static_cast<unsigned>(D - 1)) : std::vector<Monomial>{};
  const std::size_t F = f_monos.size();
  const std::size_t N = F + k_monos.size();

  std::vector<std::pair<Monomial, Poly>> f_terms;
  f_terms.emplace_back(lead, Poly::constant(N, Rational(1)));
  for (std::size_t i = 0; i < F; ++i) f_terms.emplace_back(f_monos[i], Poly::variable(N, i));

  std::map<Monomial, Poly, DegRevLexGreater> equations;
  auto slot = [&](const Monomial& m) -> Poly& {
    return equations.try_emplace(m, Poly(N)).first->second;
  };
  for (const auto& [t, coef] : f_terms) {
    const Poly image = lie_derivative(X, Poly::term(t, Rational(1)));
    for (const auto& [m, c] : image.terms()) slot(m) += coef * c;
  }
  for (std::size_t j = 0; j < k_monos.size(); ++j) {
    const Poly kappa = Poly::variable(N, F + j);
    for (const auto& [t, coef] : f_terms) slot(k_monos[j] * t) -= kappa * coef;
  }
  std::vector<Poly> gens;
  for (auto& [m, e] : equations)
    if (!e.is_zero()) gens.push_back(std::move(e));

  const IdealBasis basis = buchberger(gens, TermOrder::lex(N), limits);
  ZeroDimensionalSolution sol;
  try {
    sol = solve_zero_dimensional(basis);
  } catch (const PositiveDimensional&) {
    out.positive_dimensional = true;
    return out;
  }
  out.nonrational = sol.nonrational_branches;
  for (const auto& pt : sol.points) {
    Poly f = Poly::term(lead, Rational(1));
    for (std::size_t i = 0; i < F; ++i) f.add_term(f_monos[i], pt[i]);
    auto cand = cofactor(X, f);
    if (!cand) throw DomainError("internal: ansatz solution failed cofactor verification");
    out.candidates.push_back(std::move(*cand));
  }
  return out;
}

std::vector<LevelOutcome> solve_level(const VectorField& X, int D, unsigned n,
                                      const std::vector<Monomial>& leads,
                                      const GroebnerLimits& limits, unsigned threads) {
  std::vector<LevelOutcome> outcomes(leads.size());
  auto work = [&](std::size_t i) {
    try {
      outcomes[i] = solve_normalization(X, D, n, leads[i], limits);
    } catch (...) {
      outcomes[i].error = std::current_exception();
    }
  };
  if (threads <= 1 || leads.size() <= 1) {
    for (std::size_t i = 0; i < leads.size(); ++i) work(i);
    return outcomes;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(leads.size()));
  for (unsigned t = 0; t < count; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < leads.size(); i = next++) work(i);
    });
  }
  pool.clear();
  return outcomes;
}

}  // namespace

SearchResult search_invariant_curves(const VectorField& X, const SearchOptions& options) {
  const FoliationInfo info = foliation_degree(X);
  SearchResult result;
  result.requested_n_max = options.n_max ? *options.n_max
                                         : static_cast<unsigned>(degree_bound(info.degree_d,
                                                                              options.profile));
  if (result.requested_n_max == 0) throw DomainError("n_max must be at least 1");
  const unsigned cap = extactic_max_degree(options.extactic);
  const unsigned n_stop = std::min(result.requested_n_max, cap);
  result.truncated = result.requested_n_max > cap;
  if (result.truncated) {
    result.notes.push_back("search truncated at n = " + std::to_string(cap) +
                           " by the extactic size cap " +
                           std::to_string(options.extactic.max_size) + " (requested n_max = " +
                           std::to_string(result.requested_n_max) + ")");
  }

  for (unsigned n = 1; n <= n_stop; ++n) {
    result.searched_up_to = n;
    if (detect_rational_first_integral(X, n, options.extactic)) {
      result.first_integral_regime = n;
      result.notes.push_back("n = " + std::to_string(n) +
                             ": extactic vanishes identically (rational first integral regime)");
      break;
    }

    const auto leads = monomials_of_degree(2, n);
    auto outcomes = solve_level(X, info.max_coeff_degree_D, n, leads, options.groebner,
                                std::max(1u, options.threads));
    std::size_t found = 0;
    std::size_t dropped = 0;
    for (std::size_t i = 0; i < leads.size(); ++i) {
      auto& o = outcomes[i];
      if (o.error) {
        try {
          std::rethrow_exception(o.error);
        } catch (const ResourceLimit& e) {
          throw SearchResourceLimit(n, to_string(Poly::term(leads[i], Rational(1))), e.what());
        }
      }
      if (o.positive_dimensional) {
        result.notes.push_back("n = " + std::to_string(n) + ", normalization " +
                               to_string(Poly::term(leads[i], Rational(1))) +
                               ": solution set is not zero-dimensional; skipped");
      }
      dropped += o.nonrational;
      for (auto& c : o.candidates) {
        const bool seen = std::any_of(result.candidates.begin(), result.candidates.end(),
                                      [&](const DarbouxCandidate& d) { return d.f == c.f; });
        if (!seen) {
          result.candidates.push_back(std::move(c));
          ++found;
        }
      }
    }
    result.nonrational_count += dropped;
    std::string note = "n = " + std::to_string(n) + ": extactic nonzero; " +
                       std::to_string(found) + " rational invariant curve(s) of degree " +
                       std::to_string(n);
    if (dropped != 0) note += ", " + std::to_string(dropped) + " non-rational solution(s) skipped";
    result.notes.push_back(std::move(note));
  }
  std::sort(result.candidates.begin(), result.candidates.end(), candidate_less);
  return result;
}

}  // namespace effint
