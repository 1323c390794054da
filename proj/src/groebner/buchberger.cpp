#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "effint/error.hpp"
#include "effint/groebner.hpp"

namespace effint {

TermOrder::TermOrder(TermOrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw DomainError("term order priority must be a permutation");
}

TermOrder TermOrder::degrevlex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return TermOrder(TermOrderKind::degrevlex, std::move(p));
}

TermOrder TermOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return TermOrder(TermOrderKind::lex, std::move(p));
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (kind_ == TermOrderKind::lex) {
    for (std::size_t v : priority_)
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    return 0;
  }
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = priority_.size(); i-- > 0;) {
    const std::size_t v = priority_[i];
    if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
  }
  return 0;
}

Monomial leading_monomial(const Poly& f, const TermOrder& order) {
  if (f.is_zero()) throw DomainError("leading monomial of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (best == nullptr || order.greater(m, *best)) best = &m;
  return *best;
}

Rational leading_coefficient(const Poly& f, const TermOrder& order) {
  return f.coefficient(leading_monomial(f, order));
}

Poly s_polynomial(const Poly& f, const Poly& g, const TermOrder& order) {
  const Monomial lf = leading_monomial(f, order);
  const Monomial lg = leading_monomial(g, order);
  const Monomial l = lcm(lf, lg);
  return f.mul_monomial(l / lf, 1 / f.coefficient(lf)) -
         g.mul_monomial(l / lg, 1 / g.coefficient(lg));
}

namespace {

struct Term {
  Monomial m;
  Integer c;
};

// Integer polynomial, terms strictly descending in the active order.
using GPoly = std::vector<Term>;

GPoly to_gpoly(const Poly& p, const TermOrder& order) {
  GPoly out;
  if (p.is_zero()) return out;
  const Rational scale = 1 / content(p);
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Rational v = c * scale;
    out.push_back({m, v.get_num()});
  }
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.m, b.m); });
  if (out.front().c < 0)
    for (auto& t : out) t.c = -t.c;
  return out;
}

Poly to_monic_poly(const GPoly& g, std::size_t nvars) {
  Poly p(nvars);
  if (g.empty()) return p;
  const Integer& lc = g.front().c;
  for (const auto& t : g) p.add_term(t.m, make_rational(t.c, lc));
  return p;
}

void make_primitive(GPoly& g) {
  if (g.empty()) return;
  Integer d = 0;
  for (const auto& t : g) {
    mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), t.c.get_mpz_t());
    if (d == 1) break;
  }
  if (g.front().c < 0) d = -d;
  if (d != 1)
    for (auto& t : g) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), d.get_mpz_t());
}

// a * p - b * (shift * q), both inputs sorted descending.
GPoly combine(const Integer& a, const GPoly& p, const Integer& b, const Monomial& shift,
              const GPoly& q, const TermOrder& order) {
  GPoly out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < p.size() || j < q.size()) {
    if (j == q.size()) {
      out.push_back({p[i].m, a * p[i].c});
      ++i;
      continue;
    }
    Monomial qm = q[j].m * shift;
    const int cmp = i == p.size() ? -1 : order.compare(p[i].m, qm);
    if (cmp > 0) {
      out.push_back({p[i].m, a * p[i].c});
      ++i;
    } else if (cmp < 0) {
      out.push_back({std::move(qm), -b * q[j].c});
      ++j;
    } else {
      Integer c = a * p[i].c - b * q[j].c;
      if (c != 0) out.push_back({std::move(qm), std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

GPoly spoly(const GPoly& f, const GPoly& g, const TermOrder& order) {
  const Monomial l = lcm(f.front().m, g.front().m);
  Integer d;
  mpz_gcd(d.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
  const Integer a = g.front().c / d;
  const Integer b = f.front().c / d;
  GPoly fs;
  fs.reserve(f.size());
  const Monomial sf = l / f.front().m;
  for (const auto& t : f) fs.push_back({t.m * sf, t.c});
  return combine(a, fs, b, l / g.front().m, g, order);
}

// Full fraction-free reduction of p modulo basis (entries with skip index excluded).
GPoly reduce(GPoly p, const std::vector<GPoly>& basis, const TermOrder& order,
             std::size_t skip = static_cast<std::size_t>(-1)) {
  GPoly r;
  std::size_t steps = 0;
  while (!p.empty()) {
    const Term& lead = p.front();
    std::size_t hit = basis.size();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (basis[k].front().m.divides(lead.m)) {
        hit = k;
        break;
      }
    }
    if (hit == basis.size()) {
      r.push_back(lead);
      p.erase(p.begin());
      continue;
    }
    const GPoly& g = basis[hit];
    Integer d;
    mpz_gcd(d.get_mpz_t(), lead.c.get_mpz_t(), g.front().c.get_mpz_t());
    const Integer a = g.front().c / d;
    const Integer b = lead.c / d;
    const Monomial shift = lead.m / g.front().m;
    p = combine(a, p, b, shift, g, order);
    if (a != 1)
      for (auto& t : r) t.c *= a;
    if (++steps % 8 == 0) {
      // Keep coefficient growth in check by removing the joint content.
      Integer c = 0;
      for (const auto& t : r) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
      for (const auto& t : p) {
        if (c == 1) break;
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
      }
      if (c > 1) {
        for (auto& t : r) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
      }
    }
  }
  make_primitive(r);
  return r;
}

std::uint64_t max_total_degree(const GPoly& g) {
  std::uint64_t d = 0;
  for (const auto& t : g) d = std::max(d, t.m.total_degree());
  return d;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace

IdealBasis buchberger(std::span<const Poly> gens, const TermOrder& order,
                      const GroebnerLimits& limits) {
  const std::size_t nvars = order.nvars();
  for (const auto& g : gens)
    if (g.arity() != nvars) throw ArityMismatch("generator arity does not match the term order");

  std::vector<GPoly> basis;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;  // unordered pairs still in `pending`

  auto add = [&](GPoly g) {
    if (max_total_degree(g) > limits.max_degree)
      throw ResourceLimit("groebner: max_degree ceiling " + std::to_string(limits.max_degree) +
                          " exceeded");
    const std::size_t idx = basis.size();
    for (std::size_t k = 0; k < idx; ++k) {
      if (basis[k].empty()) continue;
      pending.push_back({k, idx, lcm(basis[k].front().m, g.front().m)});
      open.emplace(k, idx);
    }
    basis.push_back(std::move(g));
  };

  for (const auto& g : gens) {
    GPoly h = reduce(to_gpoly(g, order), basis, order);
    if (!h.empty()) add(std::move(h));
  }

  std::size_t processed = 0;
  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first, ties by index.
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      const int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair pair = *best;
    pending.erase(best);
    open.erase({pair.i, pair.j});

    if (++processed > limits.max_pairs)
      throw ResourceLimit("groebner: max_pairs ceiling " + std::to_string(limits.max_pairs) +
                          " exceeded");

    const GPoly& gi = basis[pair.i];
    const GPoly& gj = basis[pair.j];
    if (coprime(gi.front().m, gj.front().m)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j || basis[k].empty()) continue;
      if (!basis[k].front().m.divides(pair.lcm)) continue;
      const auto ik = std::minmax(pair.i, k);
      const auto jk = std::minmax(pair.j, k);
      chain = !open.contains({ik.first, ik.second}) && !open.contains({jk.first, jk.second});
    }
    if (chain) continue;

    GPoly h = reduce(spoly(gi, gj, order), basis, order);
    if (!h.empty()) add(std::move(h));
  }

  // Minimalize: drop elements whose leading monomial another element divides.
  std::vector<GPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].empty()) continue;
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i || basis[k].empty()) continue;
      if (!basis[k].front().m.divides(basis[i].front().m)) continue;
      redundant = basis[k].front().m != basis[i].front().m || k < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) minimal[i] = reduce(minimal[i], minimal, order, i);

  std::sort(minimal.begin(), minimal.end(), [&](const GPoly& a, const GPoly& b) {
    return order.greater(a.front().m, b.front().m);
  });

  IdealBasis out{{}, order, true};
  for (const auto& g : minimal) out.generators.push_back(to_monic_poly(g, nvars));
  return out;
}

Poly normal_form(const Poly& f, const IdealBasis& basis) {
  const TermOrder& order = basis.order;
  std::vector<std::pair<Monomial, Rational>> leads;
  leads.reserve(basis.generators.size());
  for (const auto& g : basis.generators) {
    const Monomial lm = leading_monomial(g, order);
    leads.emplace_back(lm, g.coefficient(lm));
  }
  Poly p = f;
  Poly r(f.arity());
  while (!p.is_zero()) {
    const Monomial lm = leading_monomial(p, order);
    const Rational lc = p.coefficient(lm);
    std::size_t hit = leads.size();
    for (std::size_t k = 0; k < leads.size(); ++k)
      if (leads[k].first.divides(lm)) {
        hit = k;
        break;
      }
    if (hit == leads.size()) {
      r.add_term(lm, lc);
      p.add_term(lm, -lc);
    } else {
      p -= basis.generators[hit].mul_monomial(lm / leads[hit].first, lc / leads[hit].second);
    }
  }
  return r;
}

}  // namespace effint
