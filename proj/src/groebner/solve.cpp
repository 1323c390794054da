#include <algorithm>
#include <map>
#include <string>

#include "effint/error.hpp"
#include "effint/groebner.hpp"

namespace effint {
namespace {

constexpr std::size_t kMaxRootCandidates = 2'000'000;

// Prime factorization of |n| (n != 0) as prime -> exponent.
std::map<Integer, unsigned> factorize(Integer n) {
  std::map<Integer, unsigned> out;
  n = abs(n);
  for (unsigned long p = 2; p < 10000 && n > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  std::vector<Integer> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    Integer m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) != 0) {
      ++out[m];
      continue;
    }
    // Pollard rho with Brent cycle detection; retry with a new constant on failure.
    Integer factor = m;
    for (unsigned long c = 1; factor == m; ++c) {
      Integer x = 2;
      Integer y = 2;
      Integer d = 1;
      auto step = [&](Integer& v) {
        v = (v * v + c) % m;
      };
      while (d == 1) {
        step(x);
        step(y);
        step(y);
        Integer diff = abs(x - y);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
      }
      factor = d;
    }
    stack.push_back(factor);
    stack.push_back(m / factor);
  }
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
    if (out.size() > kMaxRootCandidates)
      throw ResourceLimit("rational_roots: too many divisor candidates");
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational horner(std::span<const Rational> coeffs, const Rational& t) {
  Rational acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
  return acc;
}

// Divides by (t - r); requires r to be a root.
std::vector<Rational> deflate(std::span<const Rational> coeffs, const Rational& r) {
  const std::size_t n = coeffs.size() - 1;
  std::vector<Rational> q(n);
  Rational carry = 0;
  for (std::size_t i = n; i-- > 0;) {
    carry = coeffs[i + 1] + carry * r;
    q[i] = carry;
  }
  return q;
}

}  // namespace

std::vector<Rational> rational_roots(std::span<const Rational> input) {
  std::vector<Rational> coeffs(input.begin(), input.end());
  while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
  if (coeffs.empty()) throw ZeroPolynomial("rational_roots of the zero polynomial");

  std::vector<Rational> roots;
  std::size_t lead_zeros = 0;
  while (sgn(coeffs[lead_zeros]) == 0) ++lead_zeros;
  roots.assign(lead_zeros, Rational(0));
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
  if (coeffs.size() <= 1) return roots;

  // Primitive integer form for the candidate search.
  Integer den_lcm = 1;
  for (const auto& c : coeffs) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  const Rational a0 = coeffs.front() * den_lcm;
  const Rational an = coeffs.back() * den_lcm;

  const auto ps = divisors(a0.get_num());
  const auto qs = divisors(an.get_num());
  if (ps.size() * qs.size() > kMaxRootCandidates)
    throw ResourceLimit("rational_roots: too many root candidates");

  std::vector<Rational> candidates;
  for (const auto& p : ps)
    for (const auto& q : qs) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      candidates.push_back(make_rational(p, q));
      candidates.push_back(make_rational(-p, q));
    }
  std::sort(candidates.begin(), candidates.end());

  for (const auto& r : candidates) {
    while (coeffs.size() > 1 && sgn(horner(coeffs, r)) == 0) {
      roots.push_back(r);
      coeffs = deflate(coeffs, r);
    }
    if (coeffs.size() <= 1) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("rational_roots of the zero polynomial");
  std::size_t var = p.arity();
  for (std::size_t v = 0; v < p.arity(); ++v) {
    if (!p.uses_variable(v)) continue;
    if (var != p.arity()) throw DomainError("rational_roots expects a univariate polynomial");
    var = v;
  }
  if (var == p.arity()) return {};
  std::vector<Rational> coeffs(p.degree_in(var) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) coeffs[m[var]] = c;
  return rational_roots(coeffs);
}

namespace {

struct BackSubstitution {
  const IdealBasis& basis;
  const std::vector<std::size_t>& priority;
  std::vector<std::vector<std::size_t>> generators_at_level;  // generators whose top variable is that level
  ZeroDimensionalSolution result;

  void run(std::size_t level, std::vector<Rational>& values) {
    const std::size_t var = priority[level];
    const std::size_t n = priority.size();
    Poly g(n);
    for (std::size_t idx : generators_at_level[level]) {
      Poly h = basis.generators[idx];
      for (std::size_t l = level + 1; l < n; ++l) h = substitute_value(h, priority[l], values[priority[l]]);
      g = gcd(g, h);
    }
    if (g.is_zero()) throw PositiveDimensional();
    if (g.is_constant()) return;

    const Poly squarefree = *exact_div(g, gcd(g, diff(g, var)));
    auto roots = rational_roots(squarefree);
    const auto degree = static_cast<std::size_t>(squarefree.degree().value());
    if (roots.size() < degree) {
      result.nonrational_detected = true;
      result.nonrational_branches += degree - roots.size();
    }
    for (const auto& r : roots) {
      values[var] = r;
      if (level == 0) {
        result.points.push_back(values);
      } else {
        run(level - 1, values);
      }
    }
  }
};

}  // namespace

ZeroDimensionalSolution solve_zero_dimensional(const IdealBasis& lex_basis) {
  if (lex_basis.order.kind() != TermOrderKind::lex || !lex_basis.reduced)
    throw DomainError("solve_zero_dimensional expects a reduced lex basis");
  const auto& priority = lex_basis.order.priority();
  const std::size_t n = priority.size();

  ZeroDimensionalSolution empty;
  for (const auto& g : lex_basis.generators)
    if (g.is_constant() && !g.is_zero()) return empty;  // the unit ideal has no points
  if (n == 0) return empty;

  // Zero-dimensional iff every variable has a pure power among leading monomials.
  std::vector<bool> pure(n, false);
  for (const auto& g : lex_basis.generators) {
    const Monomial lm = leading_monomial(g, lex_basis.order);
    std::size_t used = n;
    std::size_t count = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (lm[v] != 0) {
        used = v;
        ++count;
      }
    if (count == 1) pure[used] = true;
  }
  if (std::find(pure.begin(), pure.end(), false) != pure.end()) throw PositiveDimensional();

  BackSubstitution bs{lex_basis, priority, std::vector<std::vector<std::size_t>>(n), {}};
  for (std::size_t idx = 0; idx < lex_basis.generators.size(); ++idx) {
    // Level of a generator = priority position of its largest variable.
    const Poly& g = lex_basis.generators[idx];
    for (std::size_t level = 0; level < n; ++level) {
      if (g.uses_variable(priority[level])) {
        bs.generators_at_level[level].push_back(idx);
        break;
      }
    }
  }
  std::vector<Rational> values(n, Rational(0));
  bs.run(n - 1, values);
  std::sort(bs.result.points.begin(), bs.result.points.end());
  return bs.result;
}

}  // namespace effint
