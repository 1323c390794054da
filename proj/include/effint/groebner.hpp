#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "effint/poly.hpp"

namespace effint {

enum class TermOrderKind { degrevlex, lex };

// Monomial order with an explicit variable priority: priority[0] is the largest variable.
class TermOrder {
 public:
  TermOrder(TermOrderKind kind, std::vector<std::size_t> priority);
  static TermOrder degrevlex(std::size_t nvars);
  static TermOrder lex(std::size_t nvars);

  TermOrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  std::size_t nvars() const noexcept { return priority_.size(); }

  // <0, 0, >0 as a is smaller, equal, or larger than b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrderKind kind_;
  std::vector<std::size_t> priority_;
};

struct GroebnerLimits {
  std::size_t max_pairs = 50000;
  unsigned max_degree = 60;
};

struct IdealBasis {
  std::vector<Poly> generators;  // sorted by descending leading monomial
  TermOrder order;
  bool reduced = false;
};

Monomial leading_monomial(const Poly& f, const TermOrder& order);
Rational leading_coefficient(const Poly& f, const TermOrder& order);

// S-polynomial with rational coefficients, monic-normalized leading parts.
Poly s_polynomial(const Poly& f, const Poly& g, const TermOrder& order);

// Reduced Groebner basis of the ideal generated by gens. Throws ResourceLimit
// when the configured pair or degree ceiling is exceeded.
IdealBasis buchberger(std::span<const Poly> gens, const TermOrder& order,
                      const GroebnerLimits& limits = {});

// Remainder of f on full division by the basis; zero iff f lies in the ideal.
Poly normal_form(const Poly& f, const IdealBasis& basis);

struct ZeroDimensionalSolution {
  // Rational points, coordinates in variable-index order, sorted lexicographically.
  std::vector<std::vector<Rational>> points;
  bool nonrational_detected = false;
  // Distinct non-rational roots met while branching (each is at least one dropped solution).
  std::size_t nonrational_branches = 0;
};

// Back-substitution through a reduced lex basis. Throws PositiveDimensional.
ZeroDimensionalSolution solve_zero_dimensional(const IdealBasis& lex_basis);

// Rational roots with multiplicity, ascending. p must involve at most one variable.
// Throws ZeroPolynomial.
std::vector<Rational> rational_roots(const Poly& p);
// Same for a dense coefficient vector (index i multiplies t^i).
std::vector<Rational> rational_roots(std::span<const Rational> coeffs);

}  // namespace effint
