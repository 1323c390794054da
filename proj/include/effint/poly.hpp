#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "effint/monomial.hpp"
#include "effint/rational.hpp"

namespace effint {

// Total degree with a distinguished value for the zero polynomial.
class Degree {
 public:
  constexpr explicit Degree(long long value) : value_(value), minus_infinity_(false) {}
  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_minus_infinity() const noexcept { return minus_infinity_; }
  // Throws DomainError on the sentinel.
  long long value() const;

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.minus_infinity_ || b.minus_infinity_) {
      return b.minus_infinity_ <=> a.minus_infinity_;
    }
    return a.value_ <=> b.value_;
  }
  friend constexpr Degree operator+(const Degree& a, const Degree& b) {
    if (a.minus_infinity_ || b.minus_infinity_) return minus_infinity();
    return Degree(a.value_ + b.value_);
  }

 private:
  constexpr Degree() : value_(0), minus_infinity_(true) {}
  long long value_;
  bool minus_infinity_;
};

std::string to_string(const Degree& d);

// Sparse polynomial over Q in a fixed number of variables. Terms are kept with
// nonzero coefficients only and iterate in descending degrevlex order.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, DegRevLexGreater>;

  explicit Poly(std::size_t nvars = 2) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly term(const Monomial& m, const Rational& c);

  std::size_t arity() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  Rational coefficient(const Monomial& m) const;
  // Degrevlex-first term. Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational constant_term() const;

  Degree degree() const;
  // Degree in a single variable; -1 is never returned for zero, callers check is_zero().
  std::uint32_t degree_in(std::size_t var) const;
  // Homogeneous component of total degree exactly `deg`.
  Poly homogeneous_part(std::uint64_t deg) const;
  bool uses_variable(std::size_t var) const;

  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Poly mul_monomial(const Monomial& m, const Rational& c) const;

 private:
  void check_arity(const Poly& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

Poly pow(const Poly& base, unsigned exponent);

// Formal partial derivative.
Poly diff(const Poly& f, std::size_t var);
Degree degree(const Poly& f);
Rational eval(const Poly& f, std::span<const Rational> point);

// Replaces every variable i by images[i]; all images share one arity.
Poly substitute(const Poly& f, std::span<const Poly> images);
// Same arity, with variable `var` replaced by the constant `value`.
Poly substitute_value(const Poly& f, std::size_t var, const Rational& value);

// Returns q with f = q * g, or nullopt when g does not divide f.
// Throws DivisionByZeroPoly for g = 0.
std::optional<Poly> exact_div(const Poly& f, const Poly& g);

// Adds variable z (index 2) so every term has total degree target_degree.
Poly homogenize(const Poly& f, long long target_degree);
// Sets z = 1 in a 3-variable polynomial.
Poly dehomogenize(const Poly& f);

// Unique rational multiple with primitive integer coefficients and positive
// leading (degrevlex-first) coefficient. Zero maps to zero.
Poly canonical(const Poly& f);
// Least common multiple of denominators over gcd of numerators, as a positive rational.
Rational content(const Poly& f);

// Greatest common divisor over Q, canonically normalized. gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g);

// Variable names: x, y, z for arity <= 3, otherwise v0, v1, ...
std::string variable_name(std::size_t nvars, std::size_t index);
std::string to_string(const Poly& f);

}  // namespace effint
