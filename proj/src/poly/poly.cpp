#include "effint/poly.hpp"

#include <algorithm>
#include <utility>

#include "effint/error.hpp"

namespace effint {

long long Degree::value() const {
  if (minus_infinity_) throw DomainError("degree of the zero polynomial is -infinity");
  return value_;
}

std::string to_string(const Degree& d) {
  return d.is_minus_infinity() ? std::string("-inf") : std::to_string(d.value());
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned n) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (n == 0) out.emplace_back(0);
    return out;
  }
  // Recursive composition of n into nvars parts, first variable largest first.
  std::vector<std::uint32_t> exps(nvars, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == nvars) {
      exps[var] = remaining;
      out.emplace_back(exps);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      exps[var] = e;
      self(self, var + 1, remaining - e);
    }
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end(), DegRevLexGreater{});
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned n) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= n; ++d) {
    auto layer = monomials_of_degree(nvars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw ArityMismatch("variable index out of range");
  Poly p(nvars);
  p.add_term(Monomial::unit(nvars, index), Rational(1));
  return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

Rational Poly::constant_term() const { return coefficient(Monomial(nvars_)); }

Degree Poly::degree() const {
  if (terms_.empty()) return Degree::minus_infinity();
  // Degrevlex is graded, so the first term has maximal total degree.
  return Degree(static_cast<long long>(terms_.begin()->first.total_degree()));
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

Poly Poly::homogeneous_part(std::uint64_t deg) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.total_degree() == deg) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

bool Poly::uses_variable(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m[var] != 0) return true;
  return false;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw ArityMismatch("monomial arity does not match polynomial");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Poly::check_arity(const Poly& other) const {
  if (other.nvars_ != nvars_) throw ArityMismatch("polynomial arities differ");
}

Poly& Poly::operator+=(const Poly& other) {
  check_arity(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_arity(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_arity(b);
  Poly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::mul_monomial(const Monomial& m, const Rational& c) const {
  Poly out(nvars_);
  if (sgn(c) == 0) return out;
  // Multiplication by a monomial preserves degrevlex order.
  for (const auto& [mt, ct] : terms_) out.terms_.emplace_hint(out.terms_.end(), mt * m, ct * c);
  return out;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(base.arity(), Rational(1));
  Poly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

Poly diff(const Poly& f, std::size_t var) {
  if (var >= f.arity()) throw ArityMismatch("derivative variable out of range");
  Poly out(f.arity());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    out.add_term(d, c * m[var]);
  }
  return out;
}

Degree degree(const Poly& f) { return f.degree(); }

Rational eval(const Poly& f, std::span<const Rational> point) {
  if (point.size() != f.arity()) throw ArityMismatch("evaluation point has wrong dimension");
  Rational sum(0);
  for (const auto& [m, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Poly substitute(const Poly& f, std::span<const Poly> images) {
  if (images.size() != f.arity()) throw ArityMismatch("substitution needs one image per variable");
  if (images.empty()) return f;
  const std::size_t target = images.front().arity();
  std::vector<std::vector<Poly>> powers(images.size());
  Poly out(target);
  for (const auto& [m, c] : f.terms()) {
    Poly t = Poly::constant(target, c);
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Poly::constant(target, Rational(1)));
      while (cache.size() <= m[i]) cache.push_back(cache.back() * images[i]);
      t *= cache[m[i]];
    }
    out += t;
  }
  return out;
}

Poly substitute_value(const Poly& f, std::size_t var, const Rational& value) {
  Poly out(f.arity());
  for (const auto& [m, c] : f.terms()) {
    Rational t = c;
    for (std::uint32_t e = 0; e < m[var]; ++e) t *= value;
    Monomial r = m;
    r[var] = 0;
    out.add_term(r, t);
  }
  return out;
}

std::optional<Poly> exact_div(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZeroPoly();
  if (f.arity() != g.arity()) throw ArityMismatch("polynomial arities differ");
  const Monomial& lg = g.leading_monomial();
  const Rational& cg = g.leading_coefficient();
  Poly rem = f;
  Poly quot(f.arity());
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial();
    if (!lg.divides(lr)) return std::nullopt;
    const Monomial m = lr / lg;
    const Rational c = rem.leading_coefficient() / cg;
    quot.add_term(m, c);
    rem -= g.mul_monomial(m, c);
  }
  return quot;
}

Poly homogenize(const Poly& f, long long target_degree) {
  if (f.arity() != 2) throw ArityMismatch("homogenize expects a 2-variable polynomial");
  if (!f.is_zero() && f.degree().value() > target_degree)
    throw TargetTooSmall("target degree " + std::to_string(target_degree) +
                         " is below the polynomial degree");
  if (target_degree < 0) throw TargetTooSmall("negative target degree");
  Poly out(3);
  for (const auto& [m, c] : f.terms()) {
    const auto d = static_cast<long long>(m.total_degree());
    out.add_term(Monomial{m[0], m[1], static_cast<std::uint32_t>(target_degree - d)}, c);
  }
  return out;
}

Poly dehomogenize(const Poly& f) {
  if (f.arity() != 3) throw ArityMismatch("dehomogenize expects a 3-variable polynomial");
  Poly out(2);
  for (const auto& [m, c] : f.terms()) out.add_term(Monomial{m[0], m[1]}, c);
  return out;
}

Rational content(const Poly& f) {
  if (f.is_zero()) return Rational(0);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  return make_rational(num_gcd, den_lcm);
}

Poly canonical(const Poly& f) {
  if (f.is_zero()) return f;
  Rational scale = 1 / content(f);
  if (sgn(f.leading_coefficient()) < 0) scale = -scale;
  return f * scale;
}

namespace {

// Coefficients of f viewed as a polynomial in `var`; entry i multiplies var^i.
std::vector<Poly> coefficients_in(const Poly& f, std::size_t var) {
  std::vector<Poly> coeffs(f.is_zero() ? 0 : f.degree_in(var) + 1, Poly(f.arity()));
  for (const auto& [m, c] : f.terms()) {
    Monomial r = m;
    r[var] = 0;
    coeffs[m[var]].add_term(r, c);
  }
  return coeffs;
}

std::optional<std::size_t> main_variable(const Poly& f, const Poly& g) {
  for (std::size_t v = f.arity(); v-- > 0;)
    if (f.uses_variable(v) || g.uses_variable(v)) return v;
  return std::nullopt;
}

Poly divide_exactly(const Poly& f, const Poly& g) {
  auto q = exact_div(f, g);
  if (!q) throw DomainError("internal: expected exact division in gcd");
  return *q;
}

Poly gcd_impl(const Poly& f, const Poly& g);

// gcd of the coefficients of f with respect to var.
Poly content_in(const Poly& f, std::size_t var) {
  Poly c(f.arity());
  for (const auto& coeff : coefficients_in(f, var)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? canonical(coeff) : gcd_impl(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

Poly primitive_part_in(const Poly& f, std::size_t var) {
  if (f.is_zero()) return f;
  return canonical(divide_exactly(f, content_in(f, var)));
}

// Pseudo-remainder of a by b with respect to var.
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
  const std::uint32_t db = b.degree_in(var);
  const Poly lb = coefficients_in(b, var).back();
  Poly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const std::uint32_t dr = r.degree_in(var);
    const Poly lr = coefficients_in(r, var).back();
    Monomial shift(a.arity());
    shift[var] = dr - db;
    r = lb * r - lr * b.mul_monomial(shift, Rational(1));
  }
  return r;
}

Poly gcd_impl(const Poly& f, const Poly& g) {
  if (f.is_zero()) return canonical(g);
  if (g.is_zero()) return canonical(f);
  const auto var = main_variable(f, g);
  if (!var) return Poly::constant(f.arity(), Rational(1));
  const std::size_t v = *var;
  if (!f.uses_variable(v)) return gcd_impl(f, content_in(g, v));
  if (!g.uses_variable(v)) return gcd_impl(content_in(f, v), g);

  const Poly cf = content_in(f, v);
  const Poly cg = content_in(g, v);
  const Poly c = gcd_impl(cf, cg);
  Poly a = canonical(divide_exactly(f, cf));
  Poly b = canonical(divide_exactly(g, cg));
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree_in(v) == 0) {
      a = Poly::constant(f.arity(), Rational(1));
      break;
    }
    Poly r = pseudo_remainder(a, b, v);
    a = std::move(b);
    b = primitive_part_in(r, v);
  }
  return canonical(c * a);
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
  if (f.arity() != g.arity()) throw ArityMismatch("polynomial arities differ");
  return gcd_impl(f, g);
}

std::string variable_name(std::size_t nvars, std::size_t index) {
  static constexpr char kNames[] = {'x', 'y', 'z'};
  if (nvars <= 3) return std::string(1, kNames[index]);
  return "v" + std::to_string(index);
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(f.arity(), i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace effint
