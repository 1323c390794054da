#include "effint/foliation.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "effint/error.hpp"

namespace effint {

VectorField::VectorField(Poly p, Poly q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.arity() != 2 || q_.arity() != 2)
    throw ArityMismatch("vector field components must be 2-variable polynomials");
  if (p_.is_zero() && q_.is_zero()) throw DomainError("zero vector field");
  const Poly g = gcd(p_, q_);
  if (!g.is_constant()) {
    p_ = *exact_div(p_, g);
    q_ = *exact_div(q_, g);
    removed_ = g;
  }
}

FoliationInfo foliation_degree(const VectorField& X) {
  const Degree dp = X.P().degree();
  const Degree dq = X.Q().degree();
  const long long D = std::max(dp, dq).value();
  const Poly pd = X.P().homogeneous_part(static_cast<std::uint64_t>(D));
  const Poly qd = X.Q().homogeneous_part(static_cast<std::uint64_t>(D));
  const Poly x = Poly::variable(2, 0);
  const Poly y = Poly::variable(2, 1);
  const bool radial = (x * qd - y * pd).is_zero();

  FoliationInfo info;
  info.max_coeff_degree_D = static_cast<int>(D);
  info.degree_d = static_cast<int>(radial ? D - 1 : D);
  info.infinity_invariant = !radial;
  return info;
}

Poly lie_derivative(const VectorField& X, const Poly& f) {
  return X.P() * diff(f, 0) + X.Q() * diff(f, 1);
}

Poly divergence(const VectorField& X) { return diff(X.P(), 0) + diff(X.Q(), 1); }

std::optional<DarbouxCandidate> cofactor(const VectorField& X, const Poly& f) {
  if (f.arity() != 2) throw ArityMismatch("candidate curve must be a 2-variable polynomial");
  if (f.is_constant()) throw ConstantInput("candidate curve must be non-constant");
  const Poly canon = canonical(f);
  auto k = exact_div(lie_derivative(X, canon), canon);
  if (!k) return std::nullopt;

  const int D = foliation_degree(X).max_coeff_degree_D;
  if (k->degree() > Degree(D - 1))
    throw DomainError("internal: cofactor degree exceeds max(deg P, deg Q) - 1");

  const Poly sq = gcd(gcd(canon, diff(canon, 0)), diff(canon, 1));
  return DarbouxCandidate{canon, std::move(*k), sq.is_constant()};
}

std::size_t extactic_size(unsigned n) { return static_cast<std::size_t>(n + 1) * (n + 2) / 2; }

unsigned extactic_max_degree(const ExtacticOptions& options) {
  unsigned n = 0;
  while (extactic_size(n + 1) <= options.max_size) ++n;
  return n;
}

Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t size = m.size();
  if (size == 0) return Poly::constant(2, Rational(1));
  const std::size_t arity = m[0][0].arity();
  bool negate = false;
  Poly previous = Poly::constant(arity, Rational(1));
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < size && m[swap_with][k].is_zero()) ++swap_with;
      if (swap_with == size) return Poly(arity);
      std::swap(m[k], m[swap_with]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = exact_div(num, previous);
        if (!q) throw DomainError("internal: Bareiss division was not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Poly(arity);
    }
    previous = m[k][k];
  }
  Poly det = m[size - 1][size - 1];
  return negate ? -det : det;
}

namespace {

std::vector<std::vector<Poly>> extactic_matrix(const VectorField& X, unsigned n,
                                               const ExtacticOptions& options) {
  if (n == 0) throw DomainError("extactic degree must be at least 1");
  const std::size_t size = extactic_size(n);
  if (size > options.max_size)
    throw ResourceLimit("extactic: matrix size " + std::to_string(size) + " exceeds cap " +
                        std::to_string(options.max_size) + " (n = " + std::to_string(n) + ")");

  const auto basis = monomials_up_to(2, n);
  std::vector<std::vector<Poly>> rows(size, std::vector<Poly>(size, Poly(2)));
  for (std::size_t j = 0; j < size; ++j) {
    rows[0][j] = Poly::term(basis[j], Rational(1));
    for (std::size_t r = 1; r < size; ++r) rows[r][j] = lie_derivative(X, rows[r - 1][j]);
  }
  return rows;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t size = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t pivot = k;
    while (pivot < size && m[pivot][k] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != k) {
      std::swap(m[k], m[pivot]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < size; ++i) {
      if (m[i][k] == 0) continue;
      const Rational factor = m[i][k] / m[k][k];
      for (std::size_t j = k + 1; j < size; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det;
}

// Off the axes and diagonals, where extactics of symmetric examples tend to vanish.
constexpr int kSamplePoints[][2] = {{3, 7}, {-5, 11}, {13, -2}, {17, 19}};

}  // namespace

Poly extactic(const VectorField& X, unsigned n, const ExtacticOptions& options) {
  return determinant(extactic_matrix(X, n, options));
}

bool detect_rational_first_integral(const VectorField& X, unsigned n,
                                    const ExtacticOptions& options) {
  auto rows = extactic_matrix(X, n, options);
  // A nonzero value at any point certifies a nonzero extactic.
  for (const auto& pt : kSamplePoints) {
    const std::array<Rational, 2> at{Rational(pt[0]), Rational(pt[1])};
    std::vector<std::vector<Rational>> values(rows.size(), std::vector<Rational>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) values[i][j] = eval(rows[i][j], at);
    if (determinant(std::move(values)) != 0) return false;
  }
  return determinant(std::move(rows)).is_zero();
}

}  // namespace effint
