#include "effint/linear_algebra.hpp"

#include <algorithm>

namespace effint {

std::vector<std::size_t> rref(RationalMatrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& a, std::size_t columns) {
  RationalMatrix m = a;
  const auto pivots = rref(m, columns);
  std::vector<RationalVector> basis;
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> particular_solution(const RationalMatrix& a, const RationalVector& b,
                                                  std::size_t columns) {
  RationalMatrix m = a;
  for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
  const auto pivots = rref(m, columns);
  for (std::size_t r = pivots.size(); r < m.size(); ++r)
    if (sgn(m[r][columns]) != 0) return std::nullopt;
  RationalVector x(columns, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][columns];
  return x;
}

namespace {

// Solves a square system exactly; nullopt when singular.
std::optional<RationalVector> solve_square(RationalMatrix m, const RationalVector& rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t r = 0; r < n; ++r) m[r].push_back(rhs[r]);
  const auto pivots = rref(m, n);
  if (pivots.size() < n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = m[r][n];
  return x;
}

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

}  // namespace

std::optional<RationalVector> min_height_solution(const RationalMatrix& a, const RationalVector& b,
                                                  std::size_t columns, std::size_t max_subsets) {
  auto base = particular_solution(a, b, columns);
  if (!base) return std::nullopt;
  const auto kernel = kernel_basis(a, columns);
  const std::size_t r = kernel.size();
  if (r == 0) return base;

  // Minimize s subject to -s <= base_i + sum_j kernel_j[i] t_j <= s. The feasible set in
  // (t, s) is pointed, so the optimum sits at a vertex cut out by r + 1 tight constraints.
  const std::size_t constraints = 2 * columns;
  if (binomial_capped(constraints, r + 1, max_subsets) > max_subsets) return base;

  auto point = [&](const RationalVector& t) {
    RationalVector e = *base;
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < columns; ++i) e[i] += kernel[j][i] * t[j];
    return e;
  };
  auto height = [](const RationalVector& e) {
    Rational h = 0;
    for (const auto& v : e) h = std::max(h, Rational(abs(v)));
    return h;
  };

  std::optional<RationalVector> best;
  Rational best_height;
  std::vector<std::size_t> pick(r + 1);
  for (std::size_t i = 0; i <= r; ++i) pick[i] = i;
  for (;;) {
    // Row for constraint c: sigma * (kernel . t) - s = -sigma * base_i.
    RationalMatrix sys;
    RationalVector rhs;
    for (std::size_t c : pick) {
      const std::size_t i = c / 2;
      const int sigma = (c % 2 == 0) ? 1 : -1;
      RationalVector row(r + 1);
      for (std::size_t j = 0; j < r; ++j) row[j] = sigma * kernel[j][i];
      row[r] = -1;
      sys.push_back(std::move(row));
      rhs.push_back(-sigma * (*base)[i]);
    }
    if (auto sol = solve_square(std::move(sys), rhs)) {
      RationalVector t(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(r));
      const RationalVector e = point(t);
      const Rational h = height(e);
      if (h == (*sol)[r] && (!best || h < best_height || (h == best_height && e < *best))) {
        best = e;
        best_height = h;
      }
    }
    // Next combination.
    std::size_t k = r + 1;
    while (k > 0 && pick[k - 1] == constraints - (r + 1) + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t q = k; q <= r; ++q) pick[q] = pick[q - 1] + 1;
  }
  return best ? best : base;
}

RationalVector primitive_integer_vector(const RationalVector& v) {
  Integer den = 1;
  Integer num = 0;
  for (const auto& x : v) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
  }
  if (num == 0) return v;
  Rational scale = make_rational(den, num);
  for (const auto& x : v)
    if (sgn(x) != 0) {
      if (sgn(x) < 0) scale = -scale;
      break;
    }
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * scale);
  return out;
}

}  // namespace effint
