#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace effint {

// Exponent vector of fixed arity.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t nvars, std::size_t var) {
    Monomial m(nvars);
    m.exps_[var] = 1;
    return m;
  }

  std::size_t nvars() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  bool is_one() const noexcept {
    for (auto e : exps_)
      if (e != 0) return false;
    return true;
  }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    return r;
  }

  // Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i)
      if (b.exps_[i] > r.exps_[i]) r.exps_[i] = b.exps_[i];
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

// Graded reverse lexicographic comparison with x_0 > x_1 > ... .
// Returns <0, 0, >0 as a is smaller, equal, or larger than b.
inline int compare_degrevlex(const Monomial& a, const Monomial& b) noexcept {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

// Map comparator placing the degrevlex-largest monomial first.
struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return compare_degrevlex(a, b) > 0;
  }
};

// All monomials of total degree <= n in `nvars` variables, ascending by degree and
// descending degrevlex within a degree: 1, x, y, x^2, xy, y^2, ...
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned n);

// All monomials of total degree exactly n, descending degrevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned n);

}  // namespace effint
