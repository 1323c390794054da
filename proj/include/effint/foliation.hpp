#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "effint/poly.hpp"

namespace effint {

// Affine chart presentation X = P d/dx + Q d/dy of a foliation of the projective plane.
// A non-constant common factor of P and Q is divided out at construction.
class VectorField {
 public:
  // Throws DomainError when both components vanish, ArityMismatch unless both have arity 2.
  VectorField(Poly p, Poly q);

  const Poly& P() const noexcept { return p_; }
  const Poly& Q() const noexcept { return q_; }
  // The canonical common factor removed at construction, if any.
  const std::optional<Poly>& removed_factor() const noexcept { return removed_; }

 private:
  Poly p_;
  Poly q_;
  std::optional<Poly> removed_;
};

struct FoliationInfo {
  int degree_d = 0;             // foliation degree on the projective plane
  int max_coeff_degree_D = 0;   // max(deg P, deg Q)
  bool infinity_invariant = false;
};

// d = D unless the top homogeneous part is radial (x Q_D - y P_D == 0), then d = D - 1.
FoliationInfo foliation_degree(const VectorField& X);

// X(f) = P f_x + Q f_y.
Poly lie_derivative(const VectorField& X, const Poly& f);
Poly divergence(const VectorField& X);

// An invariant polynomial with its exact cofactor: X(f) = k f.
struct DarbouxCandidate {
  Poly f;         // canonical normalization
  Poly cofactor;  // deg <= D - 1
  bool square_free = true;

  friend bool operator==(const DarbouxCandidate&, const DarbouxCandidate&) = default;
};

// Returns the candidate when f is invariant, nullopt otherwise. Throws ConstantInput.
std::optional<DarbouxCandidate> cofactor(const VectorField& X, const Poly& f);

struct ExtacticOptions {
  std::size_t max_size = 21;  // cap on the matrix dimension (n + 1)(n + 2) / 2
};

// Size of the extactic matrix for degree n.
std::size_t extactic_size(unsigned n);
// Largest n whose extactic matrix fits the cap.
unsigned extactic_max_degree(const ExtacticOptions& options = {});

// Determinant of rows (v_j), (X v_j), ..., (X^{l-1} v_j) over the monomials of degree <= n,
// ordered 1, x, y, x^2, xy, y^2, ... Throws ResourceLimit past the size cap.
Poly extactic(const VectorField& X, unsigned n, const ExtacticOptions& options = {});

// Flags the rational-first-integral regime: true iff the degree-n extactic vanishes.
bool detect_rational_first_integral(const VectorField& X, unsigned n,
                                    const ExtacticOptions& options = {});

// Exact determinant of a square polynomial matrix (fraction-free Bareiss elimination).
Poly determinant(std::vector<std::vector<Poly>> matrix);

}  // namespace effint
