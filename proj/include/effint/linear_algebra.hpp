#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "effint/rational.hpp"

namespace effint {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

// Reduced row echelon form in place; returns pivot columns in increasing order.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t columns);

// Basis of {x : A x = 0}, one vector per free column, in increasing free-column order.
std::vector<RationalVector> kernel_basis(const RationalMatrix& a, std::size_t columns);

// Particular solution of A x = b with free variables set to zero, or nullopt if inconsistent.
std::optional<RationalVector> particular_solution(const RationalMatrix& a, const RationalVector& b,
                                                  std::size_t columns);

// Solution of A x = b minimizing max_i |x_i|; ties resolved toward the lexicographically
// smallest vector. Nullopt if inconsistent. Falls back to particular_solution when the
// vertex enumeration would exceed max_subsets.
std::optional<RationalVector> min_height_solution(const RationalMatrix& a, const RationalVector& b,
                                                  std::size_t columns,
                                                  std::size_t max_subsets = 200000);

// Clears denominators and divides by the content; first nonzero entry made positive.
RationalVector primitive_integer_vector(const RationalVector& v);

}  // namespace effint
