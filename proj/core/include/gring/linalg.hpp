#pragma once

#include <gmpxx.h>

#include <vector>

namespace gring::linalg {

using IntRow = std::vector<mpz_class>;
using IntMat = std::vector<IntRow>;

IntMat identity(std::size_t n);
IntMat transpose(const IntMat& a);
IntMat mul(const IntMat& a, const IntMat& b);
IntRow mul(const IntRow& v, const IntMat& a);
IntMat kron(const IntMat& a, const IntMat& b);
IntRow kron(const IntRow& a, const IntRow& b);

// Determinant by fraction-free (Bareiss) elimination. Square input.
mpz_class det(IntMat a);

// Adjugate matrix: a * adjugate(a) == det(a) * I. Requires det(a) != 0.
IntMat adjugate(const IntMat& a);

// Row-style Hermite normal form, in place: pivots positive, pivot columns
// strictly increasing, entries above each pivot reduced into [0, pivot).
// Zero rows sink to the bottom. If `transform` is non-null it receives a
// unimodular matrix U with U * input == output. Returns the pivot columns.
std::vector<std::size_t> hnf_inplace(IntMat& a, IntMat* transform);

// Basis rows of { u : u * a == 0 }.
IntMat left_kernel(const IntMat& a);

// Nonzero diagonal of the Smith normal form, each entry dividing the next.
std::vector<mpz_class> smith_diagonal(IntMat a);

}  // namespace gring::linalg
