#ifndef KLAB_EXACT_LINALG_HPP
#define KLAB_EXACT_LINALG_HPP

#include "klab/matrix.hpp"

namespace klab {

/*
 * Exact dense linear algebra over Q and Z.
 *
 * Gauss-Jordan elimination picks, among the nonzero candidates in the pivot
 * column, the entry with the fewest numerator+denominator bits. That keeps
 * intermediate growth down on Laplacian-like inputs without changing the
 * result (everything is exact).
 *
 * Determinants of integer matrices use Bareiss fraction-free elimination:
 * every intermediate division is exact, so entries stay in Z.
 */

/// Throws InvalidInput when the matrix is singular or not square.
RationalMatrix inverse(const RationalMatrix& a);

/// Solves a x = b for square nonsingular a.
std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b);

BigInt bareiss_determinant(IntegerMatrix a);

} // namespace klab

#endif // KLAB_EXACT_LINALG_HPP
