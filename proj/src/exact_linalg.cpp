#include "klab/exact_linalg.hpp"

#include "klab/errors.hpp"

#include <utility>

namespace klab {

namespace {

std::size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// Reduces [a | rhs] to [I | a^{-1} rhs] in place.
void gauss_jordan(RationalMatrix& a, RationalMatrix& rhs) {
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        std::size_t best = 0;
        for (std::size_t row = col; row < n; ++row) {
            if (sgn(a(row, col)) == 0) continue;
            const std::size_t size = bit_size(a(row, col));
            if (pivot == n || size < best) {
                pivot = row;
                best = size;
            }
        }
        if (pivot == n) throw InvalidInput("matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(pivot, j), rhs(col, j));
        }

        const Rational inv = 1 / a(col, col);
        for (std::size_t j = col; j < n; ++j) a(col, j) *= inv;
        for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(col, j) *= inv;

        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || sgn(a(row, col)) == 0) continue;
            const Rational factor = a(row, col);
            for (std::size_t j = col; j < n; ++j) a(row, j) -= factor * a(col, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(row, j) -= factor * rhs(col, j);
        }
    }
}

} // namespace

RationalMatrix inverse(const RationalMatrix& a) {
    if (!a.is_square()) throw InvalidInput("inverse of a non-square matrix");
    RationalMatrix work = a;
    RationalMatrix out = RationalMatrix::identity(a.rows());
    gauss_jordan(work, out);
    return out;
}

std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
    if (!a.is_square() || b.size() != a.rows()) throw InvalidInput("solve: dimension mismatch");
    RationalMatrix work = a;
    RationalMatrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    gauss_jordan(work, rhs);
    std::vector<Rational> x(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
    return x;
}

BigInt bareiss_determinant(IntegerMatrix a) {
    if (!a.is_square()) throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    int sign = 1;
    BigInt previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(a(swap_row, k)) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt value = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
                a(i, j) = std::move(value);
            }
            a(i, k) = 0;
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

} // namespace klab
