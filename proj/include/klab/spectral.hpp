#ifndef KLAB_SPECTRAL_HPP
#define KLAB_SPECTRAL_HPP

#include "klab/graph.hpp"
#include "klab/matrix.hpp"
#include "klab/rational.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace klab {

RationalMatrix laplacian(const Graph& g);

/*
 * D^{-1/2} L D^{-1/2}. Off-diagonal entries are -1/sqrt(d_i d_j); the exact
 * form is only available when every such product is a perfect square.
 * `floating` is always populated.
 */
struct NormalizedLaplacian {
    std::optional<RationalMatrix> exact;
    Eigen::MatrixXd floating;
};

NormalizedLaplacian normalized_laplacian(const Graph& g);

/// Vertex i pairs with i + shift for i < shift; the matrix order is 2 * shift.
struct MirrorPairing {
    std::size_t shift = 0;

    [[nodiscard]] std::size_t partner(std::size_t i) const {
        return i < shift ? i + shift : i - shift;
    }
};

/// True when swapping every vertex with its partner maps edges to edges.
bool is_automorphism(const Graph& g, MirrorPairing pairing);

/*
 * Block split under a mirror pairing. With M = [[M11, M12], [M21, M22]],
 * requires M11 == M22 and M12 == M21 and returns (M11 + M12, M11 - M12).
 * The spectrum of M is the multiset union of the two blocks' spectra.
 */
std::pair<RationalMatrix, RationalMatrix> mirror_split(const RationalMatrix& m,
                                                       MirrorPairing pairing);
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> mirror_split(const Eigen::MatrixXd& m,
                                                         MirrorPairing pairing,
                                                         double tol = 1e-12);

/// Monic lambda^3 - e1 lambda^2 + e2 lambda - e3, held by its Vieta sums.
struct CubicFactor {
    Rational e1;
    Rational e2;
    Rational e3;

    [[nodiscard]] Rational evaluate(const Rational& x) const {
        return ((x - e1) * x + e2) * x - e3;
    }

    /// Real roots in ascending order (floating). Newton from above the largest
    /// root, then deflation to a quadratic.
    [[nodiscard]] std::array<double, 3> roots() const;

    friend bool operator==(const CubicFactor&, const CubicFactor&) = default;
};

/// e2 / e3, i.e. the sum of reciprocal roots. Throws SingularCubic if e3 == 0.
Rational vieta_reciprocal_sum(const CubicFactor& c);

struct ExactEigenvalue {
    Rational value;
    long multiplicity = 0;

    friend bool operator==(const ExactEigenvalue&, const ExactEigenvalue&) = default;
};

/*
 * Eigenvalue multiset. Either exact (sorted distinct rationals with
 * multiplicities, plus at most one cubic factor whose three roots are part of
 * the multiset) or floating (sorted values with a comparison tolerance).
 */
class Spectrum {
public:
    enum class Representation { Exact, Floating };

    /// Merges equal values, drops zero multiplicities, rejects negative ones.
    static Spectrum exact(std::vector<ExactEigenvalue> entries,
                          std::optional<CubicFactor> cubic = std::nullopt);
    static Spectrum floating(std::vector<double> values, double tol);

    [[nodiscard]] Representation representation() const { return representation_; }
    [[nodiscard]] bool is_exact() const { return representation_ == Representation::Exact; }
    [[nodiscard]] const std::vector<ExactEigenvalue>& exact_entries() const { return exact_; }
    [[nodiscard]] const std::optional<CubicFactor>& cubic() const { return cubic_; }
    [[nodiscard]] const std::vector<double>& floating_values() const { return floating_; }
    [[nodiscard]] double tolerance() const { return tol_; }

    /// Total multiplicity.
    [[nodiscard]] std::size_t size() const;

    /// Every eigenvalue as a double, ascending; cubic roots included.
    [[nodiscard]] std::vector<double> values() const;

    /// Exact sum of eigenvalues (cubic contributes e1). Exact spectra only.
    [[nodiscard]] Rational exact_sum() const;

private:
    Representation representation_ = Representation::Exact;
    std::vector<ExactEigenvalue> exact_;
    std::optional<CubicFactor> cubic_;
    std::vector<double> floating_;
    double tol_ = 0.0;
};

/// Sorted multiset comparison of values() with absolute tolerance.
bool spectra_match(const std::vector<double>& a, const std::vector<double>& b, double tol);
std::vector<double> merge_spectra(const std::vector<double>& a, const std::vector<double>& b);

struct EigenPairs {
    Eigen::VectorXd values;  // ascending
    Eigen::MatrixXd vectors; // column k belongs to values[k]
};

/// Symmetric dense eigensolve. Throws InvalidInput on a non-symmetric input.
Spectrum numeric_spectrum(const Eigen::MatrixXd& m, double tol);
Spectrum numeric_spectrum(const RationalMatrix& m, double tol);
EigenPairs numeric_eigenpairs(const Eigen::MatrixXd& m, double tol);

/// Laplacian spectrum of S_n x K_2: {0, 1^(n-2), 2, 3^(n-2), n, n+2}.
Spectrum analytic_spectrum_L_sn2(int n);

/// Normalized Laplacian spectrum of S_n x K_2:
/// {0, (1/2)^(n-2), (n+2)/(2n), (3n-2)/(2n), (3/2)^(n-2), 2}.
Spectrum analytic_spectrum_NL_sn2(int n);

/// Cubic factor of the antisymmetric Laplacian block for r deleted vertical
/// edges. Center edge deleted: (n+3, 3n, 2n-2r). Center edge kept:
/// (n+5, 3n+8, 2n-2r+4).
CubicFactor snr2_cubic(int n, int r, bool center_deleted);

/*
 * Laplacian spectrum of an r-deleted member, 1 <= r <= n-1.
 *
 * Center edge deleted: {0, 1^(n+r-4), n, 3^(n-r-1)} plus the cubic roots.
 * Center edge kept:    {0, 1^(n+r-3), n, 3^(n-r-2)} plus the cubic roots.
 *
 * When a multiplicity would be negative (n = 2 with the center deleted, or
 * r = n-1 with the center kept) the cubic shares a root with the removed
 * factor; the result then falls back to the numeric spectrum of a
 * representative graph and is returned in floating form.
 */
Spectrum analytic_spectrum_L_snr2(int n, int r, bool center_deleted, double tol = 1e-9);

/// The two non-unit roots for r = 1 with the center edge deleted:
/// (n + 2 -/+ sqrt(n^2 - 4n + 12)) / 2.
std::pair<double, double> single_deletion_quadratic_roots(int n);

} // namespace klab

#endif // KLAB_SPECTRAL_HPP
