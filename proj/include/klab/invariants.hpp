#ifndef KLAB_INVARIANTS_HPP
#define KLAB_INVARIANTS_HPP

#include "klab/graph.hpp"
#include "klab/matrix.hpp"
#include "klab/rational.hpp"
#include "klab/spectral.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace klab {

// Symmetric, zero diagonal, r_ij > 0 off the diagonal on connected graphs.
struct ResistanceMatrix {
    RationalMatrix entries;

    [[nodiscard]] std::size_t order() const { return entries.rows(); }
    [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j) const { return entries(i, j); }
};

enum class ResistanceRoute {
    Grounded,      // invert L with one vertex grounded
    Pseudoinverse, // L+ = (L + J/n)^{-1} - J/n
};

/// Exact effective resistances with unit edge resistors.
/// Throws NotConnected on disconnected input.
ResistanceMatrix resistance_matrix(const Graph& g, ResistanceRoute route = ResistanceRoute::Grounded);

/// L+ via (L + J/n)^{-1} - J/n.
RationalMatrix laplacian_pseudoinverse(const Graph& g);

Rational kirchhoff_index(const Graph& g);
Rational mult_deg_kirchhoff_index(const Graph& g);

/// Value computed from a spectrum: exact when the spectrum is exact.
struct SpectralValue {
    std::optional<Rational> exact;
    double approx = 0.0;

    [[nodiscard]] bool is_exact() const { return exact.has_value(); }
};

/// n_vertices * sum of 1/mu over nonzero Laplacian eigenvalues; a cubic
/// factor contributes e2/e3. Throws NotConnectedSpectrum unless exactly one
/// eigenvalue is zero.
SpectralValue kf_from_spectrum(const Spectrum& s, std::size_t n_vertices);

/// 2m * sum of 1/nu over nonzero normalized Laplacian eigenvalues.
SpectralValue kfstar_from_spectrum(const Spectrum& s, std::size_t m_edges);

/// Product of nonzero Laplacian eigenvalues over n_vertices; a cubic
/// contributes e3. Exact results must be positive integers (else
/// Inconsistency).
SpectralValue tau_from_spectrum(const Spectrum& s, std::size_t n_vertices);

/// Matrix-tree count via a Bareiss determinant of L with row/column
/// `removed` deleted. Returns 0 for disconnected graphs.
BigInt spanning_trees(const Graph& g, Vertex removed = 0);

std::int64_t wiener_index(const Graph& g);
std::int64_t gutman_index(const Graph& g);

/// w_i = sum_j d_ij.
std::vector<std::int64_t> transmissions(const Graph& g);
/// g_i = sum_j d_i d_j d_ij.
std::vector<std::int64_t> degree_transmissions(const Graph& g);

// Floating counterparts for graphs beyond the exact-arithmetic cap.
double kirchhoff_index_float(const Graph& g);
double mult_deg_kirchhoff_index_float(const Graph& g);
/// Natural log of the spanning-tree count.
double log_spanning_trees_float(const Graph& g);

} // namespace klab

#endif // KLAB_INVARIANTS_HPP
