#include "klab/invariants.hpp"

#include "klab/errors.hpp"
#include "klab/exact_linalg.hpp"

#include <algorithm>
#include <cmath>

namespace klab {

namespace {

void require_connected(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g)) throw NotConnected("graph is not connected");
}

ResistanceMatrix from_generalized_inverse(const RationalMatrix& x) {
    const std::size_t n = x.rows();
    ResistanceMatrix out{RationalMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational r = x(i, i) + x(j, j) - 2 * x(i, j);
            out.entries(i, j) = r;
            out.entries(j, i) = std::move(r);
        }
    }
    return out;
}

// Inverse of L with the row and column of vertex 0 removed, padded back to
// full order with zeros in that row and column.
RationalMatrix grounded_inverse(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const RationalMatrix l = laplacian(g);
    RationalMatrix reduced(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) reduced(i - 1, j - 1) = l(i, j);
    const RationalMatrix inv = n > 1 ? inverse(reduced) : reduced;
    RationalMatrix out(n, n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) out(i, j) = inv(i - 1, j - 1);
    return out;
}


double spectrum_zero_tol(const Spectrum& s) {
    const auto& v = s.floating_values();
    double scale = 1.0;
    for (double x : v) scale = std::max(scale, std::abs(x));
    return (s.tolerance() > 0 ? s.tolerance() : 1e-9) * scale;
}

void require_single_zero(long zeros) {
    if (zeros != 1)
        throw NotConnectedSpectrum("expected exactly one zero eigenvalue, found " + std::to_string(zeros));
}

long exact_zero_count(const Spectrum& s) {
    long zeros = 0;
    for (const auto& e : s.exact_entries())
        if (sgn(e.value) == 0) zeros += e.multiplicity;
    if (s.cubic() && sgn(s.cubic()->e3) == 0) ++zeros;
    return zeros;
}

// Sum of reciprocals of the nonzero eigenvalues.
SpectralValue reciprocal_sum(const Spectrum& s) {
    SpectralValue out;
    if (s.is_exact()) {
        require_single_zero(exact_zero_count(s));
        Rational sum = 0;
        for (const auto& e : s.exact_entries())
            if (sgn(e.value) != 0) sum += Rational(e.multiplicity) / e.value;
        if (s.cubic()) sum += vieta_reciprocal_sum(*s.cubic());
        out.approx = sum.get_d();
        out.exact = std::move(sum);
        return out;
    }
    const double tol = spectrum_zero_tol(s);
    long zeros = 0;
    double sum = 0;
    for (double x : s.floating_values()) {
        if (std::abs(x) <= tol)
            ++zeros;
        else
            sum += 1.0 / x;
    }
    require_single_zero(zeros);
    out.approx = sum;
    return out;
}

SpectralValue scaled(SpectralValue v, std::size_t factor) {
    v.approx *= static_cast<double>(factor);
    if (v.exact) *v.exact *= static_cast<unsigned long>(factor);
    return v;
}

} // namespace

ResistanceMatrix resistance_matrix(const Graph& g, ResistanceRoute route) {
    require_connected(g);
    if (route == ResistanceRoute::Grounded) return from_generalized_inverse(grounded_inverse(g));
    return from_generalized_inverse(laplacian_pseudoinverse(g));
}

RationalMatrix laplacian_pseudoinverse(const Graph& g) {
    require_connected(g);
    const std::size_t n = g.vertex_count();
    const Rational j(1, static_cast<unsigned long>(n));
    RationalMatrix shifted = laplacian(g);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) shifted(a, b) += j;
    RationalMatrix out = inverse(shifted);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out(a, b) -= j;
    return out;
}

Rational kirchhoff_index(const Graph& g) {
    const ResistanceMatrix r = resistance_matrix(g);
    Rational sum = 0;
    for (std::size_t i = 0; i < r.order(); ++i)
        for (std::size_t j = i + 1; j < r.order(); ++j) sum += r(i, j);
    return sum;
}

Rational mult_deg_kirchhoff_index(const Graph& g) {
    const ResistanceMatrix r = resistance_matrix(g);
    const auto deg = g.degrees();
    Rational sum = 0;
    for (std::size_t i = 0; i < r.order(); ++i)
        for (std::size_t j = i + 1; j < r.order(); ++j)
            sum += r(i, j) * static_cast<unsigned long>(deg[i] * deg[j]);
    return sum;
}

SpectralValue kf_from_spectrum(const Spectrum& s, std::size_t n_vertices) {
    return scaled(reciprocal_sum(s), n_vertices);
}

SpectralValue kfstar_from_spectrum(const Spectrum& s, std::size_t m_edges) {
    return scaled(reciprocal_sum(s), 2 * m_edges);
}

SpectralValue tau_from_spectrum(const Spectrum& s, std::size_t n_vertices) {
    SpectralValue out;
    if (n_vertices == 0) throw InvalidParameter("tau_from_spectrum needs a positive vertex count");
    if (s.is_exact()) {
        require_single_zero(exact_zero_count(s));
        Rational product = 1;
        for (const auto& e : s.exact_entries())
            if (sgn(e.value) != 0) product *= power(e.value, e.multiplicity);
        if (s.cubic()) product *= s.cubic()->e3;
        product /= static_cast<unsigned long>(n_vertices);
        if (product.get_den() != 1 || sgn(product) <= 0)
            throw Inconsistency("spanning-tree count from spectrum is not a positive integer: " + to_string(product));
        out.approx = product.get_d();
        out.exact = std::move(product);
        return out;
    }
    const double tol = spectrum_zero_tol(s);
    long zeros = 0;
    double log_product = 0;
    for (double x : s.floating_values()) {
        if (std::abs(x) <= tol)
            ++zeros;
        else
            log_product += std::log(x);
    }
    require_single_zero(zeros);
    out.approx = std::exp(log_product - std::log(static_cast<double>(n_vertices)));
    return out;
}

BigInt spanning_trees(const Graph& g, Vertex removed) {
    const std::size_t n = g.vertex_count();
    if (removed >= n) throw InvalidParameter("removed vertex out of range");
    if (!is_connected(g)) return 0;
    IntegerMatrix reduced(n - 1, n - 1);
    const auto index = [removed](Vertex v) { return v < removed ? v : v - 1; };
    for (Vertex v = 0; v < n; ++v) {
        if (v == removed) continue;
        reduced(index(v), index(v)) = static_cast<unsigned long>(g.degree(v));
    }
    for (const auto& [u, v] : g.edges()) {
        if (u == removed || v == removed) continue;
        reduced(index(u), index(v)) = -1;
        reduced(index(v), index(u)) = -1;
    }
    return bareiss_determinant(std::move(reduced));
}

std::vector<std::int64_t> transmissions(const Graph& g) {
    const DistanceMatrix d = distance_matrix(g);
    std::vector<std::int64_t> out(d.size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j) out[i] += d[i][j];
    return out;
}

std::vector<std::int64_t> degree_transmissions(const Graph& g) {
    const DistanceMatrix d = distance_matrix(g);
    std::vector<std::int64_t> out(d.size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            out[i] += static_cast<std::int64_t>(g.degree(i) * g.degree(j)) * d[i][j];
    return out;
}

std::int64_t wiener_index(const Graph& g) {
    require_connected(g);
    std::int64_t total = 0;
    for (std::int64_t w : transmissions(g)) total += w;
    return total / 2;
}

std::int64_t gutman_index(const Graph& g) {
    require_connected(g);
    std::int64_t total = 0;
    for (std::int64_t w : degree_transmissions(g)) total += w;
    return total / 2;
}

namespace {

Eigen::MatrixXd float_pseudoinverse(const Graph& g) {
    require_connected(g);
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        const auto a = static_cast<Eigen::Index>(u), b = static_cast<Eigen::Index>(v);
        l(a, a) += 1;
        l(b, b) += 1;
        l(a, b) -= 1;
        l(b, a) -= 1;
    }
    const Eigen::MatrixXd j = Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
    return Eigen::MatrixXd((l + j).ldlt().solve(Eigen::MatrixXd::Identity(n, n))) - j;
}

template <typename Weight>
double weighted_resistance_sum(const Graph& g, Weight weight) {
    const Eigen::MatrixXd x = float_pseudoinverse(g);
    double sum = 0;
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = i + 1; j < x.rows(); ++j)
            sum += weight(static_cast<Vertex>(i), static_cast<Vertex>(j)) * (x(i, i) + x(j, j) - 2 * x(i, j));
    return sum;
}

} // namespace

double kirchhoff_index_float(const Graph& g) {
    return weighted_resistance_sum(g, [](Vertex, Vertex) { return 1.0; });
}

double mult_deg_kirchhoff_index_float(const Graph& g) {
    return weighted_resistance_sum(g, [&g](Vertex i, Vertex j) {
        return static_cast<double>(g.degree(i) * g.degree(j));
    });
}

double log_spanning_trees_float(const Graph& g) {
    require_connected(g);
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    if (n == 1) return 0.0;
    Eigen::MatrixXd reduced = Eigen::MatrixXd::Zero(n - 1, n - 1);
    for (Vertex v = 1; v < g.vertex_count(); ++v)
        reduced(static_cast<Eigen::Index>(v) - 1, static_cast<Eigen::Index>(v) - 1) = static_cast<double>(g.degree(v));
    for (const auto& [u, v] : g.edges()) {
        if (u == 0 || v == 0) continue;
        reduced(static_cast<Eigen::Index>(u) - 1, static_cast<Eigen::Index>(v) - 1) = -1;
        reduced(static_cast<Eigen::Index>(v) - 1, static_cast<Eigen::Index>(u) - 1) = -1;
    }
    const Eigen::LLT<Eigen::MatrixXd> llt(reduced);
    if (llt.info() != Eigen::Success) throw Error("reduced Laplacian is not positive definite");
    double log_det = 0;
    for (Eigen::Index i = 0; i < n - 1; ++i) log_det += std::log(llt.matrixL()(i, i));
    return 2 * log_det;
}

} // namespace klab
