#include "klab/spectral.hpp"

#include "klab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace klab {

RationalMatrix laplacian(const Graph& g) {
    const std::size_t n = g.vertex_count();
    RationalMatrix l(n, n);
    for (Vertex v = 0; v < n; ++v) l(v, v) = static_cast<unsigned long>(g.degree(v));
    for (const auto& [u, v] : g.edges()) {
        l(u, v) = -1;
        l(v, u) = -1;
    }
    return l;
}

NormalizedLaplacian normalized_laplacian(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const auto deg = g.degrees();
    for (Vertex v = 0; v < n; ++v)
        if (deg[v] == 0) throw InvalidInput("normalized Laplacian undefined: vertex " + std::to_string(v) + " is isolated");

    NormalizedLaplacian out;
    out.floating = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    RationalMatrix exact = RationalMatrix::identity(n);
    bool rational = true;
    for (const auto& [u, v] : g.edges()) {
        const double w = -1.0 / std::sqrt(static_cast<double>(deg[u]) * static_cast<double>(deg[v]));
        out.floating(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = w;
        out.floating(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = w;
        if (!rational) continue;
        const BigInt product = BigInt(static_cast<unsigned long>(deg[u])) * static_cast<unsigned long>(deg[v]);
        if (mpz_perfect_square_p(product.get_mpz_t()) == 0) {
            rational = false;
            continue;
        }
        BigInt root;
        mpz_sqrt(root.get_mpz_t(), product.get_mpz_t());
        const Rational entry = Rational(-1) / Rational(root);
        exact(u, v) = entry;
        exact(v, u) = entry;
    }
    if (rational) out.exact = std::move(exact);
    return out;
}

bool is_automorphism(const Graph& g, MirrorPairing pairing) {
    if (g.vertex_count() != 2 * pairing.shift) return false;
    for (const auto& [u, v] : g.edges())
        if (!g.has_edge(pairing.partner(u), pairing.partner(v))) return false;
    return true;
}

namespace {

void require_pairing_order(std::size_t rows, std::size_t cols, MirrorPairing pairing) {
    if (rows != cols) throw InvalidInput("mirror_split needs a square matrix");
    if (pairing.shift == 0 || rows != 2 * pairing.shift)
        throw InvalidInput("mirror pairing shift " + std::to_string(pairing.shift) +
                           " does not halve order " + std::to_string(rows));
}

} // namespace

std::pair<RationalMatrix, RationalMatrix> mirror_split(const RationalMatrix& m, MirrorPairing pairing) {
    require_pairing_order(m.rows(), m.cols(), pairing);
    const std::size_t k = pairing.shift;
    RationalMatrix sum(k, k);
    RationalMatrix diff(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const Rational& m11 = m(i, j);
            const Rational& m12 = m(i, j + k);
            if (m(i + k, j + k) != m11 || m(i + k, j) != m12)
                throw NotMirrorSymmetric("block symmetry fails at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            sum(i, j) = m11 + m12;
            diff(i, j) = m11 - m12;
        }
    }
    return {std::move(sum), std::move(diff)};
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> mirror_split(const Eigen::MatrixXd& m, MirrorPairing pairing,
                                                         double tol) {
    require_pairing_order(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()), pairing);
    const auto k = static_cast<Eigen::Index>(pairing.shift);
    const Eigen::MatrixXd m11 = m.topLeftCorner(k, k);
    const Eigen::MatrixXd m12 = m.topRightCorner(k, k);
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m.bottomRightCorner(k, k) - m11).cwiseAbs().maxCoeff() > tol * scale ||
        (m.bottomLeftCorner(k, k) - m12).cwiseAbs().maxCoeff() > tol * scale)
        throw NotMirrorSymmetric("block symmetry fails");
    return {m11 + m12, m11 - m12};
}

namespace {

// Integer root of a monic integer cubic, if it has one (rational root theorem).
std::optional<BigInt> integer_root(const CubicFactor& c) {
    if (c.e1.get_den() != 1 || c.e2.get_den() != 1 || c.e3.get_den() != 1) return std::nullopt;
    const BigInt e3 = abs(c.e3.get_num());
    if (e3 == 0) return BigInt(0);
    if (e3 > 1000000) return std::nullopt;
    const long bound = e3.get_si();
    for (long d = 1; d <= bound; ++d) {
        if (bound % d != 0) continue;
        for (long candidate : {d, -d})
            if (c.evaluate(Rational(candidate)) == 0) return BigInt(candidate);
    }
    return std::nullopt;
}

// Real roots of x^2 + b x + c; a slightly negative discriminant is clamped.
std::array<double, 2> real_quadratic_roots(double b, double c) {
    const double disc = std::max(0.0, b * b - 4 * c);
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    if (q == 0.0) return {0.0, 0.0};
    double x1 = q;
    double x2 = c / q;
    if (x1 > x2) std::swap(x1, x2);
    return {x1, x2};
}

} // namespace

std::array<double, 3> CubicFactor::roots() const {
    std::array<double, 3> out{};
    if (auto root = integer_root(*this)) {
        // Exact deflation: x^3 - e1 x^2 + e2 x - e3 = (x - t)(x^2 + p x + q).
        const Rational t(*root);
        const Rational p = t - e1;
        const Rational q = e2 + p * t;
        const Rational disc = p * p - 4 * q;
        double lo = 0, hi = 0;
        if (sgn(disc) == 0) {
            lo = hi = Rational(-p / 2).get_d();
        } else {
            auto pair = real_quadratic_roots(p.get_d(), q.get_d());
            lo = pair[0];
            hi = pair[1];
        }
        out = {t.get_d(), lo, hi};
    } else {
        const double a = -e1.get_d(), b = e2.get_d(), c = -e3.get_d();
        const auto f = [&](double x) { return ((x + a) * x + b) * x + c; };
        const auto df = [&](double x) { return (3 * x + 2 * a) * x + b; };
        double x = 1 + std::max({std::abs(a), std::abs(b), std::abs(c)});
        for (int it = 0; it < 500; ++it) {
            const double d = df(x);
            if (d == 0) break;
            const double next = x - f(x) / d;
            if (next >= x) break;
            x = next;
        }
        const double p = a + x;
        const double q = b + p * x;
        auto pair = real_quadratic_roots(p, q);
        out = {x, pair[0], pair[1]};
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational vieta_reciprocal_sum(const CubicFactor& c) {
    if (sgn(c.e3) == 0) throw SingularCubic("cubic has a zero root; reciprocal sum undefined");
    return c.e2 / c.e3;
}

Spectrum Spectrum::exact(std::vector<ExactEigenvalue> entries, std::optional<CubicFactor> cubic) {
    std::map<Rational, long> merged;
    for (auto& e : entries) {
        e.value.canonicalize();
        if (e.multiplicity < 0) throw InvalidParameter("negative multiplicity for eigenvalue " + to_string(e.value));
        if (e.multiplicity > 0) merged[e.value] += e.multiplicity;
    }
    Spectrum s;
    s.representation_ = Representation::Exact;
    for (auto& [value, mult] : merged) s.exact_.push_back({value, mult});
    s.cubic_ = std::move(cubic);
    return s;
}

Spectrum Spectrum::floating(std::vector<double> values, double tol) {
    Spectrum s;
    s.representation_ = Representation::Floating;
    std::sort(values.begin(), values.end());
    s.floating_ = std::move(values);
    s.tol_ = tol;
    return s;
}

std::size_t Spectrum::size() const {
    if (!is_exact()) return floating_.size();
    std::size_t total = cubic_ ? 3 : 0;
    for (const auto& e : exact_) total += static_cast<std::size_t>(e.multiplicity);
    return total;
}

std::vector<double> Spectrum::values() const {
    if (!is_exact()) return floating_;
    std::vector<double> out;
    out.reserve(size());
    for (const auto& e : exact_) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value.get_d());
    if (cubic_) {
        const auto r = cubic_->roots();
        out.insert(out.end(), r.begin(), r.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational Spectrum::exact_sum() const {
    if (!is_exact()) throw InvalidInput("exact_sum of a floating spectrum");
    Rational sum = 0;
    for (const auto& e : exact_) sum += e.value * e.multiplicity;
    if (cubic_) sum += cubic_->e1;
    return sum;
}

bool spectra_match(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<double> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    for (std::size_t i = 0; i < sa.size(); ++i)
        if (std::abs(sa[i] - sb[i]) > tol) return false;
    return true;
}

std::vector<double> merge_spectra(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

EigenPairs numeric_eigenpairs(const Eigen::MatrixXd& m, double tol) {
    if (m.rows() != m.cols()) throw InvalidInput("eigensolve of a non-square matrix");
    if (m.rows() == 0) return {};
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol * scale)
        throw InvalidInput("numeric_spectrum requires a symmetric matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) throw Error("eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Spectrum numeric_spectrum(const Eigen::MatrixXd& m, double tol) {
    if (m.rows() != m.cols()) throw InvalidInput("eigensolve of a non-square matrix");
    if (m.rows() == 0) return Spectrum::floating({}, tol);
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol * scale)
        throw InvalidInput("numeric_spectrum requires a symmetric matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("eigensolver did not converge");
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return Spectrum::floating(std::vector<double>(ev.data(), ev.data() + ev.size()), tol);
}

Spectrum numeric_spectrum(const RationalMatrix& m, double tol) { return numeric_spectrum(to_eigen(m), tol); }

namespace {

void require_order(int n) {
    if (n < 2) throw InvalidParameter("n must be at least 2, got " + std::to_string(n));
}

} // namespace

Spectrum analytic_spectrum_L_sn2(int n) {
    require_order(n);
    return Spectrum::exact({{0, 1}, {1, n - 2}, {2, 1}, {3, n - 2}, {n, 1}, {n + 2, 1}});
}

Spectrum analytic_spectrum_NL_sn2(int n) {
    require_order(n);
    return Spectrum::exact({{0, 1},
                            {Rational(1, 2), n - 2},
                            {Rational(n + 2, 2 * n), 1},
                            {Rational(3 * n - 2, 2 * n), 1},
                            {Rational(3, 2), n - 2},
                            {2, 1}});
}

CubicFactor snr2_cubic(int n, int r, bool center_deleted) {
    if (center_deleted) return {n + 3, 3 * n, 2 * n - 2 * r};
    return {n + 5, 3 * n + 8, 2 * n - 2 * r + 4};
}

Spectrum analytic_spectrum_L_snr2(int n, int r, bool center_deleted, double tol) {
    require_order(n);
    if (r < 1 || r > n - 1)
        throw InvalidParameter("r must lie in [1, n-1], got r=" + std::to_string(r) + " for n=" + std::to_string(n));

    const long ones = center_deleted ? n + r - 4 : n + r - 3;
    const long threes = center_deleted ? n - r - 1 : n - r - 2;
    if (ones < 0 || threes < 0) {
        FamilySpec spec{n, {}};
        const int first = center_deleted ? 1 : 2;
        for (int i = first; i < first + r; ++i) spec.deleted.insert(i);
        return numeric_spectrum(laplacian(make_snr2(spec)), tol);
    }
    return Spectrum::exact({{0, 1}, {1, ones}, {n, 1}, {3, threes}}, snr2_cubic(n, r, center_deleted));
}

std::pair<double, double> single_deletion_quadratic_roots(int n) {
    require_order(n);
    const double x = n;
    const double s = std::sqrt(x * x - 4 * x + 12);
    return {(x + 2 - s) / 2, (x + 2 + s) / 2};
}

} // namespace klab
