#include "klab/closed_forms.hpp"

#include "klab/errors.hpp"

namespace klab {

std::string to_string(Variant v) { return v == Variant::Corrected ? "proof" : "statement"; }

Variant parse_variant(const std::string& text) {
    if (text == "proof" || text == "corrected") return Variant::Corrected;
    if (text == "statement") return Variant::Statement;
    throw InvalidParameter("unknown variant '" + text + "' (expected proof or statement)");
}

namespace {

void require_order(int n) {
    if (n < 2) throw InvalidParameter("n must be at least 2, got " + std::to_string(n));
}

void require_deletions(int n, int r, bool center_deleted) {
    require_order(n);
    if (r < 0 || r > n - 1)
        throw InvalidParameter("r must lie in [0, n-1], got r=" + std::to_string(r) + " for n=" + std::to_string(n));
    if (r == 0 && center_deleted) throw InvalidParameter("center_deleted requires r >= 1");
}

Rational q(long v) { return Rational(v); }

} // namespace

Rational kf_sn2(int n) {
    require_order(n);
    const Rational x = n;
    return (8 * x * x * x + 3 * x * x - 14 * x + 12) / (3 * x + 6);
}

BigInt tau_sn2(int n) {
    require_order(n);
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(n - 2));
    return (n + 2) * p;
}

Rational kfstar_sn2(int n) {
    require_order(n);
    const Rational x = n;
    return (48 * x * x * x + 25 * x * x - 180 * x + 116) / (3 * x + 6);
}

std::int64_t wiener_sn2(int n) {
    require_order(n);
    const std::int64_t x = n;
    return 5 * x * x - 8 * x + 4;
}

std::int64_t gutman_sn2(int n) {
    require_order(n);
    const std::int64_t x = n;
    return 33 * x * x - 68 * x + 36;
}

FormulaValue kf_snr2(int n, int r, bool center_deleted, Variant variant) {
    require_deletions(n, r, center_deleted);
    if (r == 0) return {kf_sn2(n), "kf_sn2", variant};
    const Rational x = n, k = r;
    if (center_deleted) {
        const Rational num = 8 * x * x * x - (4 * k + 17) * x * x - (4 * k * k - 26 * k - 6) * x - 6 * k;
        return {num / (3 * (x - k)), "kf_snr2_center_deleted", variant};
    }
    const Rational num = 8 * x * x * x - (4 * k - 3) * x * x - (4 * k * k - 30 * k + 14) * x + 12 - 6 * k;
    const Rational den = variant == Variant::Corrected ? Rational(3 * (x - k + 2)) : Rational(3 * (x - k - 2));
    if (sgn(den) == 0) throw Inconsistency("printed denominator 3(n-r-2) vanishes at n=" + std::to_string(n) +
                                           ", r=" + std::to_string(r));
    return {num / den, "kf_snr2_center_kept", variant};
}

FormulaValue tau_snr2(int n, int r, bool center_deleted, Variant variant) {
    require_deletions(n, r, center_deleted);
    if (r == 0) return {Rational(tau_sn2(n)), "tau_sn2", variant};
    if (center_deleted) return {q(n - r) * power(3, n - r - 1), "tau_snr2_center_deleted", variant};
    const long exponent = variant == Variant::Corrected ? n - r - 2 : n - r + 2;
    return {q(n - r + 2) * power(3, exponent), "tau_snr2_center_kept", variant};
}

FormulaValue wiener_snr2(int n, int r, bool center_deleted, Variant variant) {
    require_deletions(n, r, center_deleted);
    const std::int64_t base = wiener_sn2(n);
    if (variant == Variant::Statement) return {q(base + r), "wiener_snr2", variant};
    const std::int64_t k = r;
    if (r == 0) return {q(base), "wiener_sn2", variant};
    if (center_deleted) return {q(base + 2 * k * k + 2 * k - 2), "wiener_snr2_center_deleted", variant};
    return {q(base + 2 * k), "wiener_snr2_center_kept", variant};
}

Rational kf_single_deletion(int n) {
    require_order(n);
    const Rational x = n;
    return (8 * x * x * x - 21 * x * x + 28 * x - 6) / (3 * (x - 1));
}

Rational ratio_kf_wiener(int n, int r, bool center_deleted, Variant variant) {
    return kf_snr2(n, r, center_deleted, variant).value / wiener_snr2(n, r, center_deleted, variant).value;
}

Rational ratio_kfstar_gutman(int n) { return kfstar_sn2(n) / Rational(gutman_sn2(n)); }

} // namespace klab
