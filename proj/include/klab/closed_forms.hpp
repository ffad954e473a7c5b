#ifndef KLAB_CLOSED_FORMS_HPP
#define KLAB_CLOSED_FORMS_HPP

#include "klab/rational.hpp"

#include <cstdint>
#include <string>

namespace klab {

/*
 * Closed forms for S_n x K_2 and its vertical-edge-deleted members.
 *
 * Where the published statement of a formula disagrees with its derivation
 * (or with the brute-force oracle), `Corrected` is the default and
 * `Statement` reproduces the formula as printed:
 *   - center-kept Kirchhoff index: denominator 3(n-r+2) vs printed 3(n-r-2)
 *   - center-kept spanning trees: 3^(n-r-2) vs printed 3^(n-r+2)
 *   - Wiener index of the deleted family: depends on the center edge and
 *     grows by 2r (kept) or 2r^2+2r-2 (deleted), vs printed +r.
 */
enum class Variant { Corrected, Statement };

std::string to_string(Variant v);
Variant parse_variant(const std::string& text); // "proof"/"corrected" or "statement"

struct FormulaValue {
    Rational value;
    std::string formula_id;
    Variant variant = Variant::Corrected;
};

Rational kf_sn2(int n);
BigInt tau_sn2(int n);
Rational kfstar_sn2(int n);
std::int64_t wiener_sn2(int n);
std::int64_t gutman_sn2(int n);

// r = 0 routes to the S_n x K_2 forms. Throws InvalidParameter unless 0 <= r <= n-1.
FormulaValue kf_snr2(int n, int r, bool center_deleted, Variant variant = Variant::Corrected);
FormulaValue tau_snr2(int n, int r, bool center_deleted, Variant variant = Variant::Corrected);
FormulaValue wiener_snr2(int n, int r, bool center_deleted, Variant variant = Variant::Corrected);

/// Kf for r = 1 with the center edge deleted, written through the explicit
/// quadratic roots: (8n^3 - 21n^2 + 28n - 6) / (3(n-1)).
Rational kf_single_deletion(int n);

Rational ratio_kf_wiener(int n, int r, bool center_deleted, Variant variant = Variant::Corrected);
Rational ratio_kfstar_gutman(int n);

inline const Rational kf_wiener_limit{8, 15};
inline const Rational kfstar_gutman_limit{16, 33};

} // namespace klab

#endif // KLAB_CLOSED_FORMS_HPP
