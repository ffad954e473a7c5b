#include "klab/closed_forms.hpp"
#include "klab/errors.hpp"
#include "klab/graph.hpp"
#include "klab/invariants.hpp"

#include <doctest.h>

#include <cmath>

using namespace klab;

namespace {

std::set<int> first_deletion(int r, bool center_deleted) {
    std::set<int> out;
    for (int i = center_deleted ? 1 : 2; static_cast<int>(out.size()) < r; ++i) out.insert(i);
    return out;
}

} // namespace

TEST_CASE("S_n x K_2 examples") {
    CHECK(kf_sn2(2) == 5);
    CHECK(kf_sn2(3) == Rational(71, 5));
    CHECK(kf_sn2(4) == Rational(86, 3));
    CHECK(tau_sn2(2) == 4);
    CHECK(tau_sn2(3) == 15);
    CHECK(tau_sn2(4) == 54);
    CHECK(kfstar_sn2(2) == 20);
    CHECK(kfstar_sn2(3) == Rational(1097, 15));
    CHECK(kfstar_sn2(4) == Rational(478, 3));
    CHECK(wiener_sn2(2) == 8);
    CHECK(wiener_sn2(4) == 52);
    CHECK(gutman_sn2(2) == 32);
    CHECK(gutman_sn2(4) == 292);
    CHECK_THROWS_AS(kf_sn2(1), InvalidParameter);
}

TEST_CASE("S_n x K_2 forms agree with direct computation") {
    for (int n = 2; n <= 14; ++n) {
        const Graph g = make_snr2({n, {}});
        CAPTURE(n);
        CHECK(kf_sn2(n) == kirchhoff_index(g));
        CHECK(tau_sn2(n) == spanning_trees(g));
        CHECK(kfstar_sn2(n) == mult_deg_kirchhoff_index(g));
        CHECK(wiener_sn2(n) == wiener_index(g));
        CHECK(gutman_sn2(n) == gutman_index(g));
    }
}

TEST_CASE("deleted-family examples") {
    CHECK(kf_snr2(4, 2, true).value == Rational(134, 3));
    CHECK(tau_snr2(4, 2, true).value == 6);
    CHECK(wiener_snr2(4, 2, true).value == 62);
    CHECK(kf_snr2(4, 2, false).value == 46);
    CHECK(tau_snr2(4, 2, false).value == 4);
    CHECK(wiener_snr2(4, 2, false).value == 56);
    CHECK(kf_snr2(2, 1, true).value == 10);
    CHECK(kf_snr2(2, 1, false).value == 10);
    CHECK(tau_snr2(2, 1, false).value == 1);
    CHECK(kf_snr2(5, 3, true).value == Rational(497, 6));
    CHECK(kf_snr2(5, 2, false).value == Rational(205, 3));
    CHECK(tau_snr2(5, 2, false).value == 15);
}

TEST_CASE("r = 0 routes to the undeleted forms") {
    for (int n = 2; n <= 10; ++n) {
        for (auto v : {Variant::Corrected, Variant::Statement}) {
            CHECK(kf_snr2(n, 0, false, v).value == kf_sn2(n));
            CHECK(tau_snr2(n, 0, false, v).value == Rational(tau_sn2(n)));
            CHECK(wiener_snr2(n, 0, false, v).value == wiener_sn2(n));
        }
    }
}

TEST_CASE("corrected forms agree with every deletion set") {
    for (int n = 2; n <= 7; ++n) {
        for (int r = 1; r < n; ++r) {
            // All r-subsets of {1..n}.
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (__builtin_popcount(mask) != r) continue;
                std::set<int> del;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1u) del.insert(i + 1);
                const bool center = del.count(1) > 0;
                const Graph g = make_snr2({n, del});
                CAPTURE(n);
                CAPTURE(mask);
                CHECK(kf_snr2(n, r, center).value == kirchhoff_index(g));
                CHECK(tau_snr2(n, r, center).value == Rational(spanning_trees(g)));
                CHECK(wiener_snr2(n, r, center).value == wiener_index(g));
            }
        }
    }
}

TEST_CASE("statement variant") {
    // Deleted-center Kf and tau are printed correctly.
    for (int n = 3; n <= 9; ++n)
        for (int r = 1; r < n; ++r) {
            CHECK(kf_snr2(n, r, true, Variant::Statement).value == kf_snr2(n, r, true).value);
            CHECK(tau_snr2(n, r, true, Variant::Statement).value == tau_snr2(n, r, true).value);
        }
    // Kept-center forms as printed.
    CHECK(kf_snr2(5, 2, false, Variant::Statement).value == Rational(1025, 3));
    CHECK(tau_snr2(4, 2, false, Variant::Statement).value == 324);
    CHECK_THROWS_AS(kf_snr2(4, 2, false, Variant::Statement), Inconsistency);
    // Wiener as printed: W(S_n x K_2) + r.
    CHECK(wiener_snr2(4, 2, true, Variant::Statement).value == 54);
    CHECK(wiener_snr2(4, 2, false, Variant::Statement).value == 54);
    CHECK(kf_snr2(5, 2, false, Variant::Statement).variant == Variant::Statement);
    // The printed W is wrong for every r >= 1.
    for (int n = 2; n <= 9; ++n)
        for (int r = 1; r < n; ++r)
            for (bool center : {true, false})
                CHECK(wiener_snr2(n, r, center, Variant::Statement).value !=
                      Rational(wiener_index(make_snr2({n, first_deletion(r, center)}))));
}

TEST_CASE("parameter checks") {
    CHECK_THROWS_AS(kf_snr2(4, 4, true), InvalidParameter);
    CHECK_THROWS_AS(kf_snr2(4, -1, false), InvalidParameter);
    CHECK_THROWS_AS(kf_snr2(4, 0, true), InvalidParameter);
    CHECK(parse_variant("proof") == Variant::Corrected);
    CHECK(parse_variant("corrected") == Variant::Corrected);
    CHECK(parse_variant("statement") == Variant::Statement);
    CHECK_THROWS_AS(parse_variant("paper"), InvalidParameter);
    CHECK(to_string(Variant::Corrected) == "proof");
}

TEST_CASE("single deletion through the quadratic roots") {
    for (int n = 2; n <= 30; ++n) CHECK(kf_single_deletion(n) == kf_snr2(n, 1, true).value);
    CHECK(kf_single_deletion(4) == Rational(94, 3));
}

TEST_CASE("ratio limits") {
    CHECK(ratio_kf_wiener(2, 0, false) == Rational(5, 8));
    CHECK(ratio_kfstar_gutman(2) == Rational(5, 8));
    for (int n = 10; n <= 400; n += 13) {
        const double a = std::abs(to_double(ratio_kf_wiener(n, 0, false) - kf_wiener_limit));
        const double b = std::abs(to_double(ratio_kfstar_gutman(n) - kfstar_gutman_limit));
        CHECK(a <= 2.0 / n);
        CHECK(b <= 4.0 / n);
    }
    // Deleting a bounded number of edges does not move the limit.
    const double far = to_double(ratio_kf_wiener(100000, 3, true));
    CHECK(far == doctest::Approx(8.0 / 15).epsilon(1e-4));
}
