// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is nonzero if any criterion fails other than those listed in
// `known_red`, which are failures of a reference formula rather than of this
// code (see the README).

#include "klab/closed_forms.hpp"
#include "klab/graph.hpp"
#include "klab/invariants.hpp"
#include "klab/spectral.hpp"
#include "klab/sweep.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

using namespace klab;

namespace {

const std::set<int> known_red{3};

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (notes.size() < 8) notes.push_back(what);
        }
    }
    void info(const std::string& what) { notes.push_back(what); }
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<void(Outcome&)> body;
};

template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string str(const Rational& q) { return to_string(q); }

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)}); }

void criterion1(Outcome& out) {
    for (int n = 2; n <= 12; ++n) {
        const Graph g = make_snr2({n, {}});
        const Rational x = n;
        const Rational kf = (8 * x * x * x + 3 * x * x - 14 * x + 12) / (3 * x + 6);
        BigInt tau;
        mpz_ui_pow_ui(tau.get_mpz_t(), 3, static_cast<unsigned long>(n - 2));
        tau *= n + 2;
        const Rational got_kf = kirchhoff_index(g);
        const BigInt got_tau = spanning_trees(g);
        out.require(got_kf == kf, "Kf(n=" + str(n) + ") = " + str(got_kf) + ", formula " + str(kf));
        out.require(got_tau == tau, "tau(n=" + str(n) + ") = " + str(got_tau));
        out.require(kf_sn2(n) == kf && tau_sn2(n) == tau, "library closed form differs at n=" + str(n));
    }
    out.require(kirchhoff_index(make_snr2({2, {}})) == 5 && spanning_trees(make_snr2({2, {}})) == 4, "n=2 spot");
    out.require(kirchhoff_index(make_snr2({3, {}})) == Rational(71, 5) && spanning_trees(make_snr2({3, {}})) == 15,
                "n=3 spot");
}

void criterion2(Outcome& out) {
    for (int n = 2; n <= 12; ++n) {
        const Graph g = make_snr2({n, {}});
        const Rational x = n;
        const Rational expected = (48 * x * x * x + 25 * x * x - 180 * x + 116) / (3 * x + 6);
        const Rational got = mult_deg_kirchhoff_index(g);
        out.require(got == expected, "Kf*(n=" + str(n) + ") = " + str(got) + ", formula " + str(expected));
        const auto numeric = kfstar_from_spectrum(numeric_spectrum(normalized_laplacian(g).floating, 1e-9), g.edge_count());
        out.require(rel_close(numeric.approx, expected.get_d(), 1e-8), "spectral Kf* off at n=" + str(n));
    }
    out.require(mult_deg_kirchhoff_index(make_snr2({2, {}})) == 20, "n=2 spot");
}

void criterion3(Outcome& out) {
    long instances = 0, w_statement_bad = 0, w_corrected_bad = 0;
    for (int n = 2; n <= 10; ++n) {
        for (int r = 0; r <= n - 1; ++r) {
            std::map<bool, std::tuple<Rational, BigInt, std::int64_t>> seen;
            for (const auto& del : all_subsets(n, r)) {
                const bool center = del.count(1) > 0;
                const Graph g = make_snr2({n, del});
                const Rational kf = kirchhoff_index(g);
                const BigInt tau = spanning_trees(g);
                const std::int64_t w = wiener_index(g);
                ++instances;
                const std::string where = "n=" + str(n) + " r=" + str(r) + (center ? " center deleted" : " center kept");
                out.require(kf == kf_snr2(n, r, center).value, "Kf mismatch at " + where);
                out.require(Rational(tau) == tau_snr2(n, r, center).value, "tau mismatch at " + where);
                if (Rational(w) != wiener_snr2(n, r, center, Variant::Statement).value) {
                    if (w_statement_bad++ == 0)
                        out.require(false, "W as printed: " + where + " oracle " + str(w) + " formula " +
                                               str(wiener_snr2(n, r, center, Variant::Statement).value));
                }
                if (Rational(w) != wiener_snr2(n, r, center).value) ++w_corrected_bad;
                const auto key = std::make_tuple(kf, tau, w);
                const auto [it, fresh] = seen.emplace(center, key);
                out.require(fresh || it->second == key, "value depends on more than (r, center) at " + where);
            }
        }
    }
    const auto spot = [&](int n, std::set<int> del, Rational kf, long tau) {
        const Graph g = make_snr2({n, del});
        std::string name = "{";
        for (int i : del) name += (name.size() > 1 ? "," : "") + str(i);
        name += "}";
        out.require(kirchhoff_index(g) == kf && spanning_trees(g) == tau,
                    "spot n=" + str(n) + " deleted " + name + ": Kf " + str(kirchhoff_index(g)) + ", tau " +
                        str(spanning_trees(g)));
    };
    spot(2, {1}, 10, 1);
    spot(2, {2}, 10, 1);
    spot(4, {1, 2}, Rational(134, 3), 6);
    spot(4, {2, 3}, 46, 4);
    out.info(str(instances) + " deletion sets; Kf and tau match the closed forms");
    out.info("W vs printed formula: " + str(w_statement_bad) + " mismatches");
    out.info("W vs corrected formula (2r kept, 2r^2+2r-2 deleted): " + str(w_corrected_bad) + " mismatches");
}

void criterion4(Outcome& out) {
    const Graph g = make_snr2({2, {2}}); // center edge kept
    const Rational kf = kf_snr2(2, 1, false, Variant::Statement).value;
    const Rational tau = tau_snr2(2, 1, false, Variant::Statement).value;
    out.require(kf == -30, "printed Kf at (2,1) = " + str(kf) + ", expected -30");
    out.require(tau == 81, "printed tau at (2,1) = " + str(tau) + ", expected 81");
    out.require(kirchhoff_index(g) == 10 && spanning_trees(g) == 1, "oracle at (2,1) is not (10, 1)");
    out.require(kf != kirchhoff_index(g) && tau != Rational(spanning_trees(g)), "printed forms agree with the oracle");
}

void criterion5(Outcome& out) {
    long checked = 0;
    for (int n = 2; n <= 10; ++n) {
        for (int r = 0; r <= n - 1; ++r) {
            for (const auto& del : sample_subsets(n, r, 5, 20240601)) {
                const Graph g = make_snr2({n, del});
                const auto l = laplacian(g);
                const auto [a, s] = mirror_split(l, MirrorPairing{static_cast<std::size_t>(n)});
                const auto merged =
                    merge_spectra(numeric_spectrum(a, 1e-9).values(), numeric_spectrum(s, 1e-9).values());
                out.require(spectra_match(merged, numeric_spectrum(l, 1e-9).values(), 1e-9),
                            "split spectra differ for n=" + str(n) + " r=" + str(r));
                ++checked;
            }
        }
    }
    out.info(str(checked) + " graphs");
}

void criterion6(Outcome& out) {
    for (int n = 2; n <= 12; ++n) {
        const Graph g = make_snr2({n, {}});
        const Spectrum l = analytic_spectrum_L_sn2(n);
        const Spectrum nl = analytic_spectrum_NL_sn2(n);
        out.require(spectra_match(l.values(), numeric_spectrum(laplacian(g), 1e-9).values(), 1e-9),
                    "L spectrum differs at n=" + str(n));
        out.require(
            spectra_match(nl.values(), numeric_spectrum(normalized_laplacian(g).floating, 1e-9).values(), 1e-9),
            "normalized spectrum differs at n=" + str(n));
        out.require(l.exact_sum() == 2 * static_cast<long>(g.edge_count()), "trace of L at n=" + str(n));
        out.require(nl.exact_sum() == static_cast<long>(g.vertex_count()), "trace of normalized L at n=" + str(n));
    }
}

void criterion7(Outcome& out) {
    for (int n : {10, 100, 1000, 10000}) {
        const double a = std::abs(to_double(ratio_kf_wiener(n, 0, false) - kf_wiener_limit));
        const double b = std::abs(to_double(ratio_kfstar_gutman(n) - kfstar_gutman_limit));
        out.require(a <= 2.0 / n, "|Kf/W - 8/15| = " + str(a) + " at n=" + str(n));
        out.require(b <= 4.0 / n, "|Kf*/Gut - 16/33| = " + str(b) + " at n=" + str(n));
        if (n == 10) out.info("n=10: " + str(a) + ", " + str(b));
    }
    const double a = ratio_kf_wiener(1000, 0, false).get_d() / kf_wiener_limit.get_d() - 1;
    const double b = ratio_kfstar_gutman(1000).get_d() / kfstar_gutman_limit.get_d() - 1;
    out.require(std::abs(a) < 0.01 && std::abs(b) < 0.01, "ratios at n=1000 not within 1%");
}

Graph random_connected(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (coin(rng)) e.push_back({i, j});
        Graph g(n, e);
        if (is_connected(g)) return g;
    }
}

Graph random_tree(std::mt19937_64& rng, std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t v = 1; v < n; ++v) e.push_back({std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v});
    return Graph(n, e);
}

void criterion8(Outcome& out) {
    std::mt19937_64 rng(8);
    std::vector<std::pair<Graph, bool>> corpus; // (graph, is_tree)
    for (int i = 0; i < 40; ++i) corpus.emplace_back(random_connected(rng, 4 + i % 7, 0.45), false);
    for (int i = 0; i < 40; ++i) corpus.emplace_back(random_tree(rng, 2 + i % 13), true);
    for (int n = 2; n <= 9; ++n)
        for (int r = 0; r < n; ++r) {
            const auto del = sample_subsets(n, r, 1, 88)[0];
            corpus.emplace_back(make_snr2({n, del}), false);
        }

    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto& [g, tree] = corpus[k];
        const std::string id = "instance " + str(k);
        const auto grounded = resistance_matrix(g, ResistanceRoute::Grounded);
        const auto pinv = resistance_matrix(g, ResistanceRoute::Pseudoinverse);
        out.require(grounded.entries == pinv.entries, id + ": grounded and pseudoinverse routes differ");
        out.require(grounded.entries.is_symmetric(), id + ": resistance not symmetric");
        const std::size_t n = g.vertex_count();
        bool triangle = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l)
                    if (grounded(i, l) > grounded(i, j) + grounded(j, l)) triangle = false;
        out.require(triangle, id + ": triangle inequality fails");
        if (tree) {
            const auto d = distance_matrix(g);
            bool equal = true;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (grounded(i, j) != d[i][j]) equal = false;
            out.require(equal, id + ": tree resistance differs from distance");
        }
        const BigInt t0 = spanning_trees(g, 0);
        for (Vertex v = 1; v < n; ++v) out.require(spanning_trees(g, v) == t0, id + ": cofactor depends on row");
    }
    out.info(str(corpus.size()) + " instances");
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "S_n x K_2: Kf and spanning trees, n = 2..12", 10, criterion1},
        {2, "S_n x K_2: degree-Kirchhoff index, n = 2..12", 30, criterion2},
        {3, "deleted family: Kf, tau, W over every deletion set, n = 2..10", 300, criterion3},
        {4, "printed center-kept forms disagree with the oracle at (2, 1)", 10, criterion4},
        {5, "mirror split reproduces the Laplacian spectrum", 60, criterion5},
        {6, "analytic spectra and trace identities, n = 2..12", 60, criterion6},
        {7, "ratio limits 8/15 and 16/33", 10, criterion7},
        {8, "resistance and matrix-tree self-consistency corpus", 120, criterion8},
    };

    int unexpected = 0;
    for (const auto& c : criteria) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(out);
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.require(seconds < c.budget_seconds, "over time budget of " + str(c.budget_seconds) + " s");

        std::cout << "criterion " << c.id << ": " << (out.pass ? "PASS" : "FAIL") << "  [" << std::fixed
                  << std::setprecision(2) << seconds << " s]  " << c.title;
        if (!out.pass && known_red.count(c.id)) std::cout << "  (known red: printed formula is wrong)";
        std::cout << '\n';
        for (const auto& note : out.notes) std::cout << "    " << note << '\n';
        if (!out.pass && !known_red.count(c.id)) ++unexpected;
    }
    std::cout << (unexpected == 0 ? "acceptance: no unexpected failures" : "acceptance: UNEXPECTED FAILURES") << '\n';
    return unexpected == 0 ? 0 : 1;
}
