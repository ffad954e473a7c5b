#include "klab/sweep.hpp"

#include "klab/errors.hpp"
#include "klab/graph.hpp"
#include "klab/report.hpp"
#include "klab/serialize.hpp"
#include "klab/spectral.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>

namespace klab {

IntRange IntRange::parse(const std::string& text) {
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int v = std::stoi(text, &used);
            if (used != text.size()) throw InvalidParameter("");
            return {v, v};
        }
        const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        const int first = std::stoi(a, &used);
        if (used != a.size()) throw InvalidParameter("");
        const int last = std::stoi(b, &used);
        if (used != b.size()) throw InvalidParameter("");
        if (first > last) throw InvalidParameter("");
        return {first, last};
    } catch (const std::exception&) {
        throw InvalidParameter("bad range '" + text + "' (expected N or A..B with A <= B)");
    }
}

void SweepConfig::validate() const {
    if (n.first < 2) throw InvalidParameter("n must be at least 2");
    if (r && r->first < 0) throw InvalidParameter("r must be nonnegative");
    if (!all_subsets) {
        if (samples < 1) throw InvalidParameter("--subsets must be 'all' or a positive count");
        if (!seed) throw InvalidParameter("sampled subsets need an explicit --seed");
    } else if (n.last > 12 && table == TableKind::Report && !(r && r->last == 0)) {
        // The formulas table and r = 0 never enumerate deletion sets.
        throw InvalidParameter("all-subsets mode is capped at n <= 12; use --subsets K --seed S");
    }
    if (!(tol > 0)) throw InvalidParameter("--tol must be positive");
}

namespace {

std::uint64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t out = 1;
    for (int i = 1; i <= r; ++i) {
        if (out > UINT64_MAX / static_cast<std::uint64_t>(n - r + i)) return UINT64_MAX;
        out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    }
    return out;
}

// Uniform integer in [0, bound) from raw engine output.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine();
    while (x >= limit) x = engine();
    return x % bound;
}

// Floyd's algorithm: a uniform r-subset of {1..n}.
std::set<int> random_subset(std::mt19937_64& engine, int n, int r) {
    std::set<int> out;
    for (int j = n - r + 1; j <= n; ++j) {
        const int t = 1 + static_cast<int>(uniform_below(engine, static_cast<std::uint64_t>(j)));
        if (!out.insert(t).second) out.insert(j);
    }
    return out;
}

} // namespace

std::vector<std::set<int>> all_subsets(int n, int r) {
    std::vector<std::set<int>> out;
    if (r < 0 || r > n) return out;
    std::vector<int> pick(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(pick.begin(), pick.end());
        int i = r - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - r + i + 1) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<std::set<int>> sample_subsets(int n, int r, int k, std::uint64_t seed) {
    if (k < 1) throw InvalidParameter("sample count must be positive");
    if (static_cast<std::uint64_t>(k) >= binomial(n, r)) return all_subsets(n, r);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r)};
    std::mt19937_64 engine(seq);
    std::set<std::set<int>> chosen;
    while (chosen.size() < static_cast<std::size_t>(k)) chosen.insert(random_subset(engine, n, r));
    return {chosen.begin(), chosen.end()};
}

std::vector<std::set<int>> deletion_subsets(int n, int r, const SweepConfig& config) {
    if (config.all_subsets) return all_subsets(n, r);
    return sample_subsets(n, r, config.samples, *config.seed);
}

namespace {

class Tally {
public:
    void record(const std::string& clause, bool ok) {
        auto it = index_.find(clause);
        if (it == index_.end()) {
            it = index_.emplace(clause, clauses_.size()).first;
            clauses_.push_back({clause, 0, 0});
        }
        (ok ? clauses_[it->second].passed : clauses_[it->second].failed) += 1;
    }
    [[nodiscard]] const std::vector<ClauseTally>& clauses() const { return clauses_; }

private:
    std::vector<ClauseTally> clauses_;
    std::map<std::string, std::size_t> index_;
};

template <typename Fn>
void for_each_instance(const SweepConfig& config, Fn&& fn) {
    for (int n = config.n.first; n <= config.n.last; ++n) {
        const int r_lo = config.r ? std::max(0, config.r->first) : 0;
        const int r_hi = config.r ? std::min(n - 1, config.r->last) : n - 1;
        for (int r = r_lo; r <= r_hi; ++r)
            for (auto& subset : deletion_subsets(n, r, config)) fn(FamilySpec{n, std::move(subset)});
    }
}

bool mirror_identity_holds(const Graph& g, double tol) {
    const RationalMatrix l = laplacian(g);
    const auto [sum, diff] = mirror_split(l, MirrorPairing{g.vertex_count() / 2});
    const auto whole = numeric_spectrum(l, tol).values();
    const auto merged = merge_spectra(numeric_spectrum(sum, tol).values(), numeric_spectrum(diff, tol).values());
    return spectra_match(whole, merged, tol);
}

std::string status_suffix(bool center_deleted) { return center_deleted ? " (center deleted)" : " (center kept)"; }

ReportValue formula_value(const std::function<FormulaValue()>& f) {
    try {
        return ReportValue::of(f().value);
    } catch (const Inconsistency&) {
        return ReportValue::none();
    }
}

} // namespace

VerifySummary run_verify(const SweepConfig& config) {
    config.validate();
    Tally selected;
    VerifySummary summary;
    bool warned = false;

    for_each_instance(config, [&](const FamilySpec& spec) {
        const int n = spec.n, r = spec.r();
        const bool deleted = spec.center_deleted();
        ReportOptions options;
        options.exact = config.exact && static_cast<std::size_t>(2 * n) <= config.max_exact_vertices;
        if (config.exact && !options.exact && !warned) {
            std::cerr << "warning: graphs above " << config.max_exact_vertices
                      << " vertices are checked in floating point\n";
            warned = true;
        }
        options.tol = config.tol;
        const InvariantReport report = compute_report(spec, options);
        ++summary.instances;

        const auto& kf = *report.find("kf");
        const auto& tau = *report.find("tau");
        const auto& wiener = *report.find("wiener");
        const auto& kfstar = *report.find("kfstar");

        const auto check = [&](const std::string& clause, const ReportValue& oracle, const ReportValue& corrected,
                               const std::function<FormulaValue()>& statement) {
            const bool corrected_ok = corrected.present() && values_agree(oracle, corrected, config.tol);
            summary.corrected_ok = summary.corrected_ok && corrected_ok;
            if (config.variant == Variant::Corrected) {
                selected.record(clause, corrected_ok);
            } else {
                const ReportValue v = formula_value(statement);
                selected.record(clause, v.present() && values_agree(oracle, v, config.tol));
            }
        };

        if (r == 0) {
            check("kf_sn2", kf.oracle, kf.formula, [&] { return kf_snr2(n, 0, false, Variant::Statement); });
            check("tau_sn2", tau.oracle, tau.formula, [&] { return tau_snr2(n, 0, false, Variant::Statement); });
            check("kfstar_sn2", kfstar.oracle, kfstar.formula, [&] {
                return FormulaValue{kfstar_sn2(n), "kfstar_sn2", Variant::Statement};
            });
            check("wiener_sn2", wiener.oracle, wiener.formula,
                  [&] { return wiener_snr2(n, 0, false, Variant::Statement); });
            const auto& gut = *report.find("gutman");
            check("gutman_sn2", gut.oracle, gut.formula, [&] {
                return FormulaValue{Rational(gutman_sn2(n)), "gutman_sn2", Variant::Statement};
            });
        } else {
            const std::string suffix = status_suffix(deleted);
            check("kf_snr2" + suffix, kf.oracle, kf.formula,
                  [&] { return kf_snr2(n, r, deleted, Variant::Statement); });
            check("tau_snr2" + suffix, tau.oracle, tau.formula,
                  [&] { return tau_snr2(n, r, deleted, Variant::Statement); });
            check("wiener_snr2" + suffix, wiener.oracle, wiener.formula,
                  [&] { return wiener_snr2(n, r, deleted, Variant::Statement); });
        }

        const auto spectral = [&](const std::string& clause, const InvariantRow& row) {
            const bool ok = values_agree(row.oracle, row.spectral, config.tol);
            summary.corrected_ok = summary.corrected_ok && ok;
            selected.record(clause, ok);
        };
        spectral("spectral_kf", kf);
        spectral("spectral_tau", tau);
        spectral("spectral_kfstar", kfstar);

        const bool mirror_ok = mirror_identity_holds(make_snr2(spec), config.tol);
        summary.corrected_ok = summary.corrected_ok && mirror_ok;
        selected.record("mirror_split", mirror_ok);
    });

    summary.clauses = selected.clauses();
    return summary;
}

void print_verify_summary(std::ostream& os, const VerifySummary& summary) {
    os << std::left << std::setw(36) << "clause" << std::right << std::setw(9) << "passed" << std::setw(9)
       << "failed" << '\n';
    for (const auto& c : summary.clauses)
        os << std::left << std::setw(36) << c.clause << std::right << std::setw(9) << c.passed << std::setw(9)
           << c.failed << '\n';
    os << "instances: " << summary.instances << '\n';
    os << "corrected formulas: " << (summary.corrected_ok ? "PASS" : "FAIL") << '\n';
}

std::vector<RatioRow> ratio_table(const std::vector<int>& ns) {
    std::vector<RatioRow> out;
    for (int n : ns) out.push_back({n, ratio_kf_wiener(n, 0, false), ratio_kfstar_gutman(n)});
    return out;
}

void print_ratio_table(std::ostream& os, const std::vector<RatioRow>& rows) {
    const double kf_limit = kf_wiener_limit.get_d(), gut_limit = kfstar_gutman_limit.get_d();
    os << std::setw(8) << "n" << std::setw(18) << "kf/w" << std::setw(14) << "|kf/w-8/15|" << std::setw(18)
       << "kf*/gut" << std::setw(16) << "|kf*/gut-16/33|" << '\n';
    os << std::setprecision(12);
    for (const auto& row : rows) {
        const double a = row.kf_over_w.get_d(), b = row.kfstar_over_gut.get_d();
        os << std::setw(8) << row.n << std::setw(18) << std::fixed << a << std::setw(14) << std::scientific
           << std::setprecision(4) << std::abs(a - kf_limit) << std::setw(18) << std::fixed << std::setprecision(12)
           << b << std::setw(16) << std::scientific << std::setprecision(4) << std::abs(b - gut_limit) << '\n'
           << std::setprecision(12);
    }
    os << std::defaultfloat;
}

namespace {

void write_formula_table(const SweepConfig& config, std::ostream& os) {
    using nlohmann::json;
    json rows = json::array();
    if (config.format == OutputFormat::Csv) os << "n,r,center_deleted,kf,tau,wiener,kfstar,gutman,kf_over_w\n";
    for (int n = config.n.first; n <= config.n.last; ++n) {
        const int r_lo = config.r ? std::max(0, config.r->first) : 0;
        const int r_hi = config.r ? std::min(n - 1, config.r->last) : n - 1;
        for (int r = r_lo; r <= r_hi; ++r) {
            for (bool deleted : {false, true}) {
                if (r == 0 && deleted) continue;
                const auto kf = formula_value([&] { return kf_snr2(n, r, deleted, config.variant); });
                const auto tau = formula_value([&] { return tau_snr2(n, r, deleted, config.variant); });
                const auto w = formula_value([&] { return wiener_snr2(n, r, deleted, config.variant); });
                ReportValue kfstar, gutman;
                if (r == 0) {
                    kfstar = ReportValue::of(kfstar_sn2(n));
                    gutman = ReportValue::of(Rational(gutman_sn2(n)));
                }
                ReportValue ratio;
                if (kf.present() && w.present()) {
                    const Rational q = *kf.exact / *w.exact;
                    ratio = config.exact ? ReportValue::of(q) : ReportValue::of(q.get_d());
                }
                if (config.format == OutputFormat::Csv) {
                    os << n << ',' << r << ',' << (deleted ? "true" : "false") << ',' << kf.render() << ','
                       << tau.render() << ',' << w.render() << ',' << kfstar.render() << ',' << gutman.render() << ','
                       << ratio.render() << '\n';
                } else {
                    const auto cell = [](const ReportValue& v) -> json {
                        if (v.exact) return rational_to_json(*v.exact);
                        if (v.approx) return *v.approx;
                        return nullptr;
                    };
                    rows.push_back({{"n", n}, {"r", r}, {"center_deleted", deleted}, {"kf", cell(kf)},
                                    {"tau", cell(tau)}, {"wiener", cell(w)}, {"kfstar", cell(kfstar)},
                                    {"gutman", cell(gutman)}, {"kf_over_w", cell(ratio)}});
                }
            }
        }
    }
    if (config.format == OutputFormat::Json) os << json{{"rows", rows}}.dump(2) << '\n';
}

} // namespace

void run_sweep(const SweepConfig& config, std::ostream& os) {
    config.validate();
    if (config.table == TableKind::Formulas) {
        write_formula_table(config, os);
        return;
    }
    nlohmann::json reports = nlohmann::json::array();
    if (config.format == OutputFormat::Csv) write_csv_header(os);
    bool warned_exact = false, warned_float = false;
    for_each_instance(config, [&](const FamilySpec& spec) {
        const auto vertices = static_cast<std::size_t>(2 * spec.n);
        ReportOptions options;
        options.tol = config.tol;
        options.variant = config.variant;
        options.exact = config.exact && vertices <= config.max_exact_vertices;
        if (config.exact && !options.exact && !warned_exact) {
            std::cerr << "warning: graphs above " << config.max_exact_vertices
                      << " vertices switch to floating arithmetic\n";
            warned_exact = true;
        }
        if (!options.exact && vertices > config.max_float_vertices) {
            options.with_oracle = false;
            options.with_spectral = false;
            if (!warned_float) {
                std::cerr << "warning: graphs above " << config.max_float_vertices
                          << " vertices get closed-form columns only\n";
                warned_float = true;
            }
        }
        const InvariantReport report = compute_report(spec, options);
        if (config.format == OutputFormat::Csv)
            write_csv_rows(os, report);
        else
            reports.push_back(to_json(report));
    });
    if (config.format == OutputFormat::Json) os << nlohmann::json{{"reports", reports}}.dump(2) << '\n';
}

} // namespace klab
