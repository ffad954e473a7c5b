#include "klab/report.hpp"

#include "klab/errors.hpp"
#include "klab/invariants.hpp"
#include "klab/serialize.hpp"
#include "klab/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

namespace klab {

using nlohmann::json;

namespace {

std::string render_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json value_to_json(const ReportValue& v) {
    if (v.exact) return rational_to_json(*v.exact);
    if (v.approx) return *v.approx;
    return nullptr;
}

ReportValue from_spectral(const SpectralValue& s) {
    return s.exact ? ReportValue::of(*s.exact) : ReportValue::of(s.approx);
}

void settle(InvariantRow& row, double tol) {
    row.agree = values_agree(row.oracle, row.spectral, tol) && values_agree(row.oracle, row.formula, tol) &&
                values_agree(row.spectral, row.formula, tol);
}

ReportValue ratio(const ReportValue& a, const ReportValue& b) {
    if (!a.present() || !b.present()) return ReportValue::none();
    if (a.exact && b.exact) return ReportValue::of(Rational(*a.exact / *b.exact));
    return ReportValue::of(*a.approx / *b.approx);
}

struct OracleValues {
    ReportValue kf, kfstar, tau, wiener, gutman;
};

OracleValues compute_oracle(const Graph& g, bool exact) {
    OracleValues out;
    out.wiener = ReportValue::of(Rational(wiener_index(g)));
    out.gutman = ReportValue::of(Rational(gutman_index(g)));
    if (exact) {
        const ResistanceMatrix r = resistance_matrix(g);
        const auto deg = g.degrees();
        Rational kf = 0, kfstar = 0;
        for (std::size_t i = 0; i < r.order(); ++i) {
            for (std::size_t j = i + 1; j < r.order(); ++j) {
                kf += r(i, j);
                kfstar += r(i, j) * static_cast<unsigned long>(deg[i] * deg[j]);
            }
        }
        out.kf = ReportValue::of(kf);
        out.kfstar = ReportValue::of(kfstar);
        out.tau = ReportValue::of(Rational(spanning_trees(g)));
    } else {
        out.kf = ReportValue::of(kirchhoff_index_float(g));
        out.kfstar = ReportValue::of(mult_deg_kirchhoff_index_float(g));
        out.tau = ReportValue::of(std::exp(log_spanning_trees_float(g)));
    }
    return out;
}

const char* kf_normalization_note =
    "spectral Kf = |V| * sum of 1/mu over nonzero Laplacian eigenvalues (the order factor is included)";

} // namespace

std::string ReportValue::render() const {
    if (exact) return to_string(*exact);
    if (approx) return render_double(*approx);
    return "";
}

bool values_agree(const ReportValue& a, const ReportValue& b, double rel_tol) {
    if (!a.present() || !b.present()) return true;
    if (a.exact && b.exact) return *a.exact == *b.exact;
    const double x = *a.approx, y = *b.approx;
    if (std::isinf(x) || std::isinf(y)) return x == y;
    return std::abs(x - y) <= rel_tol * std::max({1.0, std::abs(x), std::abs(y)});
}

bool InvariantReport::all_agree() const {
    for (const auto& row : rows)
        if (!row.agree) return false;
    return true;
}

const InvariantRow* InvariantReport::find(const std::string& invariant) const {
    for (const auto& row : rows)
        if (row.invariant == invariant) return &row;
    return nullptr;
}

std::string family_name(const FamilySpec& spec) {
    std::string out = "snr2[";
    bool first = true;
    for (int i : spec.deleted) {
        if (!first) out += ' ';
        out += std::to_string(i);
        first = false;
    }
    return out + "]";
}

InvariantReport compute_report(const FamilySpec& spec, const ReportOptions& options) {
    const Graph g = make_snr2(spec);
    const int n = spec.n, r = spec.r();
    const bool center_deleted = spec.center_deleted();

    InvariantReport report;
    report.family = family_name(spec);
    report.spec = spec;
    report.vertex_count = g.vertex_count();
    report.edge_count = g.edge_count();
    report.exact = options.exact;
    report.notes.emplace_back(kf_normalization_note);

    OracleValues oracle;
    if (options.with_oracle) oracle = compute_oracle(g, options.exact);

    ReportValue kf_spectral, kfstar_spectral, tau_spectral;
    if (options.with_spectral) {
        Spectrum l_spec = Spectrum::floating({}, options.tol);
        Spectrum nl_spec = Spectrum::floating({}, options.tol);
        if (options.exact) {
            l_spec = r == 0 ? analytic_spectrum_L_sn2(n) : analytic_spectrum_L_snr2(n, r, center_deleted, options.tol);
            if (!l_spec.is_exact())
                report.notes.emplace_back(
                    "closed-form Laplacian spectrum has a negative multiplicity here; numeric spectrum used");
            nl_spec = r == 0 ? analytic_spectrum_NL_sn2(n)
                             : numeric_spectrum(normalized_laplacian(g).floating, options.tol);
        } else {
            l_spec = numeric_spectrum(laplacian(g), options.tol);
            nl_spec = numeric_spectrum(normalized_laplacian(g).floating, options.tol);
        }
        kf_spectral = from_spectral(kf_from_spectrum(l_spec, g.vertex_count()));
        kfstar_spectral = from_spectral(kfstar_from_spectrum(nl_spec, g.edge_count()));
        tau_spectral = from_spectral(tau_from_spectrum(l_spec, g.vertex_count()));
    }

    const auto formula_or_note = [&](const std::function<FormulaValue()>& f) {
        try {
            return ReportValue::of(f().value);
        } catch (const Inconsistency& e) {
            report.notes.emplace_back(e.what());
            return ReportValue::none();
        }
    };

    InvariantRow kf{"kf", oracle.kf, kf_spectral,
                    formula_or_note([&] { return kf_snr2(n, r, center_deleted, options.variant); }),
                    options.variant};
    InvariantRow kfstar{"kfstar", oracle.kfstar, kfstar_spectral,
                        r == 0 ? ReportValue::of(kfstar_sn2(n)) : ReportValue::none(), std::nullopt};
    InvariantRow tau{"tau", oracle.tau, tau_spectral,
                     formula_or_note([&] { return tau_snr2(n, r, center_deleted, options.variant); }),
                     options.variant};
    InvariantRow wiener{"wiener", oracle.wiener, ReportValue::none(),
                        formula_or_note([&] { return wiener_snr2(n, r, center_deleted, options.variant); }),
                        options.variant};
    InvariantRow gutman{"gutman", oracle.gutman, ReportValue::none(),
                        r == 0 ? ReportValue::of(Rational(gutman_sn2(n))) : ReportValue::none(), std::nullopt};
    InvariantRow kf_over_w{"kf_over_w", ratio(oracle.kf, oracle.wiener), ReportValue::none(),
                           ratio(kf.formula, wiener.formula), options.variant};

    report.rows = {kf, kfstar, tau, wiener, gutman, kf_over_w};
    if (r == 0)
        report.rows.push_back({"kfstar_over_gut", ratio(oracle.kfstar, oracle.gutman), ReportValue::none(),
                               ReportValue::of(ratio_kfstar_gutman(n)), std::nullopt});
    for (auto& row : report.rows) {
        settle(row, options.tol);
        if (row.invariant != "kfstar" && row.invariant != "kfstar_over_gut" && row.invariant != "gutman" &&
            !row.formula.present() && options.variant == Variant::Statement)
            row.agree = false;
    }
    return report;
}

InvariantReport compute_report(const Graph& g, const std::string& name, const ReportOptions& options) {
    if (!is_connected(g) || g.vertex_count() == 0) throw NotConnected("invariants need a connected graph");
    InvariantReport report;
    report.family = name;
    report.vertex_count = g.vertex_count();
    report.edge_count = g.edge_count();
    report.exact = options.exact;
    report.notes.emplace_back(kf_normalization_note);

    const OracleValues oracle = compute_oracle(g, options.exact);
    const Spectrum l_spec = numeric_spectrum(laplacian(g), options.tol);
    ReportValue kfstar_spectral;
    if (g.vertex_count() > 1)
        kfstar_spectral = from_spectral(
            kfstar_from_spectrum(numeric_spectrum(normalized_laplacian(g).floating, options.tol), g.edge_count()));

    report.rows = {
        {"kf", oracle.kf, from_spectral(kf_from_spectrum(l_spec, g.vertex_count())), ReportValue::none(), std::nullopt},
        {"kfstar", oracle.kfstar, kfstar_spectral, ReportValue::none(), std::nullopt},
        {"tau", oracle.tau, from_spectral(tau_from_spectrum(l_spec, g.vertex_count())), ReportValue::none(), std::nullopt},
        {"wiener", oracle.wiener, ReportValue::none(), ReportValue::none(), std::nullopt},
        {"gutman", oracle.gutman, ReportValue::none(), ReportValue::none(), std::nullopt},
    };
    for (auto& row : report.rows) settle(row, options.tol);
    return report;
}

json to_json(const InvariantReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"invariant", row.invariant},
                        {"oracle", value_to_json(row.oracle)},
                        {"spectral", value_to_json(row.spectral)},
                        {"formula", value_to_json(row.formula)},
                        {"variant", row.variant ? json(to_string(*row.variant)) : json(nullptr)},
                        {"agree", row.agree}});
    }
    json out{{"family", report.family},
             {"n_vertices", report.vertex_count},
             {"n_edges", report.edge_count},
             {"mode", report.exact ? "exact" : "float"},
             {"rows", std::move(rows)},
             {"notes", report.notes},
             {"all_agree", report.all_agree()}};
    if (report.spec) {
        out["n"] = report.spec->n;
        out["r"] = report.spec->r();
        out["center_deleted"] = report.spec->center_deleted();
        out["deleted"] = report.spec->deleted;
    }
    return out;
}

void write_csv_header(std::ostream& os) {
    os << "family,n,r,center_deleted,invariant,oracle,spectral,formula,agree\n";
}

void write_csv_rows(std::ostream& os, const InvariantReport& report) {
    std::string prefix = report.family + ",";
    if (report.spec) {
        prefix += std::to_string(report.spec->n) + "," + std::to_string(report.spec->r()) + "," +
                  (report.spec->center_deleted() ? "true" : "false") + ",";
    } else {
        prefix += ",,,";
    }
    for (const auto& row : report.rows) {
        os << prefix << row.invariant << ',' << row.oracle.render() << ',' << row.spectral.render() << ','
           << row.formula.render() << ',' << (row.agree ? "true" : "false") << '\n';
    }
}

} // namespace klab
