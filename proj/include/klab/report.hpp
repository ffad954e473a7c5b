#ifndef KLAB_REPORT_HPP
#define KLAB_REPORT_HPP

#include "klab/closed_forms.hpp"
#include "klab/graph.hpp"
#include "klab/rational.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace klab {

// A cell of the report: absent, exact, or floating.
struct ReportValue {
    std::optional<Rational> exact;
    std::optional<double> approx;

    static ReportValue none() { return {}; }
    static ReportValue of(const Rational& q) { return {q, q.get_d()}; }
    static ReportValue of(double x) { return {std::nullopt, x}; }

    [[nodiscard]] bool present() const { return exact.has_value() || approx.has_value(); }
    [[nodiscard]] std::string render() const; // "" when absent, "p/q" when exact
};

/// Exact values must be equal; once a floating value is involved they must
/// agree to `rel_tol` relative to max(1, |a|, |b|). Absent values are skipped.
bool values_agree(const ReportValue& a, const ReportValue& b, double rel_tol);

struct InvariantRow {
    std::string invariant; // kf, kfstar, tau, wiener, gutman, kf_over_w, kfstar_over_gut
    ReportValue oracle;
    ReportValue spectral;
    ReportValue formula;
    std::optional<Variant> variant;
    bool agree = true;
};

struct InvariantReport {
    std::string family;
    std::optional<FamilySpec> spec;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    bool exact = true;
    std::vector<InvariantRow> rows;
    std::vector<std::string> notes;

    [[nodiscard]] bool all_agree() const;
    [[nodiscard]] const InvariantRow* find(const std::string& invariant) const;
};

struct ReportOptions {
    bool exact = true;
    double tol = 1e-9;
    Variant variant = Variant::Corrected;
    bool with_oracle = true;
    bool with_spectral = true;
};

/// Family member: oracle, spectral and closed-form columns.
InvariantReport compute_report(const FamilySpec& spec, const ReportOptions& options);
/// Arbitrary connected graph: oracle and numeric-spectral columns only.
InvariantReport compute_report(const Graph& g, const std::string& name, const ReportOptions& options);

/// "snr2[]" for S_n x K_2, "snr2[1 3]" for deleted indices {1, 3}.
std::string family_name(const FamilySpec& spec);

nlohmann::json to_json(const InvariantReport& report);

// CSV columns: family,n,r,center_deleted,invariant,oracle,spectral,formula,agree
void write_csv_header(std::ostream& os);
void write_csv_rows(std::ostream& os, const InvariantReport& report);

} // namespace klab

#endif // KLAB_REPORT_HPP
