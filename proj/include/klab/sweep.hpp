#ifndef KLAB_SWEEP_HPP
#define KLAB_SWEEP_HPP

#include "klab/closed_forms.hpp"
#include "klab/rational.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace klab {

struct IntRange {
    int first = 0;
    int last = 0;

    /// "5" or "2..10".
    static IntRange parse(const std::string& text);
};

enum class OutputFormat { Csv, Json };
enum class TableKind { Report, Formulas };

struct SweepConfig {
    IntRange n{2, 10};
    std::optional<IntRange> r; // nullopt: every r in [0, n-1]
    bool all_subsets = true;
    int samples = 0;           // subsets per (n, r) when sampling
    std::optional<std::uint64_t> seed;
    bool exact = true;
    double tol = 1e-9;
    Variant variant = Variant::Corrected;
    OutputFormat format = OutputFormat::Csv;
    TableKind table = TableKind::Report;
    std::size_t max_exact_vertices = 200;
    std::size_t max_float_vertices = 400;

    /// Throws InvalidParameter: bad ranges, sampling without a seed,
    /// all-subsets beyond n = 12 when deletion sets are actually enumerated.
    void validate() const;
};

/// All r-subsets of {1..n} in lexicographic order.
std::vector<std::set<int>> all_subsets(int n, int r);

/// min(k, C(n, r)) distinct r-subsets drawn uniformly, deterministic in
/// (seed, n, r), returned in lexicographic order.
std::vector<std::set<int>> sample_subsets(int n, int r, int k, std::uint64_t seed);

std::vector<std::set<int>> deletion_subsets(int n, int r, const SweepConfig& config);

struct ClauseTally {
    std::string clause;
    long passed = 0;
    long failed = 0;
};

struct VerifySummary {
    std::vector<ClauseTally> clauses;   // for the requested variant
    bool corrected_ok = true;           // every corrected-variant check passed
    long instances = 0;
};

/// Oracle-vs-formula and oracle-vs-spectrum agreement over the grid.
VerifySummary run_verify(const SweepConfig& config);
void print_verify_summary(std::ostream& os, const VerifySummary& summary);

struct RatioRow {
    int n = 0;
    Rational kf_over_w;
    Rational kfstar_over_gut;
};

std::vector<RatioRow> ratio_table(const std::vector<int>& ns);
void print_ratio_table(std::ostream& os, const std::vector<RatioRow>& rows);

/// Writes the full data table for the grid.
void run_sweep(const SweepConfig& config, std::ostream& os);

} // namespace klab

#endif // KLAB_SWEEP_HPP
