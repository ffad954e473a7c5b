// klab: generate S_n x K_2 family members, report their invariants, and
// check the closed forms against the exact oracle.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "klab/errors.hpp"
#include "klab/graph.hpp"
#include "klab/report.hpp"
#include "klab/serialize.hpp"
#include "klab/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::size_t env_size(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    try {
        return static_cast<std::size_t>(std::stoul(raw));
    } catch (const std::exception&) {
        throw UsageError(std::string("bad value for ") + name + ": '" + raw + "'");
    }
}

// Writes to --out when given, stdout otherwise.
void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + out_path + "' for writing");
    file << text;
}

struct GridOptions {
    std::string n = "2..10";
    std::string r = "all";
    std::string subsets = "all";
    std::optional<std::uint64_t> seed;
    std::string variant = "proof";
    std::string mode = "exact";
    double tol = 1e-9;
    std::string format = "csv";
    std::string out;
    std::string table = "report";
};

void add_grid_flags(CLI::App* cmd, GridOptions& g) {
    cmd->add_option("--n", g.n, "n or range A..B")->capture_default_str();
    cmd->add_option("--r", g.r, "r, range A..B, or 'all'")->capture_default_str();
    cmd->add_option("--subsets", g.subsets, "'all' or a sample count per (n, r)")->capture_default_str();
    cmd->add_option("--seed", g.seed, "seed for sampled subsets");
    cmd->add_option("--variant", g.variant, "proof | statement")->capture_default_str();
    cmd->add_option("--mode", g.mode, "exact | float")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
    cmd->add_option("--tol", g.tol, "floating comparison tolerance")->capture_default_str();
}

klab::SweepConfig to_config(const GridOptions& g) {
    klab::SweepConfig c;
    c.n = klab::IntRange::parse(g.n);
    if (g.r != "all") c.r = klab::IntRange::parse(g.r);
    if (g.subsets == "all") {
        c.all_subsets = true;
    } else {
        c.all_subsets = false;
        try {
            c.samples = std::stoi(g.subsets);
        } catch (const std::exception&) {
            throw UsageError("--subsets must be 'all' or a positive count");
        }
    }
    c.seed = g.seed;
    c.variant = klab::parse_variant(g.variant);
    c.exact = g.mode == "exact";
    c.tol = g.tol;
    if (g.format == "csv")
        c.format = klab::OutputFormat::Csv;
    else if (g.format == "json")
        c.format = klab::OutputFormat::Json;
    else
        throw UsageError("--format must be csv or json");
    if (g.table == "report")
        c.table = klab::TableKind::Report;
    else if (g.table == "formulas")
        c.table = klab::TableKind::Formulas;
    else
        throw UsageError("--table must be report or formulas");
    c.max_exact_vertices = env_size("KLAB_MAX_EXACT", c.max_exact_vertices);
    c.max_float_vertices = env_size("KLAB_MAX_FLOAT", c.max_float_vertices);
    c.validate();
    return c;
}

klab::FamilySpec family_spec(int n, const std::string& deleted) {
    klab::FamilySpec spec{n, klab::parse_index_list(deleted)};
    spec.validate();
    return spec;
}

int run_generate(int n, const std::string& deleted, const std::string& out) {
    const klab::Graph g = klab::make_snr2(family_spec(n, deleted));
    emit(out, klab::graph_to_json(g).dump(2) + "\n");
    return exit_ok;
}

struct InvariantsOptions {
    std::optional<int> n;
    std::string deleted;
    std::string file;
    std::string mode = "exact";
    std::string variant = "proof";
    double tol = 1e-9;
    std::string format = "json";
    std::string out;
};

int run_invariants(const InvariantsOptions& o) {
    if (o.n.has_value() == !o.file.empty()) throw UsageError("give exactly one of --n or --file");
    klab::ReportOptions options;
    options.exact = o.mode == "exact";
    options.tol = o.tol;
    options.variant = klab::parse_variant(o.variant);
    const std::size_t cap = env_size("KLAB_MAX_EXACT", 200);

    klab::InvariantReport report;
    if (o.n) {
        const klab::FamilySpec spec = family_spec(*o.n, o.deleted);
        if (options.exact && static_cast<std::size_t>(2 * spec.n) > cap)
            throw UsageError("exact arithmetic is capped at " + std::to_string(cap) +
                             " vertices (set KLAB_MAX_EXACT or pass --mode float)");
        report = klab::compute_report(spec, options);
    } else {
        std::ifstream in(o.file);
        if (!in) throw UsageError("cannot read '" + o.file + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw klab::InvalidInput(std::string("malformed JSON: ") + e.what());
        }
        const klab::Graph g = klab::graph_from_json(j);
        if (options.exact && g.vertex_count() > cap)
            throw UsageError("exact arithmetic is capped at " + std::to_string(cap) +
                             " vertices (set KLAB_MAX_EXACT or pass --mode float)");
        report = klab::compute_report(g, "file:" + o.file, options);
    }

    std::ostringstream text;
    if (o.format == "csv") {
        klab::write_csv_header(text);
        klab::write_csv_rows(text, report);
    } else if (o.format == "json") {
        text << klab::to_json(report).dump(2) << '\n';
    } else {
        throw UsageError("--format must be csv or json");
    }
    emit(o.out, text.str());
    return report.all_agree() ? exit_ok : exit_failed;
}

int run_verify(const GridOptions& g, bool ratio) {
    const klab::SweepConfig config = to_config(g);
    std::ostringstream text;
    if (ratio) {
        std::vector<int> ns;
        for (int n = config.n.first; n <= config.n.last; ++n) ns.push_back(n);
        klab::print_ratio_table(text, klab::ratio_table(ns));
        emit(g.out, text.str());
        return exit_ok;
    }
    const klab::VerifySummary summary = klab::run_verify(config);
    klab::print_verify_summary(text, summary);
    emit(g.out, text.str());
    return summary.corrected_ok ? exit_ok : exit_failed;
}

int run_sweep(const GridOptions& g) {
    const klab::SweepConfig config = to_config(g);
    std::ostringstream text;
    klab::run_sweep(config, text);
    emit(g.out, text.str());
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kirchhoff-index laboratory for S_n x K_2 and its vertical-edge-deleted variants"};
    app.require_subcommand(1);

    int gen_n = 0;
    std::string gen_delete, gen_out, gen_format = "json";
    auto* generate = app.add_subcommand("generate", "write a family member as edge-list JSON");
    generate->add_option("--n", gen_n, "star order n >= 2")->required();
    generate->add_option("--delete", gen_delete, "comma-separated indices i whose edge i-i' is removed");
    generate->add_option("--format", gen_format, "json")->check(CLI::IsMember({"json"}));
    generate->add_option("--out", gen_out, "output path (default stdout)");

    InvariantsOptions inv;
    auto* invariants = app.add_subcommand("invariants", "oracle, spectral and closed-form invariants of one graph");
    invariants->add_option("--n", inv.n, "star order n >= 2");
    invariants->add_option("--delete", inv.deleted, "comma-separated deleted vertical edges");
    invariants->add_option("--file", inv.file, "edge-list JSON graph instead of a family member");
    invariants->add_option("--mode", inv.mode, "exact | float")->check(CLI::IsMember({"exact", "float"}));
    invariants->add_option("--variant", inv.variant, "proof | statement");
    invariants->add_option("--tol", inv.tol, "floating comparison tolerance");
    invariants->add_option("--format", inv.format, "json | csv");
    invariants->add_option("--out", inv.out, "output path (default stdout)");

    GridOptions verify_grid;
    bool ratio = false;
    auto* verify = app.add_subcommand("verify", "check every closed form against the oracle over a grid");
    add_grid_flags(verify, verify_grid);
    verify->add_flag("--ratio", ratio, "print the Kf/W and Kf*/Gut convergence table instead");
    verify->add_option("--out", verify_grid.out, "output path (default stdout)");

    GridOptions sweep_grid;
    auto* sweep = app.add_subcommand("sweep", "emit the full data table for a grid");
    add_grid_flags(sweep, sweep_grid);
    sweep->add_option("--format", sweep_grid.format, "csv | json")->capture_default_str();
    sweep->add_option("--table", sweep_grid.table, "report | formulas")->capture_default_str();
    sweep->add_option("--out", sweep_grid.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*generate) return run_generate(gen_n, gen_delete, gen_out);
        if (*invariants) return run_invariants(inv);
        if (*verify) return run_verify(verify_grid, ratio);
        if (*sweep) return run_sweep(sweep_grid);
    } catch (const klab::DisconnectedFamily& e) {
        std::cerr << "error: disconnected: " << e.what() << '\n';
        return exit_usage;
    } catch (const klab::NotConnected& e) {
        std::cerr << "error: disconnected: " << e.what() << '\n';
        return exit_usage;
    } catch (const klab::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const klab::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}
