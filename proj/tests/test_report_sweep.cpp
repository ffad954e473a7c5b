#include "klab/errors.hpp"
#include "klab/report.hpp"
#include "klab/serialize.hpp"
#include "klab/sweep.hpp"

#include <doctest.h>

#include <sstream>

using namespace klab;

TEST_CASE("index lists") {
    CHECK(parse_index_list("") == std::set<int>{});
    CHECK(parse_index_list("2,3") == std::set<int>{2, 3});
    CHECK(parse_index_list("5") == std::set<int>{5});
    CHECK_THROWS_AS(parse_index_list("a"), InvalidParameter);
    CHECK_THROWS_AS(parse_index_list("1,1"), InvalidParameter);
    CHECK_THROWS_AS(parse_index_list("1x"), InvalidParameter);
}

TEST_CASE("integer ranges") {
    const auto a = IntRange::parse("5");
    CHECK(a.first == 5);
    CHECK(a.last == 5);
    const auto b = IntRange::parse("2..10");
    CHECK(b.first == 2);
    CHECK(b.last == 10);
    CHECK_THROWS_AS(IntRange::parse("10..2"), InvalidParameter);
    CHECK_THROWS_AS(IntRange::parse("x"), InvalidParameter);
    CHECK_THROWS_AS(IntRange::parse("2..x"), InvalidParameter);
}

TEST_CASE("sweep config validation") {
    SweepConfig c;
    CHECK_NOTHROW(c.validate());
    c.n = {2, 13};
    CHECK_THROWS_AS(c.validate(), InvalidParameter);
    c.all_subsets = false;
    c.samples = 5;
    CHECK_THROWS_AS(c.validate(), InvalidParameter); // no seed
    c.seed = 1;
    CHECK_NOTHROW(c.validate());
    c.n = {1, 4};
    CHECK_THROWS_AS(c.validate(), InvalidParameter);
}

TEST_CASE("subset enumeration") {
    const auto s = all_subsets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s.front() == std::set<int>{1, 2});
    CHECK(s.back() == std::set<int>{3, 4});
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(all_subsets(5, 0) == std::vector<std::set<int>>{{}});
    CHECK(all_subsets(10, 4).size() == 210);
}

TEST_CASE("seeded sampling") {
    const auto a = sample_subsets(40, 7, 5, 12345);
    const auto b = sample_subsets(40, 7, 5, 12345);
    CHECK(a == b);
    REQUIRE(a.size() == 5);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
    for (const auto& s : a) {
        CHECK(s.size() == 7);
        CHECK(*s.begin() >= 1);
        CHECK(*s.rbegin() <= 40);
    }
    CHECK(sample_subsets(40, 7, 5, 12346) != a);
    CHECK(sample_subsets(41, 7, 5, 12345) != a);
    // Asking for more than exist returns all of them.
    CHECK(sample_subsets(5, 2, 100, 1) == all_subsets(5, 2));
    CHECK_THROWS_AS(sample_subsets(5, 2, 0, 1), InvalidParameter);
}

TEST_CASE("family names") {
    CHECK(family_name({4, {}}) == "snr2[]");
    CHECK(family_name({4, {1, 3}}) == "snr2[1 3]");
}

TEST_CASE("graph json round trip") {
    const Graph g = make_snr2({4, {2}});
    const auto j = graph_to_json(g);
    CHECK(j["n_vertices"] == 8);
    const Graph h = graph_from_json(j);
    CHECK(h.edges() == g.edges());
    CHECK(h.labels() == g.labels());
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n_vertices": 2, "edges": [[0]]})")), InvalidInput);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"edges": []})")), InvalidInput);
}

TEST_CASE("rational json") {
    const auto j = rational_to_json(Rational(134, 3));
    CHECK(j["num"] == 134);
    CHECK(j["den"] == 3);
    BigInt big;
    mpz_ui_pow_ui(big.get_mpz_t(), 3, 60);
    CHECK(integer_to_json(big).is_string());
    CHECK(integer_to_json(BigInt(54)) == 54);
}

TEST_CASE("spectrum json") {
    const auto j = spectrum_to_json(analytic_spectrum_L_snr2(4, 2, true));
    CHECK(j["exact"].size() == 4);
    CHECK(j["cubic"]["e1"]["num"] == 7);
    CHECK(j["floating"].is_null());
}

TEST_CASE("family report") {
    const auto report = compute_report(FamilySpec{4, {1, 2}}, ReportOptions{});
    CHECK(report.family == "snr2[1 2]");
    CHECK(report.vertex_count == 8);
    CHECK(report.edge_count == 8);
    CHECK(report.all_agree());
    const auto* kf = report.find("kf");
    REQUIRE(kf != nullptr);
    CHECK(*kf->oracle.exact == Rational(134, 3));
    CHECK(*kf->spectral.exact == Rational(134, 3));
    CHECK(*kf->formula.exact == Rational(134, 3));
    CHECK(kf->oracle.render() == "134/3");
    CHECK(report.find("tau")->oracle.render() == "6");
    CHECK(report.find("wiener")->oracle.render() == "62");
    CHECK(report.find("kfstar_over_gut") == nullptr);

    const auto base = compute_report(FamilySpec{4, {}}, ReportOptions{});
    CHECK(base.find("kfstar")->formula.render() == "478/3");
    CHECK(base.find("kfstar_over_gut") != nullptr);
    CHECK(base.all_agree());
}

TEST_CASE("statement variant is flagged") {
    ReportOptions o;
    o.variant = Variant::Statement;
    const auto report = compute_report(FamilySpec{2, {2}}, o);
    CHECK_FALSE(report.all_agree());
    CHECK_FALSE(report.find("wiener")->agree);
}

TEST_CASE("arbitrary graph report") {
    const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    const auto report = compute_report(c5, "c5", ReportOptions{});
    CHECK(report.find("kf")->oracle.render() == "10");
    CHECK(report.find("tau")->oracle.render() == "5");
    CHECK_FALSE(report.find("kf")->formula.present());
    CHECK(report.all_agree());
    CHECK_THROWS_AS(compute_report(Graph(3, {{0, 1}}), "x", ReportOptions{}), NotConnected);
}

TEST_CASE("csv and json output") {
    const auto report = compute_report(FamilySpec{3, {2}}, ReportOptions{});
    std::ostringstream os;
    write_csv_header(os);
    write_csv_rows(os, report);
    const std::string text = os.str();
    CHECK(text.rfind("family,n,r,center_deleted,invariant,oracle,spectral,formula,agree\n", 0) == 0);
    CHECK(text.find("snr2[2],3,1,false,kf,") != std::string::npos);
    const auto j = to_json(report);
    CHECK(j["family"] == "snr2[2]");
    CHECK(j["rows"].is_array());
}

TEST_CASE("verify over a small grid") {
    SweepConfig c;
    c.n = {2, 6};
    const auto summary = run_verify(c);
    CHECK(summary.corrected_ok);
    CHECK(summary.instances == 3 + 7 + 15 + 31 + 63);
    for (const auto& clause : summary.clauses) {
        CAPTURE(clause.clause);
        CHECK(clause.failed == 0);
    }

    c.variant = Variant::Statement;
    const auto stated = run_verify(c);
    CHECK(stated.corrected_ok);
    long failed = 0;
    for (const auto& clause : stated.clauses) failed += clause.failed;
    CHECK(failed > 0);
}

TEST_CASE("ratio table") {
    const auto rows = ratio_table({2, 10});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].kf_over_w == Rational(5, 8));
    std::ostringstream os;
    print_ratio_table(os, rows);
    CHECK(os.str().find("kf/w") != std::string::npos);
}

TEST_CASE("sweep output is deterministic") {
    SweepConfig c;
    c.n = {30, 30};
    c.r = IntRange{3, 3};
    c.all_subsets = false;
    c.samples = 3;
    c.seed = 7;
    std::ostringstream a, b;
    run_sweep(c, a);
    run_sweep(c, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("snr2[") != std::string::npos);

    c.table = TableKind::Formulas;
    c.format = OutputFormat::Json;
    std::ostringstream f;
    run_sweep(c, f);
    const auto j = nlohmann::json::parse(f.str());
    CHECK(j["rows"].size() == 2); // center kept and deleted
}
