#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rbond/campaign.hpp"
#include "rbond/families.hpp"
#include "rbond/graph.hpp"
#include "rbond/graph6.hpp"
#include "rbond/report.hpp"

using namespace rbond;

namespace {

CampaignItem generated_item(const char* spec) {
    GeneratedGraph g = generate_from_spec(spec);
    return {g.name, g.graph, g.embedding};
}

Json full_report(const char* spec) {
    return report_json(compute_report(generated_item(spec), StageSet::all(), std::nullopt));
}

std::string temp_file(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("report records carry a fixed key order and explicit nulls") {
    Json c5 = full_report("cycle:5");
    std::vector<std::string> keys;
    for (auto it = c5.begin(); it != c5.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"id", "n", "m", "delta", "Delta", "ad", "girth",
                                           "gamma", "gamma_r", "bondage", "v_minus_size",
                                           "v_zero_size", "v_plus_size", "bounds", "checks",
                                           "timings_ms"});
    CHECK(c5["id"] == "cycle(5)");
    CHECK(c5["n"] == 5);
    CHECK(c5["m"] == 5);
    CHECK(c5["ad"] == "2/1");
    CHECK(c5["girth"] == 5);
    CHECK(c5["gamma"] == 2);
    CHECK(c5["gamma_r"] == 4);
    CHECK(c5["bondage"]["status"] == "EXACT");
    CHECK(c5["bondage"]["value"] == 3);
    CHECK(c5["v_minus_size"] == 5);
    CHECK(c5["bounds"]["path"]["applicable"] == true);
    CHECK(c5["bounds"]["path"]["value"] == "3/1");
    CHECK(c5["bounds"]["critical_vertex"]["applicable"] == false);
    CHECK(c5["bounds"]["critical_vertex"]["value"].is_null());
    CHECK(c5["bounds"]["girth_euler"]["relaxed_value"] == "31/5");
    CHECK(c5["bounds"]["girth_euler"]["premise_holds"] == true);
    CHECK(c5["checks"]["VC"]["verdict"] == "HOLDS");
    CHECK(c5["checks"]["EDGE_SUM_11"]["verdict"] == "INAPPLICABLE");

    Json p5 = full_report("path:5");
    CHECK(p5["girth"] == "inf");
    // neither end edge alone changes the value; the disjoint pair does
    CHECK(p5["bondage"]["value"] == 2);
    CHECK(p5["bondage"]["witness_edges"] == Json::array({0, 2}));

    // Tree with every stage off: nothing but the shape survives. The bounds
    // and checks objects keep all their keys, each individually null.
    Json bare = report_json(
        compute_report(generated_item("path:3"), StageSet::none(), std::nullopt));
    CHECK(bare["gamma"].is_null());
    CHECK(bare["gamma_r"].is_null());
    CHECK(bare["bondage"].is_null());
    CHECK(bare["v_plus_size"].is_null());
    CHECK(bare["bounds"].size() == 5);
    CHECK(bare["bounds"]["path"].is_null());
    CHECK(bare["checks"].size() == 7);
    CHECK(bare["checks"]["VC"].is_null());
}

TEST_CASE("reports stay total on degenerate and oversized graphs") {
    CampaignItem empty{"empty", parse_graph6("?"), EmbeddingInfo::undeclared()};
    Json e = report_json(compute_report(empty, StageSet::all(), std::nullopt));
    CHECK(e["n"] == 0);
    CHECK(e["delta"].is_null());
    CHECK(e["ad"].is_null());
    CHECK(e["girth"] == "inf");
    CHECK(e["gamma"].is_null());
    CHECK(e["bondage"].is_null());
    CHECK(e["bounds"]["path"]["applicable"] == false);

    Json lonely = full_report("path:1");
    CHECK(lonely["gamma_r"] == 1);
    CHECK(lonely["bondage"]["status"] == "UNDEFINED");
    CHECK(lonely["bondage"]["value"].is_null());
    CHECK(lonely["bounds"]["critical_vertex"]["applicable"] == false);
    CHECK(lonely["bounds"]["critical_vertex"]["reason"] == "needs at least 2 vertices");

    // Past the exact-solver limit the solver stages go null but the
    // structural ones still run.
    Json big = full_report("path:65");
    CHECK(big["n"] == 65);
    CHECK(big["gamma"].is_null());
    CHECK(big["bondage"].is_null());
    CHECK(big["v_zero_size"].is_null());
    CHECK(big["bounds"]["critical_vertex"]["reason"] == "exceeds exact-solver limit");
    CHECK(big["bounds"]["avg_degree"]["applicable"] == true);
    CHECK(big["checks"]["RV1_SANDWICH"]["verdict"] == "INAPPLICABLE");
    CHECK(big["checks"]["HRA_PAIR"]["verdict"] == "HOLDS");
}

TEST_CASE("timing removal makes records reproducible") {
    Json a = strip_timings(full_report("cycle:6"));
    Json b = strip_timings(full_report("cycle:6"));
    CHECK(a["timings_ms"].is_null());
    CHECK(a.dump() == b.dump());
}

TEST_CASE("csv summarises one row per record") {
    CHECK(csv_header() ==
          "id,n,m,delta,Delta,ad,girth,gamma,gamma_r,bondage_status,bondage_value,"
          "v_minus_size,v_zero_size,v_plus_size,violated_checks");
    GraphReport r = compute_report(generated_item("cycle:5"), StageSet::all(), std::nullopt);
    CHECK(csv_row(r) == "cycle(5),5,5,2,2,2/1,5,2,4,EXACT,3,5,0,0,0");

    GraphReport skipped =
        compute_report(generated_item("path:3"), StageSet::none(), std::nullopt);
    CHECK(csv_row(skipped) == "path(3),3,2,1,2,4/3,inf,,,,,,,,");
}

TEST_CASE("predicates compare report fields exactly") {
    Json c5 = full_report("cycle:5");
    auto match = [&](const char* text) { return Predicate::parse(text).matches(c5); };

    CHECK(match("n == 5"));
    CHECK_FALSE(match("n != 5"));
    CHECK(match("gamma_r >= 4"));
    CHECK(match("ad == 2"));         // "2/1" in the record, compared as a rational
    CHECK(match("ad < 7/3"));
    CHECK(match("girth == 5"));
    CHECK(match("girth < inf"));
    CHECK(match("bondage.status == EXACT"));
    CHECK(match("bondage.value == 3"));
    CHECK(match("checks.VC.verdict == HOLDS"));
    CHECK(match("bounds.path.value <= 3"));
    CHECK(match("bounds.girth_euler.premise_holds == true"));
    CHECK(match("bounds.critical_vertex.applicable == false"));
    CHECK(match("id == \"cycle(5)\""));
    CHECK(match("n == 5 AND gamma_r == 4"));
    CHECK(match("n == 99 OR girth == 5"));
    CHECK(match("(n == 99 OR n == 5) AND Delta == 2"));
    CHECK_FALSE(match("n == 99 AND girth == 5"));
    CHECK(match("n == 5 and m == 5"));  // keywords are case-insensitive
    CHECK(match("delta = 2"));          // single = is accepted

    Json p5 = full_report("path:5");
    CHECK(Predicate::parse("girth == inf").matches(p5));
    CHECK_FALSE(Predicate::parse("girth < inf").matches(p5));

    // Null fields match nothing, under any operator.
    Json bare = report_json(
        compute_report(generated_item("path:3"), StageSet::none(), std::nullopt));
    CHECK_FALSE(Predicate::parse("gamma == 2").matches(bare));
    CHECK_FALSE(Predicate::parse("gamma != 2").matches(bare));
    CHECK_FALSE(Predicate::parse("bondage.value < 100").matches(bare));

    // Kind mismatch is unequal but never ordered.
    CHECK(Predicate::parse("bondage.status != 3").matches(c5));
    CHECK_FALSE(Predicate::parse("bondage.status < 3").matches(c5));
}

TEST_CASE("malformed predicates are rejected up front") {
    CHECK_THROWS_AS(Predicate::parse(""), PredicateError);
    CHECK_THROWS_AS(Predicate::parse("n =="), PredicateError);
    CHECK_THROWS_AS(Predicate::parse("== 3"), PredicateError);
    CHECK_THROWS_AS(Predicate::parse("n == 3 AND"), PredicateError);
    CHECK_THROWS_AS(Predicate::parse("(n == 3"), PredicateError);
    CHECK_THROWS_AS(Predicate::parse("n == 3)"), PredicateError);
    CHECK_THROWS_AS(Predicate::parse("frobnicate == 3"), PredicateError);  // unknown word
    CHECK_THROWS_AS(Predicate::parse("n == frobnicate"), PredicateError);
    CHECK_THROWS_AS(Predicate::parse("checks.VC.verdict == HOLD"), PredicateError);
    CHECK_THROWS_AS(Predicate::parse("n ! 3"), PredicateError);
    CHECK_THROWS_AS(Predicate::parse("n == \"open"), PredicateError);
    CHECK_THROWS_AS(Predicate::parse("n == 3 m == 2"), PredicateError);
    CHECK_THROWS_AS(Predicate::parse("girth == 1/0"), PredicateError);
}

TEST_CASE("predicates report the fields they read, once each") {
    Predicate p = Predicate::parse("bondage.value > 0 AND n < 9 OR bondage.value == 2");
    CHECK(p.fields() == std::vector<std::string>{"bondage.value", "n"});

    StageSet stages = stages_for_fields(p.fields());
    CHECK(stages.bondage);
    CHECK_FALSE(stages.solve);
    CHECK_FALSE(stages.impacts);
    CHECK_FALSE(stages.bounds);
    CHECK(stages.checks.empty());

    StageSet solve = stages_for_fields({"gamma"});
    CHECK(solve.solve);
    CHECK_FALSE(solve.bondage);

    StageSet impacts = stages_for_fields({"v_plus_size"});
    CHECK(impacts.impacts);

    StageSet bounds = stages_for_fields({"bounds.path.value"});
    CHECK(bounds.bounds);

    StageSet checks = stages_for_fields({"checks.VC.verdict", "checks.VC.detail"});
    CHECK(checks.checks == std::vector<CheckId>{CheckId::Vc});

    StageSet none = stages_for_fields({"n", "m", "girth"});
    CHECK_FALSE((none.solve || none.impacts || none.bondage || none.bounds));
    CHECK(none.checks.empty());
}

TEST_CASE("corpus sources stream in a fixed order") {
    std::string path = temp_file("rbond_order.g6");
    {
        std::ofstream f(path);
        f << "Bw\n";
    }
    CampaignConfig config;
    config.input_path = path;
    config.generator_specs = {"path:3", "cycle:4"};
    config.exhaustive = {{2, 2}};

    std::ostringstream diag;
    std::vector<std::string> ids;
    for_each_item(
        config,
        [&](const CampaignItem& item) {
            ids.push_back(item.id);
            return true;
        },
        diag);
    CHECK(ids == std::vector<std::string>{"L1", "path(3)", "cycle(4)", "A?", "A_"});
    CHECK(diag.str().empty());

    // Early stop.
    int seen = 0;
    for_each_item(
        config,
        [&](const CampaignItem&) {
            ++seen;
            return false;
        },
        diag);
    CHECK(seen == 1);

    CampaignConfig bad;
    bad.exhaustive = {{0, 3}};
    CHECK_THROWS_AS(for_each_item(bad, [](const CampaignItem&) { return true; }, diag),
                    std::invalid_argument);
    std::filesystem::remove(path);
}

TEST_CASE("campaign runs clean corpora to exit zero") {
    CampaignConfig config;
    config.exhaustive = {{3, 3}};
    config.connected_only = true;

    std::ostringstream out, diag;
    CHECK(run_campaign(config, out, diag) == 0);
    std::vector<std::string> records = lines_of(out.str());
    REQUIRE(records.size() == 4);  // labeled connected graphs on 3 vertices
    Json first = Json::parse(records[0]);
    CHECK(first["n"] == 3);
    CHECK(first["gamma_r"].is_null() == false);
    // ids are the graph6 encodings
    for (const auto& line : records) {
        Json record = Json::parse(line);
        Graph g = parse_graph6(record["id"].get<std::string>());
        CHECK(g.vertex_count() == 3);
    }
}

TEST_CASE("campaign output is deterministic across worker counts") {
    auto run = [](int workers) {
        CampaignConfig config;
        config.exhaustive = {{1, 4}};
        config.workers = workers;
        std::ostringstream out, diag;
        REQUIRE(run_campaign(config, out, diag) == 0);
        std::string stripped;
        for (const auto& line : lines_of(out.str()))
            stripped += strip_timings(Json::parse(line)).dump() + "\n";
        return stripped;
    };
    std::string solo = run(1);
    CHECK(solo == run(3));
    CHECK(lines_of(solo).size() == 1 + 2 + 8 + 64);
}

TEST_CASE("campaign flags violations from a poisoned declaration") {
    // K7 with a claimed planar embedding: impossible, and the dense-edge
    // check notices.
    std::string path = temp_file("rbond_k7.el");
    {
        std::ofstream f(path);
        f << "# chi=2\n7 21\n";
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v) f << u << " " << v << "\n";
    }
    CampaignConfig config;
    config.input_path = path;
    config.format = CorpusFormat::EdgeList;

    std::ostringstream out, diag;
    CHECK(run_campaign(config, out, diag) == 1);
    Json record = Json::parse(lines_of(out.str()).at(0));
    CHECK(record["checks"]["EDGE_SUM_11"]["verdict"] == "VIOLATED");
    CHECK(record["checks"]["SGZ_AD"]["verdict"] == "VIOLATED");
    CHECK(diag.str().find("EDGE_SUM_11") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("campaign writes files when asked") {
    std::string out_path = temp_file("rbond_out.jsonl");
    std::string csv_path = temp_file("rbond_out.csv");
    CampaignConfig config;
    config.exhaustive = {{2, 3}};
    config.connected_only = true;
    config.out_path = out_path;
    config.csv_path = csv_path;

    std::ostringstream out, diag;
    CHECK(run_campaign(config, out, diag) == 0);
    CHECK(out.str().empty());  // records went to the file

    std::ifstream jf(out_path);
    std::stringstream jbuf;
    jbuf << jf.rdbuf();
    CHECK(lines_of(jbuf.str()).size() == 5);  // 1 + 4 connected graphs

    std::ifstream cf(csv_path);
    std::stringstream cbuf;
    cbuf << cf.rdbuf();
    std::vector<std::string> csv = lines_of(cbuf.str());
    REQUIRE(csv.size() == 6);  // header + 5 rows
    CHECK(csv[0] == csv_header());
    CHECK(csv[1].rfind("A_,2,1,", 0) == 0);

    std::filesystem::remove(out_path);
    std::filesystem::remove(csv_path);
}

TEST_CASE("hunt stops at the first match and prints it") {
    CampaignConfig config;
    config.exhaustive = {{1, 6}};
    config.connected_only = true;

    std::ostringstream out, diag;
    int rc = run_hunt(config, "v_plus_size > 0", out, diag);
    CHECK(rc == 1);
    std::vector<std::string> hit = lines_of(out.str());
    REQUIRE(hit.size() == 2);
    CHECK(hit[0] == "Cs");  // the 3-leaf star is the first raiser
    Json record = Json::parse(hit[1]);
    CHECK(record["id"] == "Cs");
    CHECK(record["v_plus_size"] == 1);
    // Only the stage the predicate needs was computed.
    CHECK(record["gamma_r"].is_null());
    CHECK(record["bondage"].is_null());
    CHECK(record["bounds"]["path"].is_null());
    CHECK(record["checks"]["VC"].is_null());
}

TEST_CASE("hunt reports NONE on an exhausted corpus") {
    CampaignConfig config;
    config.exhaustive = {{1, 4}};

    std::ostringstream out, diag;
    CHECK(run_hunt(config, "n > 100", out, diag) == 0);
    CHECK(out.str() == "NONE\n");

    std::ostringstream out2, diag2;
    CHECK(run_hunt(config, "no_such_field == 1", out2, diag2) == 2);
    CHECK(diag2.str().find("predicate error") != std::string::npos);
}

TEST_CASE("worker count resolution prefers the flag, then the environment") {
    CHECK(resolve_worker_count(5) == 5);
    setenv("RB_WORKERS", "3", 1);
    CHECK(resolve_worker_count(std::nullopt) == 3);
    CHECK(resolve_worker_count(7) == 7);
    setenv("RB_WORKERS", "garbage", 1);
    CHECK(resolve_worker_count(std::nullopt) >= 1);
    unsetenv("RB_WORKERS");
    CHECK(resolve_worker_count(std::nullopt) >= 1);
}
