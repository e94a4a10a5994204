#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <variant>
#include <vector>

#include "rbond/bondage.hpp"
#include "rbond/bounds.hpp"
#include "rbond/families.hpp"
#include "rbond/graph.hpp"
#include "rbond/roman.hpp"

using namespace rbond;

namespace {

Graph family(const char* spec) { return generate_from_spec(spec).graph; }

}  // namespace

TEST_CASE("path bound on hand-checked graphs") {
    BoundEvaluation p3 = bound_path(family("path:3"));
    REQUIRE(p3.applicable);
    CHECK(*p3.value == Rational(1));
    PathTriple w = std::get<PathTriple>(p3.witness);
    CHECK(w.x == 0);
    CHECK(w.y == 1);
    CHECK(w.z == 2);

    // Triangle: the shared neighbor discounts the sum by one.
    CHECK(*bound_path(family("cycle:3")).value == Rational(2));
    CHECK(*bound_path(family("cycle:5")).value == Rational(3));
    CHECK(*bound_path(family("star:6")).value == Rational(5));

    BoundEvaluation k2 = bound_path(build_graph(2, {{0, 1}}));
    CHECK_FALSE(k2.applicable);
    CHECK(k2.reason == "no path on 3 vertices (max degree < 2)");
    CHECK_FALSE(k2.value.has_value());
    CHECK(std::holds_alternative<std::monostate>(k2.witness));
}

TEST_CASE("critical vertex bound on hand-checked graphs") {
    BoundEvaluation p5 = bound_critical_vertex(family("path:5"));
    REQUIRE(p5.applicable);
    CHECK(*p5.value == Rational(2));
    CHECK(std::get<int>(p5.witness) == 2);  // the middle vertex

    BoundEvaluation star = bound_critical_vertex(family("star:3"));
    REQUIRE(star.applicable);
    CHECK(*star.value == Rational(1));
    CHECK(std::get<int>(star.witness) == 1);  // cheapest leaf

    // Precomputed impacts give the identical evaluation.
    Graph p5g = family("path:5");
    BoundEvaluation direct = bound_critical_vertex(p5g, analyze_impacts(p5g));
    CHECK(direct.applicable == p5.applicable);
    CHECK(*direct.value == *p5.value);

    BoundEvaluation c5 = bound_critical_vertex(family("cycle:5"));
    CHECK_FALSE(c5.applicable);
    CHECK(c5.reason == "every vertex removal lowers the value (vertex-critical)");

    CHECK_THROWS_AS(bound_critical_vertex(build_graph(1, {})), std::invalid_argument);
    CHECK_THROWS_AS(bound_critical_vertex(build_graph(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
}

TEST_CASE("average degree bound on hand-checked graphs") {
    CHECK(*bound_avg_degree(family("cycle:4")).value == Rational(3));
    CHECK(*bound_avg_degree(family("cycle:9")).value == Rational(3));
    CHECK(*bound_avg_degree(family("complete:4")).value == Rational(6));
    CHECK(*bound_avg_degree(family("path:5")).value == Rational(11, 5));

    CHECK(bound_avg_degree(build_graph(0, {})).reason == "empty graph");
    CHECK(bound_avg_degree(build_graph(4, {{0, 1}, {2, 3}})).reason == "disconnected");
    CHECK(bound_avg_degree(build_graph(2, {{0, 1}})).reason == "max degree < 2");
}

TEST_CASE("girth and Euler characteristic bound") {
    GeneratedGraph ico = generate("icosahedron", {});
    BoundEvaluation b = bound_girth_euler(ico.graph, ico.embedding);
    REQUIRE(b.applicable);
    CHECK(*b.value == Rational(12));
    CHECK(*b.relaxed_value == Rational(12));
    CHECK(b.premise_holds == true);

    GeneratedGraph torus = generate("toroidal_grid", {3, 3});
    BoundEvaluation t = bound_girth_euler(torus.graph, torus.embedding);
    REQUIRE(t.applicable);
    CHECK(*t.value == Rational(13));
    CHECK(*t.relaxed_value == Rational(13));
    CHECK(t.premise_holds == true);

    GeneratedGraph c5 = generate("cycle", {5});
    BoundEvaluation c = bound_girth_euler(c5.graph, c5.embedding);
    REQUIRE(c.applicable);
    CHECK(*c.value == Rational(3));
    CHECK(*c.relaxed_value == Rational(31, 5));
    CHECK(c.premise_holds == true);  // equality case

    GeneratedGraph p5 = generate("path", {5});
    BoundEvaluation forest = bound_girth_euler(p5.graph, p5.embedding);
    CHECK_FALSE(forest.applicable);
    CHECK(forest.reason == "no cycle (forest)");

    CHECK(bound_girth_euler(c5.graph, EmbeddingInfo::undeclared()).reason ==
          "no declared Euler characteristic");
    CHECK(bound_girth_euler(build_graph(2, {{0, 1}}), EmbeddingInfo::orientable(0)).reason ==
          "max degree < 2");
    CHECK(bound_girth_euler(build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}),
                            EmbeddingInfo::orientable(0))
              .reason == "disconnected");
}

TEST_CASE("flat surface bound") {
    GeneratedGraph c5 = generate("cycle", {5});
    BoundEvaluation b = bound_surface15(c5.graph, c5.embedding);
    REQUIRE(b.applicable);
    CHECK(*b.value == Rational(15));

    GeneratedGraph torus = generate("toroidal_grid", {3, 3});
    CHECK(bound_surface15(torus.graph, torus.embedding).applicable);

    CHECK(bound_surface15(c5.graph, EmbeddingInfo::chi_only(-2)).reason ==
          "Euler characteristic negative");
    CHECK(bound_surface15(c5.graph, EmbeddingInfo::undeclared()).reason ==
          "no declared Euler characteristic");
    CHECK(bound_surface15(build_graph(2, {{0, 1}}), EmbeddingInfo::orientable(0)).reason ==
          "max degree < 2");
    CHECK(bound_surface15(build_graph(4, {{0, 1}, {2, 3}}), EmbeddingInfo::orientable(0))
              .reason == "disconnected");
}

TEST_CASE("min degree ceiling per surface") {
    CHECK(delta_max_bound(1) == 5);   // projective plane
    CHECK(delta_max_bound(0) == 6);   // torus, Klein bottle
    CHECK(delta_max_bound(-2) == 7);
    CHECK(delta_max_bound(-10) == 11);
    CHECK_THROWS_AS(delta_max_bound(2), std::invalid_argument);
}

TEST_CASE("edge removal never moves the value outside the sandwich") {
    CHECK(theorem_check(family("cycle:5"), EmbeddingInfo::undeclared(),
                        CheckId::Rv1Sandwich)
              .verdict == CheckVerdict::Holds);
    CheckOutcome edgeless =
        theorem_check(build_graph(3, {}), EmbeddingInfo::undeclared(), CheckId::Rv1Sandwich);
    CHECK(edgeless.verdict == CheckVerdict::Holds);
    CHECK(edgeless.detail == "no edges; vacuously holds");
    CHECK(theorem_check(build_graph(0, {}), EmbeddingInfo::undeclared(),
                        CheckId::Rv1Sandwich)
              .verdict == CheckVerdict::Inapplicable);
}

TEST_CASE("raising vertices carry a 2 with three private 0-neighbors") {
    CHECK(theorem_check(family("star:3"), EmbeddingInfo::undeclared(), CheckId::VvvI)
              .verdict == CheckVerdict::Holds);
    // No raising vertex at all: vacuous.
    CheckOutcome c5 =
        theorem_check(family("cycle:5"), EmbeddingInfo::undeclared(), CheckId::VvvI);
    CHECK(c5.verdict == CheckVerdict::Holds);
    CHECK(c5.detail == "no vertex raises the value; vacuously holds");
    CHECK(theorem_check(build_graph(1, {}), EmbeddingInfo::undeclared(), CheckId::VvvI)
              .verdict == CheckVerdict::Inapplicable);
}

TEST_CASE("pair and labeling equivalences on hand-checked graphs") {
    EmbeddingInfo none = EmbeddingInfo::undeclared();
    CHECK(theorem_check(family("path:4"), none, CheckId::VvvII).verdict ==
          CheckVerdict::Holds);
    CHECK(theorem_check(family("cycle:5"), none, CheckId::Vc).verdict ==
          CheckVerdict::Holds);
    CHECK(theorem_check(family("star:3"), none, CheckId::Vc).verdict ==
          CheckVerdict::Holds);

    CheckOutcome hra = theorem_check(family("path:4"), none, CheckId::HraPair);
    CHECK(hra.verdict == CheckVerdict::Holds);
    CHECK(hra.detail.find("(0,1)") != std::string::npos);
    CHECK(theorem_check(build_graph(1, {}), none, CheckId::HraPair).verdict ==
          CheckVerdict::Inapplicable);
    CHECK(theorem_check(build_graph(4, {{0, 1}, {2, 3}}), none, CheckId::HraPair).verdict ==
          CheckVerdict::Inapplicable);
}

TEST_CASE("average degree vs girth ceiling") {
    GeneratedGraph ico = generate("icosahedron", {});
    CheckOutcome tight = theorem_check(ico.graph, ico.embedding, CheckId::SgzAd);
    CHECK(tight.verdict == CheckVerdict::Holds);  // equality: 5 <= 5

    // A false planarity declaration on K5 breaks the inequality.
    CheckOutcome fake =
        theorem_check(family("complete:5"), EmbeddingInfo::chi_only(2), CheckId::SgzAd);
    CHECK(fake.verdict == CheckVerdict::Violated);

    CHECK(theorem_check(family("path:4"), EmbeddingInfo::orientable(0), CheckId::SgzAd)
              .verdict == CheckVerdict::Inapplicable);
}

TEST_CASE("dense surface graphs expose a light edge") {
    GeneratedGraph ico = generate("icosahedron", {});
    CheckOutcome holds = theorem_check(ico.graph, ico.embedding, CheckId::EdgeSum11);
    CHECK(holds.verdict == CheckVerdict::Holds);

    // K7 cannot live on a sphere; declaring it planar forces a violation.
    CHECK(theorem_check(family("complete:7"), EmbeddingInfo::chi_only(2),
                        CheckId::EdgeSum11)
              .verdict == CheckVerdict::Violated);

    CHECK(theorem_check(family("complete:6"), EmbeddingInfo::chi_only(2),
                        CheckId::EdgeSum11)
              .verdict == CheckVerdict::Holds);

    CheckOutcome torus_low =
        theorem_check(family("complete:6"), EmbeddingInfo::chi_only(0), CheckId::EdgeSum11);
    CHECK(torus_low.verdict == CheckVerdict::Inapplicable);
    CHECK(torus_low.detail == "needs max degree >= 7 when chi = 0");

    CHECK(theorem_check(family("cycle:5"), EmbeddingInfo::chi_only(2), CheckId::EdgeSum11)
              .verdict == CheckVerdict::Inapplicable);  // min degree < 5
}

TEST_CASE("proved statements never report a violation on small graphs") {
    EmbeddingInfo none = EmbeddingInfo::undeclared();
    for (int n = 2; n <= 5; ++n)
        enumerate_small_graphs(n, true, [&](const Graph& g) {
            for (CheckId id : {CheckId::Rv1Sandwich, CheckId::VvvI, CheckId::VvvII,
                               CheckId::Vc, CheckId::HraPair})
                CHECK(theorem_check(g, none, id).verdict != CheckVerdict::Violated);
            return true;
        });
}

TEST_CASE("bounds really cap the bondage number on small graphs") {
    for (int n = 3; n <= 6; ++n)
        enumerate_small_graphs(n, true, [](const Graph& g) {
            int m = static_cast<int>(g.edge_count());
            BondageResult b = roman_bondage(g, m);
            if (b.status != BondageStatus::Exact) return true;  // value is n: undefined
            Rational exact(*b.value);
            int max_degree = degree_profile(g).max_degree;

            BoundEvaluation path = bound_path(g);
            if (path.applicable) CHECK(exact <= *path.value);

            BoundEvaluation avg = bound_avg_degree(g);
            if (avg.applicable) CHECK(exact <= *avg.value);

            ImpactAnalysis impacts = analyze_impacts(g);
            BoundEvaluation cv = bound_critical_vertex(g, impacts);
            if (cv.applicable) {
                CHECK(exact <= *cv.value);
                CHECK(*cv.value <= Rational(max_degree));
            } else {
                // Only a fully vertex-critical graph escapes the chain, and
                // then nothing forces the bondage number under max degree.
                CHECK(is_roman_vertex_critical(g));
            }
            if (*b.value > max_degree) CHECK(is_roman_vertex_critical(g));
            return true;
        });
}

TEST_CASE("names round trip") {
    for (CheckId id : {CheckId::Rv1Sandwich, CheckId::VvvI, CheckId::VvvII, CheckId::Vc,
                       CheckId::HraPair, CheckId::SgzAd, CheckId::EdgeSum11})
        CHECK(check_from_name(check_name(id)) == id);
    CHECK_FALSE(check_from_name("NO_SUCH_CHECK").has_value());
    CHECK_FALSE(check_from_name("rv1_sandwich").has_value());  // names are exact

    CHECK(std::string(bound_name(BoundId::Path)) == "path");
    CHECK(std::string(bound_name(BoundId::CriticalVertex)) == "critical_vertex");
    CHECK(std::string(bound_name(BoundId::AvgDegree)) == "avg_degree");
    CHECK(std::string(bound_name(BoundId::GirthEuler)) == "girth_euler");
    CHECK(std::string(bound_name(BoundId::Surface15)) == "surface15");
}
