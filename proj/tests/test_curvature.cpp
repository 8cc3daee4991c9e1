#include "doctest.h"

#include <cstdlib>

#include "corpus.hpp"
#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"

using namespace ricci;
using ricci::testing::base_corpus;
using ricci::testing::srg_corpus;

namespace {

Rational expected_curvature(const std::string& name) {
    if (name == "cycle:5")
        return {1, 2};
    if (name == "petersen" || name == "hoffman-singleton")
        return name == "petersen" ? Rational(0) : Rational(-4, 7);
    if (name == "rooks:4")
        return {2, 3};
    if (name == "shrikhande")
        return {1, 3};
    if (name == "paley:13")
        return {2, 3};
    if (name == "paley:17")
        return {5, 8};
    if (name.rfind("bipartite:", 0) == 0) {
        int s = name[10] - '0';
        return {2, s}; // girth four, degree s
    }
    FAIL(("no expected value for " + name));
    return 0;
}

} // namespace

TEST_CASE("lazy curvature scales linearly on complete graphs") {
    Graph g = complete_graph(4);
    Rational slope(4, 3);
    for (Rational eps : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)})
        CHECK(kappa_eps(g, 0, 1, eps) == eps * slope);
    CHECK_THROWS_AS(kappa_eps(g, 0, 1, Rational(5, 4)), UnsupportedParameter);
    CHECK_THROWS_AS(kappa_eps(petersen_graph(), 0, 1, Rational(1, 2)), NotAnEdge);
}

TEST_CASE("condensed values on the closed-form family") {
    CHECK(condensed(complete_graph(2), 0, 1) == Rational(2));
    CHECK(condensed(cycle_graph(5), 0, 1) == Rational(1, 2));
    CHECK(condensed(petersen_graph(), 0, 7) == Rational(0));
    CHECK(condensed(rooks_graph(4), 0, 1) == Rational(2, 3));
    CHECK(condensed(shrikhande_graph(), 0, 1, /*verify_linearity=*/true) == Rational(1, 3));
    CHECK(condensed(cycle_graph(7), 0, 1) == Rational(0));
}

TEST_CASE("condensed is symmetric in the edge endpoints") {
    for (const auto& [name, g] : srg_corpus()) {
        CAPTURE(name);
        auto [x, y] = g.edges().front();
        CHECK(condensed(g, x, y) == condensed(g, y, x));
    }
}

TEST_CASE("condensed refuses irregular graphs but the limit handles them") {
    Graph path = build_graph(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(condensed(path, 0, 1), IrregularGraph);
    CHECK(condensed_limit(path, 0, 1) == Rational(1));
    CHECK(condensed_limit(path, 1, 2) == Rational(1));

    Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(condensed_limit(star, 0, 1) == condensed_limit(star, 0, 2));
}

TEST_CASE("the limit agrees with the half-step evaluation on regular graphs") {
    for (const auto& [name, g] : srg_corpus()) {
        if (g.vertex_count() > 20)
            continue;
        CAPTURE(name);
        auto [x, y] = g.edges().front();
        CHECK(condensed_limit(g, x, y) == condensed(g, x, y));
    }
}

TEST_CASE("matching formula closed forms") {
    CHECK(srg_formula({10, 3, 0, 1}, 0) == Rational(0));
    CHECK(srg_formula({16, 6, 2, 2}, 3) == Rational(2, 3));
    CHECK(srg_formula({16, 6, 2, 2}, 1) == Rational(1, 3));
    CHECK(srg_formula({50, 7, 0, 1}, 0) == Rational(-4, 7));
    CHECK_THROWS_AS(srg_formula({10, 3, 0, 1}, 3), InvalidMatchingSize);
    CHECK_THROWS_AS(srg_formula({10, 3, 0, 1}, -1), InvalidMatchingSize);
}

TEST_CASE("certified route agrees with the flow on every corpus edge") {
    for (const auto& [name, g] : srg_corpus()) {
        CAPTURE(name);
        Rational expected = expected_curvature(name);
        auto edges = g.edges();
        std::size_t sample = std::min<std::size_t>(edges.size(), 24);
        for (std::size_t i = 0; i < sample; ++i) {
            auto [x, y] = edges[i];
            auto report = srg_curvature_certified(g, x, y);
            CHECK(report.condensed == expected);
            CHECK(report.method == Method::Both);
            CHECK(report.certificate.gap_zero);
            CHECK(report.certificate.plan_cost == report.certificate.dual_value);
            CHECK(report.certificate.plan_cost == report.w1);
            REQUIRE(report.matching_size.has_value());
            CHECK(report.kappa_eps == Rational(1, 2) * expected);
        }
    }
}

TEST_CASE("certified route requires regular diameter-two graphs") {
    CHECK_THROWS_AS(srg_curvature_certified(cycle_graph(7), 0, 1), UnsupportedGraph);
    Graph path = build_graph(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(srg_curvature_certified(path, 0, 1), UnsupportedGraph);
    // Complete graphs are regular with diameter one; the route covers them.
    auto report = srg_curvature_certified(complete_graph(6), 0, 1);
    CHECK(report.condensed == Rational(6, 5));
}

TEST_CASE("edge report picks the certified route when available") {
    auto certified = edge_report(petersen_graph(), 0, 7);
    CHECK(certified.method == Method::Both);
    CHECK(certified.condensed == Rational(0));

    auto flow_only = edge_report(cycle_graph(7), 0, 1);
    CHECK(flow_only.method == Method::Flow);
    CHECK(flow_only.condensed == Rational(0));
    CHECK(flow_only.certificate.gap_zero);

    Graph path = build_graph(3, {{0, 1}, {1, 2}});
    auto irregular = edge_report(path, 0, 1);
    CHECK(irregular.method == Method::Flow);
    CHECK(irregular.condensed == Rational(1));
}

TEST_CASE("profile summarizes the whole graph") {
    auto profile = curvature_profile(petersen_graph());
    CHECK(profile.reports.size() == 15);
    CHECK(profile.summary.uniform);
    CHECK(profile.summary.min_value == Rational(0));
    CHECK(profile.summary.max_value == Rational(0));
    CHECK(profile.summary.mean_value == Rational(0));

    auto complete = curvature_profile(complete_graph(5));
    CHECK(complete.summary.uniform);
    CHECK(complete.summary.min_value == Rational(5, 4));

    Graph path = build_graph(3, {{0, 1}, {1, 2}});
    auto mixed = curvature_profile(path);
    CHECK(mixed.summary.uniform);
    CHECK(mixed.summary.mean_value == Rational(1));

    Graph split = build_graph(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(curvature_profile(split), Disconnected);
}

TEST_CASE("profile is reproducible under a thread budget") {
    Graph g = shrikhande_graph();
    auto single = curvature_profile(g);
    setenv("RICCI_THREADS", "4", 1);
    auto threaded = curvature_profile(g);
    unsetenv("RICCI_THREADS");
    REQUIRE(single.reports.size() == threaded.reports.size());
    for (std::size_t i = 0; i < single.reports.size(); ++i) {
        CHECK(single.reports[i].u == threaded.reports[i].u);
        CHECK(single.reports[i].v == threaded.reports[i].v);
        CHECK(single.reports[i].condensed == threaded.reports[i].condensed);
    }
}

TEST_CASE("rigidity separates complete graphs by the unit threshold") {
    for (int n = 2; n <= 7; ++n) {
        auto r = rigidity_check(complete_graph(n));
        CHECK(r.is_complete);
        REQUIRE(r.min_edge_curvature.has_value());
        CHECK(*r.min_edge_curvature == Rational(n, n - 1));
        CHECK(*r.min_edge_curvature > Rational(1));
        CHECK(r.consistent);
    }
    auto near = rigidity_check(build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    CHECK_FALSE(near.is_complete);
    REQUIRE(near.min_edge_curvature.has_value());
    CHECK(*near.min_edge_curvature <= Rational(1));
    CHECK(near.consistent);

    auto tiny = rigidity_check(complete_graph(1));
    CHECK(tiny.is_complete);
    CHECK_FALSE(tiny.min_edge_curvature.has_value());
    CHECK(tiny.consistent);
}

TEST_CASE("short cycles fix the curvature of triangle-free strongly regular graphs") {
    CHECK(girth_special_cases(complete_bipartite_graph(3, 3)) == Rational(2, 3));
    CHECK(girth_special_cases(petersen_graph()) == Rational(0));
    CHECK(girth_special_cases(cycle_graph(5)) == Rational(1, 2));
    CHECK(girth_special_cases(hoffman_singleton_graph()) == Rational(-4, 7));
    CHECK_FALSE(girth_special_cases(paley_graph(13)).has_value());
    CHECK_FALSE(girth_special_cases(rooks_graph(4)).has_value());
    CHECK_FALSE(girth_special_cases(complete_graph(5)).has_value());
}

TEST_CASE("quadratic residue scan confirms the predicted value") {
    auto rows = conjecture_scan({13, 17});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].q == 13);
    CHECK(rows[0].perfect_matching_everywhere);
    CHECK(rows[0].uniform);
    CHECK(rows[0].curvature == Rational(2, 3));
    CHECK(rows[0].conjectured == Rational(2, 3));
    CHECK(rows[0].agrees);
    CHECK(rows[1].curvature == Rational(5, 8));
    CHECK(rows[1].agrees);
    CHECK_THROWS_AS(conjecture_scan({9}), UnsupportedParameter);
    CHECK_THROWS_AS(conjecture_scan({19}), UnsupportedParameter);
    CHECK_THROWS_AS(conjecture_scan({21}), UnsupportedParameter);
}
