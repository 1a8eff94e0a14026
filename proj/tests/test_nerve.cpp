#include "nervekit/generators.hpp"
#include "nervekit/homology.hpp"
#include "nervekit/nerve_checks.hpp"

#include <doctest.h>

using namespace nervekit;

namespace {

// hexagon circle with three arcs of two edges each, pairwise meeting in a
// point, empty triple intersection
Cover three_arc_circle() {
    SimplicialComplex hexagon =
        SimplicialComplex::from_facets({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    std::vector<SimplicialComplex> arcs;
    arcs.push_back(SimplicialComplex::from_facets({{0, 1}, {1, 2}}));
    arcs.push_back(SimplicialComplex::from_facets({{2, 3}, {3, 4}}));
    arcs.push_back(SimplicialComplex::from_facets({{4, 5}, {0, 5}}));
    return Cover::make(hexagon, std::move(arcs));
}

}  // namespace

TEST_CASE("nerve on the stated examples") {
    SimplicialComplex path = SimplicialComplex::from_facets({{0, 1}, {1, 2}});
    Cover two_edges = Cover::make(path, {SimplicialComplex::from_facets({{0, 1}}),
                                         SimplicialComplex::from_facets({{1, 2}})});
    CHECK(nerve(two_edges) == SimplicialComplex::from_facets({{0, 1}}));

    CHECK(nerve(three_arc_circle()) == simplex_boundary(2));

    SimplicialComplex edge = SimplicialComplex::from_facets({{0, 1}});
    Cover doubled = Cover::make(edge, {edge, edge});
    CHECK(nerve(doubled) == SimplicialComplex::from_facets({{0, 1}}));

    Cover with_empty = Cover::make(edge, {edge, SimplicialComplex()});
    CHECK_THROWS_AS(nerve(with_empty), std::invalid_argument);

    // vertex count equals the member count for nonempty members
    Cover cover = random_cover(random_complex(6, 2, 0.6, 5), 4, 6);
    CHECK(nerve(cover).simplices_of_dim(0).size() == cover.size());
    CHECK(nerve(cover).is_downward_closed());
}

TEST_CASE("member cap on the nerve is enforced but adjustable") {
    SimplicialComplex edge = SimplicialComplex::from_facets({{0, 1}});
    std::vector<SimplicialComplex> many(13, edge);
    Cover cover = Cover::make(edge, std::move(many));
    CHECK_THROWS_AS(nerve(cover), std::invalid_argument);
    CHECK(nerve(cover, 16).simplices_of_dim(0).size() == 13);
}

TEST_CASE("mixed hypotheses on the three-arc circle") {
    Cover cover = three_arc_circle();
    FieldSpec q = FieldSpec::rationals();

    // k = l = 1: connected members and nonempty pairwise intersections
    MixedHypotheses at_one = check_mixed_hypotheses(cover, 1, 1, q);
    CHECK(at_one.inter.all_pass);
    CHECK(at_one.uni.all_pass);
    CHECK(at_one.inter.non_vacuous());

    // k = -1, l = 1: unions of pairs and singletons
    MixedHypotheses unions = check_mixed_hypotheses(cover, -1, 1, q);
    CHECK(unions.inter.entries.empty());
    CHECK(unions.uni.all_pass);
    CHECK(unions.uni.non_vacuous());

    MixedConclusion conclusion = verify_mixed_conclusion(cover, 1, q);
    CHECK(conclusion.betti_nerve == 1);
    CHECK(conclusion.betti_host == 1);
    CHECK(conclusion.holds);

    CHECK_THROWS_AS(check_mixed_hypotheses(cover, 2, 1, q), std::invalid_argument);
    CHECK_THROWS_AS(check_mixed_hypotheses(cover, -1, 3, q), std::invalid_argument);
}

TEST_CASE("covering the host is required") {
    SimplicialComplex path = SimplicialComplex::from_facets({{0, 1}, {1, 2}});
    Cover partial = Cover::make(path, {SimplicialComplex::from_facets({{0, 1}})});
    CHECK_THROWS_AS(check_mixed_hypotheses(partial, -1, 0, FieldSpec::f2()), std::invalid_argument);
    CHECK_THROWS_AS(verify_mixed_conclusion(partial, 0, FieldSpec::f2()), std::invalid_argument);
}

TEST_CASE("union condition at singletons only asserts nonemptiness") {
    // two disjoint edges covering their union: |sigma| = 1 tests degree -1,
    // which passes for nonempty members; the failure shows up at the pair
    SimplicialComplex two = SimplicialComplex::from_facets({{0, 1}, {2, 3}});
    Cover cover = Cover::make(two, {SimplicialComplex::from_facets({{0, 1}}),
                                    SimplicialComplex::from_facets({{2, 3}})});
    MixedHypotheses hyp = check_mixed_hypotheses(cover, -1, 0, FieldSpec::f2());
    CHECK(hyp.uni.all_pass);  // only singletons are tested at l = 0
    for (const auto& entry : hyp.uni.entries) CHECK(entry.degree == -1);
}

TEST_CASE("helly on the stated examples") {
    FieldSpec q = FieldSpec::rationals();

    // three subtrees of a path, pairwise intersecting
    SimplicialComplex path = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {2, 3}});
    Cover subtrees = Cover::make(path, {SimplicialComplex::from_facets({{0, 1}, {1, 2}}),
                                        SimplicialComplex::from_facets({{1, 2}, {2, 3}}),
                                        SimplicialComplex::from_facets({{1, 2}})});
    HellyReport trees = helly_check(subtrees, 0, q);
    CHECK(trees.hypotheses_pass);
    CHECK(trees.intersection_nonempty);
    CHECK_FALSE(trees.theorem_violation);

    // the three edges of a hollow triangle: the full-collection union
    // condition fails, so the empty intersection does not contradict anything
    SimplicialComplex circle = SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}});
    Cover edges = Cover::make(circle, {SimplicialComplex::from_facets({{0, 1}}),
                                       SimplicialComplex::from_facets({{1, 2}}),
                                       SimplicialComplex::from_facets({{0, 2}})});
    HellyReport rim = helly_check(edges, -1, q);
    CHECK_FALSE(rim.hypotheses_pass);
    CHECK_FALSE(rim.intersection_nonempty);
    CHECK_FALSE(rim.theorem_violation);
    int failing = 0;
    for (const auto& e : rim.uni.entries)
        if (!e.pass) {
            ++failing;
            CHECK(e.subset == std::vector<int>{0, 1, 2});
            CHECK(e.degree == 1);
            CHECK(e.observed == 1);
        }
    CHECK(failing == 1);

    // two disjoint vertices: the pair union is disconnected
    SimplicialComplex points = SimplicialComplex::from_facets({{0}, {1}});
    Cover disjoint = Cover::make(points, {SimplicialComplex::from_facets({{0}}),
                                          SimplicialComplex::from_facets({{1}})});
    HellyReport pair = helly_check(disjoint, -1, q);
    CHECK_FALSE(pair.hypotheses_pass);
    CHECK_FALSE(pair.intersection_nonempty);

    CHECK_THROWS_AS(helly_check(disjoint, 1, q), std::invalid_argument);
}

TEST_CASE("embedded presets restrict the tested subcollections") {
    Cover cover = three_arc_circle();
    HellyOptions options;
    options.max_subset_size = 2;  // embedded in R^1: subcollections up to size 2
    HellyReport restricted = helly_check(cover, -1, FieldSpec::rationals(), options);
    for (const auto& e : restricted.uni.entries) CHECK(e.subset.size() <= 2);
    // the full-collection condition that fails unrestricted is not tested here
    CHECK(restricted.hypotheses_pass);
    // no violation is claimed: the circle is not embeddable in R^1, and the
    // presets only report under the caller's embedding assumption
    CHECK(restricted.theorem_violation);
}
