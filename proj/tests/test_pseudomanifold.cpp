#include "nervekit/generators.hpp"
#include "nervekit/pseudomanifold.hpp"

#include <doctest.h>

using namespace nervekit;

TEST_CASE("pseudomanifold reports on the stated examples") {
    PseudomanifoldReport sphere = check_pseudomanifold(simplex_boundary(3));
    CHECK(sphere.pure);
    CHECK(sphere.non_branching);
    CHECK(sphere.strongly_connected);
    CHECK(sphere.dimension == 2);
    CHECK(sphere.is_pseudomanifold());

    // three triangles on a shared edge branch
    PseudomanifoldReport branching =
        check_pseudomanifold(SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}));
    CHECK_FALSE(branching.non_branching);
    CHECK_FALSE(branching.is_pseudomanifold());

    PseudomanifoldReport split =
        check_pseudomanifold(SimplicialComplex::from_facets({{0, 1, 2}, {3, 4, 5}}));
    CHECK_FALSE(split.strongly_connected);
    CHECK_FALSE(split.is_pseudomanifold());

    CHECK_THROWS_AS(check_pseudomanifold(SimplicialComplex()), std::invalid_argument);
}

TEST_CASE("dimension zero follows the two-point convention") {
    CHECK(check_pseudomanifold(simplex_boundary(1)).is_pseudomanifold());
    CHECK_FALSE(check_pseudomanifold(SimplicialComplex::from_facets({{0}})).is_pseudomanifold());
    CHECK_FALSE(check_pseudomanifold(SimplicialComplex::from_facets({{0}, {1}, {2}})).is_pseudomanifold());
}

TEST_CASE("mixed-dimension complexes are impure") {
    PseudomanifoldReport impure =
        check_pseudomanifold(SimplicialComplex::from_facets({{0, 1, 2}, {2, 3}}));
    CHECK_FALSE(impure.pure);
    CHECK_FALSE(impure.is_pseudomanifold());
}

TEST_CASE("the standard fixtures are pseudomanifolds") {
    CHECK(check_pseudomanifold(torus7()).is_pseudomanifold());
    CHECK(check_pseudomanifold(rp2_6()).is_pseudomanifold());
    CHECK(check_pseudomanifold(banded_torus(3, 3, {1, 1, 1}).complex()).is_pseudomanifold());
    CHECK(check_pseudomanifold(simplex_boundary(2)).is_pseudomanifold());
}
