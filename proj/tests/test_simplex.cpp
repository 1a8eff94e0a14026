#include "nervekit/generators.hpp"
#include "nervekit/simplex.hpp"
#include "nervekit/subdivision.hpp"

#include <doctest.h>

#include <random>

using namespace nervekit;

TEST_CASE("simplex basics") {
    Simplex s({2, 0, 1});
    CHECK(s.vertices() == std::vector<VertexId>{0, 1, 2});
    CHECK(s.dim() == 2);
    CHECK(Simplex({3, 3, 3}).dim() == 0);  // duplicate entries collapse
    CHECK_THROWS_AS(Simplex(std::vector<VertexId>{}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex({-1}), std::invalid_argument);
    CHECK(Simplex{0, 2}.is_face_of(Simplex{0, 1, 2}));
    CHECK_FALSE(Simplex{0, 3}.is_face_of(Simplex{0, 1, 2}));
}

TEST_CASE("from_facets on the stated examples") {
    SimplicialComplex circle = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
    CHECK(circle.simplices_of_dim(0).size() == 3);
    CHECK(circle.simplices_of_dim(1).size() == 3);
    CHECK(circle.dim() == 1);

    SimplicialComplex triangle = SimplicialComplex::from_facets({{0, 1, 2}});
    CHECK(triangle.size() == 7);  // 3 + 3 + 1

    SimplicialComplex point = SimplicialComplex::from_facets({{0}, {0}});
    CHECK(point.size() == 1);
    CHECK(point.facets().size() == 1);

    CHECK_THROWS_AS(SimplicialComplex::from_facets({{}}), std::invalid_argument);
}

TEST_CASE("skeleton, induced, union, intersection, link examples") {
    SimplicialComplex triangle = SimplicialComplex::from_facets({{0, 1, 2}});
    CHECK(skeleton(triangle, 0).size() == 3);
    CHECK(skeleton(triangle, 1).size() == 6);
    CHECK(skeleton(triangle, -1).empty());

    SimplicialComplex circle = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
    SimplicialComplex edge01 = induced(circle, {0, 1});
    CHECK(edge01.size() == 3);  // one edge plus endpoints
    CHECK(induced(circle, {}).empty());
    CHECK(induced(circle, {0, 1, 2}) == circle);

    SimplicialComplex a = SimplicialComplex::from_facets({{0, 1}});
    SimplicialComplex b = SimplicialComplex::from_facets({{1, 2}});
    CHECK(complex_union(a, b) == SimplicialComplex::from_facets({{0, 1}, {1, 2}}));
    CHECK(complex_intersection(a, b) == SimplicialComplex::from_facets({{1}}));
    CHECK(complex_intersection(a, SimplicialComplex::from_facets({{2, 3}})).empty());

    // cone apex over the circle links back to the circle
    SimplicialComplex cone = SimplicialComplex::from_facets({{0, 1, 9}, {1, 2, 9}, {0, 2, 9}});
    CHECK(link(cone, 9) == circle);
    CHECK(link(SimplicialComplex::from_facets({{4, 7}}), 4) == SimplicialComplex::from_facets({{7}}));
    CHECK(link(SimplicialComplex::from_facets({{3}}), 3).empty());
    CHECK_THROWS_AS(link(circle, 99), std::invalid_argument);
}

TEST_CASE("barycentric subdivision examples") {
    SimplicialComplex edge = SimplicialComplex::from_facets({{0, 1}});
    Subdivision sd_edge = barycentric_subdivision(edge);
    CHECK(sd_edge.complex.simplices_of_dim(0).size() == 3);
    CHECK(sd_edge.complex.simplices_of_dim(1).size() == 2);

    SimplicialComplex triangle = SimplicialComplex::from_facets({{0, 1, 2}});
    Subdivision sd_triangle = barycentric_subdivision(triangle);
    CHECK(sd_triangle.complex.simplices_of_dim(0).size() == 7);
    CHECK(sd_triangle.complex.simplices_of_dim(2).size() == 6);

    SimplicialComplex circle = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
    Subdivision sd_circle = barycentric_subdivision(circle);
    CHECK(sd_circle.complex.simplices_of_dim(0).size() == 6);
    CHECK(sd_circle.complex.simplices_of_dim(1).size() == 6);

    CHECK_THROWS_AS(barycentric_subdivision(SimplicialComplex()), std::invalid_argument);

    // subdivision vertex ids follow the lexicographic order of their sources
    for (std::size_t i = 0; i + 1 < sd_circle.source.size(); ++i)
        CHECK(sd_circle.source[i] < sd_circle.source[i + 1]);
}

TEST_CASE("complex operation properties on random instances") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        SimplicialComplex X = random_complex(3 + static_cast<int>(rng() % 5), 2, 0.6, rng());
        CHECK(X.is_downward_closed());

        // induced composes through vertex-set intersection
        std::set<VertexId> u, w;
        for (VertexId v : X.vertices()) {
            if (rng() % 2) u.insert(v);
            if (rng() % 2) w.insert(v);
        }
        std::set<VertexId> uw;
        for (VertexId v : u)
            if (w.count(v)) uw.insert(v);
        CHECK(induced(induced(X, u), w) == induced(X, uw));

        // skeleton composes through the minimum
        int a = static_cast<int>(rng() % 4) - 1, b = static_cast<int>(rng() % 4) - 1;
        CHECK(skeleton(skeleton(X, a), b) == skeleton(X, std::min(a, b)));

        // union/intersection are commutative, associative, idempotent
        SimplicialComplex Y = random_complex(3 + static_cast<int>(rng() % 5), 2, 0.5, rng());
        SimplicialComplex Z = random_complex(3 + static_cast<int>(rng() % 4), 1, 0.7, rng());
        CHECK(complex_union(X, Y) == complex_union(Y, X));
        CHECK(complex_intersection(X, Y) == complex_intersection(Y, X));
        CHECK(complex_union(X, complex_union(Y, Z)) == complex_union(complex_union(X, Y), Z));
        CHECK(complex_intersection(X, complex_intersection(Y, Z)) ==
              complex_intersection(complex_intersection(X, Y), Z));
        CHECK(complex_union(X, X) == X);
        CHECK(complex_intersection(X, X) == X);

        // subdivision preserves the Euler characteristic
        if (!X.empty()) {
            Subdivision sd = barycentric_subdivision(X);
            CHECK(sd.complex.euler_characteristic() == X.euler_characteristic());
            CHECK(sd.complex.is_downward_closed());
        }
    }
}
