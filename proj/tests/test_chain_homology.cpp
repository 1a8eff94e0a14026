#include "nervekit/chain.hpp"
#include "nervekit/generators.hpp"
#include "nervekit/homology.hpp"
#include "oracle_snf.hpp"

#include <doctest.h>

#include <random>

using namespace nervekit;

TEST_CASE("boundary on the stated examples") {
    FieldSpec q = FieldSpec::rationals();
    Chain t = unit_chain(Simplex{0, 1, 2}, q);
    Chain b = boundary(t, q);
    CHECK(b.coefficient(Simplex{1, 2}, q) == q.one());
    CHECK(b.coefficient(Simplex{0, 2}, q) == q.neg(q.one()));
    CHECK(b.coefficient(Simplex{0, 1}, q) == q.one());
    CHECK(boundary(b, q).is_zero());

    // two triangles glued on a diagonal over F2: the interior edge cancels
    FieldSpec f2 = FieldSpec::f2();
    Chain square(2);
    square.add_term(Simplex{0, 1, 2}, f2.one(), f2);
    square.add_term(Simplex{0, 2, 3}, f2.one(), f2);
    Chain outer = boundary(square, f2);
    CHECK(outer.support_size() == 4);
    CHECK(f2.is_zero(outer.coefficient(Simplex{0, 2}, f2)));
}

TEST_CASE("boundary matrices on the stated examples") {
    FieldSpec q = FieldSpec::rationals();
    SimplicialComplex circle = SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}});
    SparseMatrix d1 = boundary_matrix(circle, 1, q, false);
    CHECK(d1.rows() == 3);
    CHECK(d1.cols() == 3);
    for (int c = 0; c < 3; ++c) {
        int nnz = 0;
        for (int r = 0; r < 3; ++r)
            if (!q.is_zero(d1.get(r, c, q))) ++nnz;
        CHECK(nnz == 2);
    }

    SimplicialComplex points = SimplicialComplex::from_facets({{0}, {1}, {2}, {3}});
    SparseMatrix aug = boundary_matrix(points, 0, q, true);
    CHECK(aug.rows() == 1);
    CHECK(aug.cols() == 4);
    CHECK(aug.nnz() == 4);

    SimplicialComplex triangle = SimplicialComplex::from_facets({{0, 1, 2}});
    SparseMatrix d2 = boundary_matrix(triangle, 2, q, false);
    CHECK(d2.rows() == 3);
    CHECK(d2.cols() == 1);

    CHECK_THROWS_AS(boundary_matrix(triangle, 3, q, false), std::invalid_argument);
    CHECK_THROWS_AS(boundary_matrix(triangle, -1, q, false), std::invalid_argument);
}

TEST_CASE("reduced Betti numbers on the stated examples") {
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f2 = FieldSpec::f2();
    FieldSpec f3 = FieldSpec::fp(3);

    SimplicialComplex circle = SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}});
    BettiVector bc = reduced_betti(circle, q);
    CHECK(bc.betti(-1) == 0);
    CHECK(bc.betti(0) == 0);
    CHECK(bc.betti(1) == 1);

    // field-sensitive fixtures, pinned against the independent oracle
    SimplicialComplex rp2 = rp2_6();
    BettiVector rp2_f2 = reduced_betti(rp2, f2);
    CHECK(rp2_f2.betti(1) == 1);
    CHECK(rp2_f2.betti(2) == 1);
    CHECK(rp2_f2 == testing::oracle_reduced_betti(rp2, f2));
    BettiVector rp2_q = reduced_betti(rp2, q);
    CHECK(rp2_q.betti(1) == 0);
    CHECK(rp2_q.betti(2) == 0);
    CHECK(rp2_q == testing::oracle_reduced_betti(rp2, q));

    SimplicialComplex t7 = torus7();
    BettiVector t7_f2 = reduced_betti(t7, f2);
    CHECK(t7_f2.betti(1) == 2);
    CHECK(t7_f2.betti(2) == 1);
    CHECK(t7_f2 == testing::oracle_reduced_betti(t7, f2));

    // the empty complex carries exactly the degree -1 convention
    BettiVector empty = reduced_betti(SimplicialComplex(), f3);
    CHECK(empty.betti(-1) == 1);
    CHECK(empty.betti(0) == 0);
}

TEST_CASE("fill on the stated examples") {
    FieldSpec q = FieldSpec::rationals();
    SimplicialComplex triangle = SimplicialComplex::from_facets({{0, 1, 2}});
    Chain rim = boundary(unit_chain(Simplex{0, 1, 2}, q), q);
    auto c = fill(triangle, rim, q);
    REQUIRE(c.has_value());
    CHECK(*c == unit_chain(Simplex{0, 1, 2}, q));

    SimplicialComplex circle = SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}});
    CHECK_FALSE(fill(circle, rim, q).has_value());

    auto zero = fill(circle, Chain(1), q);
    REQUIRE(zero.has_value());
    CHECK(zero->is_zero());

    Chain not_cycle = unit_chain(Simplex{0, 1}, q);
    CHECK_THROWS_AS(fill(circle, not_cycle, q), std::invalid_argument);
}

TEST_CASE("fundamental classes on the stated examples") {
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f2 = FieldSpec::f2();

    auto sphere = fundamental_class(simplex_boundary(3), q);
    REQUIRE(sphere.has_value());
    CHECK(sphere->support_size() == 4);
    for (const auto& [s, v] : sphere->terms())
        CHECK((v == q.one() || v == q.neg(q.one())));
    CHECK(is_cycle(*sphere, q));

    auto torus_class = fundamental_class(torus7(), f2);
    REQUIRE(torus_class.has_value());
    CHECK(torus_class->support_size() == 14);
    for (const auto& [s, v] : torus_class->terms()) CHECK(v == f2.one());
    CHECK(is_cycle(*torus_class, f2));

    CHECK_FALSE(fundamental_class(rp2_6(), q).has_value());          // non-orientable
    CHECK(fundamental_class(rp2_6(), f2).has_value());               // all-ones works mod 2
    CHECK_FALSE(fundamental_class(rp2_6(), FieldSpec::fp(3)).has_value());

    CHECK_THROWS_AS(fundamental_class(SimplicialComplex::from_facets({{0, 1}, {1, 2}}), q),
                    std::invalid_argument);
}

TEST_CASE("chain and homology invariants on random complexes") {
    std::mt19937_64 rng(99);
    const std::vector<FieldSpec> fields{FieldSpec::f2(), FieldSpec::fp(3), FieldSpec::fp(5),
                                        FieldSpec::rationals()};
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        SimplicialComplex X = random_complex(n, std::min(2, n - 1), 0.5, rng());
        const FieldSpec& field = fields[trial % fields.size()];

        // d d = 0 on a random chain of each dimension
        for (int d = 1; d <= X.dim(); ++d) {
            Chain c(d);
            for (const Simplex& s : X.simplices_of_dim(d))
                c.add_term(s, field.from_int(static_cast<int>(rng() % 5) - 2), field);
            CHECK(boundary(boundary(c, field), field).is_zero());
        }

        // reduced Euler-Poincare: alternating Betti sum = chi - 1
        BettiVector betti = reduced_betti(X, field);
        long alternating = 0;
        for (int i = 0; i <= betti.max_degree(); ++i)
            alternating += (i % 2 == 0 ? betti.betti(i) : -betti.betti(i));
        CHECK(alternating == X.euler_characteristic() - 1);

        // filling a boundary always succeeds and closes the loop
        if (X.dim() >= 1) {
            Chain c(X.dim());
            for (const Simplex& s : X.simplices_of_dim(X.dim()))
                c.add_term(s, field.from_int(static_cast<int>(rng() % 3) - 1), field);
            Chain b = boundary(c, field);
            auto filled = fill(X, b, field);
            REQUIRE(filled.has_value());
            CHECK(boundary(*filled, field) == b);
        }

        // a cone has vanishing reduced homology everywhere
        std::vector<std::vector<VertexId>> cone_facets;
        VertexId apex = n + 1;
        for (const Simplex& f : X.facets()) {
            std::vector<VertexId> vs = f.vertices();
            vs.push_back(apex);
            cone_facets.push_back(vs);
        }
        if (!cone_facets.empty()) {
            BettiVector cone_betti = reduced_betti(SimplicialComplex::from_facets(cone_facets), field);
            CHECK(cone_betti.all_zero());
        }
    }
}

TEST_CASE("reduced Betti agrees with the Smith-form oracle on random complexes") {
    std::mt19937_64 rng(2718);
    const std::vector<FieldSpec> primes{FieldSpec::f2(), FieldSpec::fp(3), FieldSpec::fp(5)};
    FieldSpec q = FieldSpec::rationals();
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);  // up to 8 vertices
        int d = 1 + static_cast<int>(rng() % 2);
        if (d > n - 1) d = n - 1;
        double p = static_cast<double>(rng() % 100) / 100.0;
        SimplicialComplex X = random_complex(n, d, p, rng());

        const FieldSpec& fp = primes[trial % primes.size()];
        CHECK(reduced_betti(X, fp) == testing::oracle_reduced_betti(X, fp));
        CHECK(reduced_betti(X, q) == testing::oracle_reduced_betti(X, q));
    }
}
