#include "nervekit/chain.hpp"
#include "nervekit/field.hpp"
#include "nervekit/generators.hpp"
#include "nervekit/sparse_matrix.hpp"

#include <doctest.h>

#include <random>

using namespace nervekit;

TEST_CASE("field parsing and arithmetic") {
    FieldSpec f2 = FieldSpec::parse("f2");
    FieldSpec f5 = FieldSpec::parse("f5");
    FieldSpec q = FieldSpec::parse("q");
    CHECK(f2.characteristic() == 2);
    CHECK(f5.characteristic() == 5);
    CHECK(q.characteristic() == 0);
    CHECK(q.name() == "q");
    CHECK_THROWS_AS(FieldSpec::parse("f4"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("banana"), std::invalid_argument);

    CHECK(f2.add(f2.one(), f2.one()) == f2.zero());
    CHECK(f5.mul(f5.from_int(3), f5.from_int(4)) == f5.from_int(12));
    CHECK(f5.from_int(12) == f5.from_int(2));
    CHECK(f5.from_int(-1) == f5.from_int(4));
    CHECK(q.div(q.from_int(1), q.from_int(3)) == FieldScalar(Rational(1, 3)));
    CHECK_THROWS_AS(q.inv(q.zero()), std::domain_error);

    // every nonzero element of F5 has a multiplicative inverse
    for (int a = 1; a < 5; ++a)
        CHECK(f5.mul(f5.from_int(a), f5.inv(f5.from_int(a))) == f5.one());
}

namespace {

SparseMatrix identity(int n, const FieldSpec& field) {
    SparseMatrix M(n, n);
    for (int i = 0; i < n; ++i) M.set(i, i, field.one(), field);
    return M;
}

}  // namespace

TEST_CASE("rank on the stated examples") {
    FieldSpec f2 = FieldSpec::f2();
    FieldSpec q = FieldSpec::rationals();

    SimplicialComplex circle = SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}});
    SparseMatrix d1 = boundary_matrix(circle, 1, f2, false);
    CHECK(d1.rows() == 3);
    CHECK(d1.cols() == 3);
    CHECK(rank(d1, f2) == 2);  // one cycle

    SparseMatrix zero(4, 6);
    CHECK(rank(zero, q) == 0);

    CHECK(rank(identity(7, q), q) == 7);
}

TEST_CASE("solve on the stated examples") {
    FieldSpec q = FieldSpec::rationals();
    SimplicialComplex triangle = SimplicialComplex::from_facets({{0, 1, 2}});

    // the oriented boundary circle fills with a unit coefficient on the triangle
    Chain t = unit_chain(Simplex{0, 1, 2}, q);
    Chain b = boundary(t, q);
    SparseMatrix d2 = boundary_matrix(triangle, 2, q, false);
    auto x = solve(d2, chain_to_vector(triangle, b, q), q);
    REQUIRE(x.has_value());
    REQUIRE(x->size() == 1);
    CHECK((*x)[0] == q.one());

    // b = 0 gives x = 0
    auto x0 = solve(d2, std::vector<FieldScalar>(static_cast<std::size_t>(d2.rows()), q.zero()), q);
    REQUIRE(x0.has_value());
    for (const auto& v : *x0) CHECK(q.is_zero(v));

    // empty column space: only the zero vector is reachable
    SparseMatrix none(2, 0);
    std::vector<FieldScalar> rhs{q.one(), q.zero()};
    CHECK_FALSE(solve(none, rhs, q).has_value());
    CHECK_THROWS_AS(solve(none, std::vector<FieldScalar>{q.one()}, q), std::invalid_argument);
}

TEST_CASE("nullspace dimensions") {
    FieldSpec q = FieldSpec::rationals();
    SimplicialComplex circle = SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}});
    CHECK(nullspace_dim(boundary_matrix(circle, 1, q, false), q) == 1);
    CHECK(nullspace_dim(identity(5, q), q) == 0);
    CHECK(nullspace_dim(SparseMatrix(2, 5), q) == 5);
}

TEST_CASE("elimination invariants on random integer matrices") {
    std::mt19937_64 rng(42);
    const std::vector<FieldSpec> fields{FieldSpec::f2(), FieldSpec::fp(3), FieldSpec::fp(5),
                                        FieldSpec::rationals()};
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 8);
        int cols = 1 + static_cast<int>(rng() % 8);
        std::vector<std::vector<int>> entries(static_cast<std::size_t>(rows),
                                              std::vector<int>(static_cast<std::size_t>(cols), 0));
        for (auto& row : entries)
            for (auto& v : row) v = static_cast<int>(rng() % 7) - 3;

        std::vector<int> ranks;
        for (const FieldSpec& field : fields) {
            SparseMatrix M(rows, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j)
                    M.set(i, j, field.from_int(entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]),
                          field);
            int r = rank(M, field);
            CHECK(r == rank(M.transpose(), field));
            ranks.push_back(r);

            // solve-then-multiply round trip against a consistent system
            std::vector<FieldScalar> target(static_cast<std::size_t>(cols), field.zero());
            for (auto& v : target) v = field.from_int(static_cast<int>(rng() % 5) - 2);
            std::vector<FieldScalar> b = M.apply(target, field);
            auto x = solve(M, b, field);
            REQUIRE(x.has_value());
            std::vector<FieldScalar> back = M.apply(*x, field);
            for (std::size_t i = 0; i < b.size(); ++i) CHECK(back[i] == b[i]);
        }
        // rank over Q bounds the rank over every prime field
        for (std::size_t f = 0; f + 1 < fields.size(); ++f) CHECK(ranks.back() >= ranks[f]);
    }
}

TEST_CASE("determinism of solve across identical runs") {
    FieldSpec f3 = FieldSpec::fp(3);
    SparseMatrix M(3, 5);
    int k = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) M.set(i, j, f3.from_int(++k % 3), f3);
    std::vector<FieldScalar> b{f3.from_int(1), f3.from_int(2), f3.from_int(0)};
    auto x1 = solve(M, b, f3);
    auto x2 = solve(M, b, f3);
    REQUIRE(x1.has_value());
    CHECK(*x1 == *x2);
}
