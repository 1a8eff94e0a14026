#include "nervekit/batch.hpp"
#include "nervekit/generators.hpp"

#include <doctest.h>

using namespace nervekit;

TEST_CASE("parallel batch agrees with the serial reference") {
    std::vector<SimplicialComplex> batch;
    for (int t = 0; t < 60; ++t) {
        int n = 3 + static_cast<int>(derive_seed(5, static_cast<std::uint64_t>(t)) % 6);
        batch.push_back(random_complex(n, std::min(2, n - 1), 0.5, derive_seed(17, static_cast<std::uint64_t>(t))));
    }
    batch.push_back(SimplicialComplex());  // the empty complex rides along

    for (const FieldSpec& field : {FieldSpec::f2(), FieldSpec::rationals()}) {
        std::vector<BettiVector> serial = reduced_betti_batch(batch, field, ExecMode::Serial);
        std::vector<BettiVector> parallel = reduced_betti_batch(batch, field, ExecMode::Parallel);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
    }
}

TEST_CASE("default mode reflects the build configuration") {
    if (parallel_available())
        CHECK(default_exec_mode() == ExecMode::Parallel);
    else
        CHECK(default_exec_mode() == ExecMode::Serial);
}
