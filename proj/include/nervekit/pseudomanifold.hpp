#pragma once

#include "nervekit/simplex.hpp"

namespace nervekit {

/// Result of the pseudomanifold validation: pure, non-branching (each ridge
/// in exactly two facets), strongly connected (dual graph over shared ridges
/// connected).
struct PseudomanifoldReport {
    bool pure = false;
    bool non_branching = false;
    bool strongly_connected = false;
    int dimension = -1;

    bool is_pseudomanifold() const { return pure && non_branching && strongly_connected; }
};

/// Throws std::invalid_argument on the empty complex. For dimension 0 the
/// empty set acts as the ridge shared by all facets, so a 0-dimensional
/// pseudomanifold is exactly a pair of points.
PseudomanifoldReport check_pseudomanifold(const SimplicialComplex& M);

}  // namespace nervekit
