#pragma once

#include "nervekit/simplex.hpp"

#include <map>

namespace nervekit {

/// Barycentric subdivision of a complex. Vertices of the subdivision are the
/// simplices of the base complex, assigned fresh ids 0..N-1 in lexicographic
/// order of their source simplices; the simplices of the subdivision are the
/// strictly increasing inclusion chains.
struct Subdivision {
    SimplicialComplex complex;
    std::vector<Simplex> source;        // new vertex id -> source simplex of the base
    std::map<Simplex, VertexId> id_of;  // inverse of source

    /// Subdivision simplex for a chain of base simplices (each pair nested).
    Simplex chain_simplex(const std::vector<Simplex>& chain) const;
};

/// Throws std::invalid_argument on the empty complex.
Subdivision barycentric_subdivision(const SimplicialComplex& X);

}  // namespace nervekit
