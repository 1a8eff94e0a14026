#pragma once

#include "nervekit/simplex.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace nervekit {

/// Colour subsets of {0..m} are carried as bit masks (m is small).
using ColourMask = std::uint32_t;

/// A simplicial complex whose vertices are partitioned into colour classes
/// 0..m. Classes may be empty at the type level; operations that need them
/// nonempty check for themselves.
class ColouredComplex {
public:
    /// Builds from explicit classes; throws std::invalid_argument unless the
    /// classes partition the vertex set exactly (no overlap, no uncoloured
    /// vertex) and m >= 0.
    static ColouredComplex make(SimplicialComplex complex, std::vector<std::vector<VertexId>> classes);

    const SimplicialComplex& complex() const { return complex_; }
    int num_colours() const { return static_cast<int>(classes_.size()); }  // m + 1
    int max_colour() const { return num_colours() - 1; }                   // m
    int colour_of(VertexId v) const;                                       // throws on unknown vertex
    const std::vector<VertexId>& colour_class(int colour) const;

    ColourMask colour_set(const Simplex& s) const;
    std::vector<VertexId> vertices_with_colours(ColourMask colours) const;

private:
    SimplicialComplex complex_;
    std::vector<std::vector<VertexId>> classes_;
    std::map<VertexId, int> colour_of_;
};

std::vector<int> colours_of_mask(ColourMask mask);
ColourMask colour_mask_of(const std::vector<int>& colours);

/// The subcomplex induced by the vertices whose colour lies in the set.
SimplicialComplex sub_by_colours(const ColouredComplex& K, ColourMask colours);

/// The simplices whose colour set does not contain the whole of `colours`.
/// Downward closed since colour sets only shrink on faces. Throws on the
/// empty colour set.
SimplicialComplex not_spanning_colours(const ColouredComplex& K, ColourMask colours);

/// Simplices with exactly one vertex of every colour (dimension m).
std::vector<Simplex> rainbow_simplices(const ColouredComplex& K);

/// Simplices of the given dimension with pairwise distinct colours.
std::vector<Simplex> colourful_simplices(const ColouredComplex& K, int dim);

}  // namespace nervekit
