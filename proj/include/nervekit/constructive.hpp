#pragma once

#include "nervekit/chain.hpp"
#include "nervekit/coloured.hpp"
#include "nervekit/field.hpp"
#include "nervekit/simplex.hpp"
#include "nervekit/subdivision.hpp"

#include <functional>
#include <map>

namespace nervekit {

/// Monotone assignment of a nonempty target subcomplex to each simplex of a
/// domain complex, guiding inductive chain-map construction.
struct CarrierAssignment {
    SimplicialComplex domain;
    std::function<SimplicialComplex(const Simplex&)> assign;
};

/// A degree-0 chain map given by its values on the canonically oriented
/// simplices of a domain complex.
class ChainMap {
public:
    ChainMap() = default;
    explicit ChainMap(std::map<Simplex, Chain> images) : images_(std::move(images)) {}

    const Chain& image_of(const Simplex& s) const;
    const std::map<Simplex, Chain>& images() const { return images_; }

    /// Linear extension to chains.
    Chain apply(const Chain& c, const FieldSpec& field) const;

    /// d f = f d on every domain simplex, with the augmentation convention in
    /// degree 0 (boundaries of vertices compare as coefficient sums).
    bool commutes_with_boundary(const FieldSpec& field) const;
    /// Every vertex image has coefficient sum 1.
    bool augmentation_preserving(const FieldSpec& field) const;

private:
    std::map<Simplex, Chain> images_;
};

/// Enlarges K (inside the full simplex on its own vertex set) so that all
/// reduced homology below dimension d vanishes while homology in dimensions
/// >= d is unchanged: adds the full (d-1)-skeleton, then greedily every
/// d-simplex whose boundary is a cycle that does not yet bound. Both
/// postconditions are recomputed before returning; a failure throws
/// std::logic_error. Requires nonempty K and d >= 1.
SimplicialComplex kill_homology(const SimplicialComplex& K, int d, const FieldSpec& field);

/// Inductive chain-map construction over a carrier: vertices map to the
/// lexicographically least vertex of their carrier, higher simplices to a
/// deterministic filling of their boundary's image inside their carrier.
/// Requires betti(s-1) of the carrier of every domain s-simplex to vanish
/// (s <= up_to_dim); violations throw std::invalid_argument naming the
/// simplex. The result commutes with the boundary and preserves
/// augmentation; both are verified.
ChainMap build_chain_map(const CarrierAssignment& carrier, const FieldSpec& field, int up_to_dim);

/// The subdivision chain map: a simplex goes to the signed sum of the
/// top-dimensional simplices of its barycentric subdivision (orientations
/// induced); (dim+1)! terms per simplex. Commutation with the boundary is
/// verified.
ChainMap sd_chain_map(const SimplicialComplex& X, const FieldSpec& field);

/// The chain map induced by a simplicial vertex map: an ordered simplex maps
/// to its image with the sorting sign, or to zero when two vertices collide.
ChainMap induced_chain_map(const SimplicialComplex& domain,
                           const std::function<VertexId(VertexId)>& vertex_map, const FieldSpec& field);

/// The subcomplex of the subdivision of K induced by the subdivision
/// vertices whose source simplex meets the given colour class. Throws on an
/// empty colour class.
SimplicialComplex sd_colour_support(const ColouredComplex& K, int colour, const Subdivision& sd);

}  // namespace nervekit
