#include "nervekit/coloured.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace nervekit {

ColouredComplex ColouredComplex::make(SimplicialComplex complex,
                                      std::vector<std::vector<VertexId>> classes) {
    if (classes.empty()) throw std::invalid_argument("ColouredComplex: need at least one colour class");
    if (classes.size() > 31) throw std::invalid_argument("ColouredComplex: too many colour classes");
    ColouredComplex K;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        std::sort(classes[c].begin(), classes[c].end());
        for (VertexId v : classes[c]) {
            if (!complex.contains(Simplex{v}))
                throw std::invalid_argument("ColouredComplex: coloured vertex " + std::to_string(v) +
                                            " is not a vertex of the complex");
            if (!K.colour_of_.emplace(v, static_cast<int>(c)).second)
                throw std::invalid_argument("ColouredComplex: vertex " + std::to_string(v) +
                                            " appears in two colour classes");
        }
    }
    for (VertexId v : complex.vertices())
        if (!K.colour_of_.count(v))
            throw std::invalid_argument("ColouredComplex: vertex " + std::to_string(v) + " has no colour");
    K.complex_ = std::move(complex);
    K.classes_ = std::move(classes);
    return K;
}

int ColouredComplex::colour_of(VertexId v) const {
    auto it = colour_of_.find(v);
    if (it == colour_of_.end())
        throw std::invalid_argument("ColouredComplex: unknown vertex " + std::to_string(v));
    return it->second;
}

const std::vector<VertexId>& ColouredComplex::colour_class(int colour) const {
    if (colour < 0 || colour >= num_colours())
        throw std::invalid_argument("ColouredComplex: no colour " + std::to_string(colour));
    return classes_[static_cast<std::size_t>(colour)];
}

ColourMask ColouredComplex::colour_set(const Simplex& s) const {
    ColourMask mask = 0;
    for (VertexId v : s.vertices()) mask |= ColourMask{1} << colour_of(v);
    return mask;
}

std::vector<VertexId> ColouredComplex::vertices_with_colours(ColourMask colours) const {
    std::vector<VertexId> out;
    for (int c : colours_of_mask(colours))
        if (c < num_colours())
            out.insert(out.end(), classes_[static_cast<std::size_t>(c)].begin(),
                       classes_[static_cast<std::size_t>(c)].end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> colours_of_mask(ColourMask mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i);
    return out;
}

ColourMask colour_mask_of(const std::vector<int>& colours) {
    ColourMask mask = 0;
    for (int c : colours) mask |= ColourMask{1} << c;
    return mask;
}

SimplicialComplex sub_by_colours(const ColouredComplex& K, ColourMask colours) {
    std::vector<VertexId> vs = K.vertices_with_colours(colours);
    return induced(K.complex(), std::set<VertexId>(vs.begin(), vs.end()));
}

SimplicialComplex not_spanning_colours(const ColouredComplex& K, ColourMask colours) {
    if (colours == 0)
        throw std::invalid_argument("not_spanning_colours: the empty colour set is contained in "
                                    "every colour set");
    std::set<Simplex> kept;
    for (int i = 0; i <= K.complex().dim(); ++i)
        for (const Simplex& s : K.complex().simplices_of_dim(i))
            if ((K.colour_set(s) & colours) != colours) kept.insert(s);
    return SimplicialComplex::from_closed(std::move(kept));
}

std::vector<Simplex> rainbow_simplices(const ColouredComplex& K) {
    std::vector<Simplex> out;
    int m = K.max_colour();
    ColourMask full = (ColourMask{1} << (m + 1)) - 1;
    for (const Simplex& s : K.complex().simplices_of_dim(m))
        if (K.colour_set(s) == full) out.push_back(s);
    return out;
}

std::vector<Simplex> colourful_simplices(const ColouredComplex& K, int dim) {
    std::vector<Simplex> out;
    for (const Simplex& s : K.complex().simplices_of_dim(dim))
        if (std::popcount(K.colour_set(s)) == dim + 1) out.push_back(s);
    return out;
}

}  // namespace nervekit
