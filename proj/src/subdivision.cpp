#include "nervekit/subdivision.hpp"

#include <algorithm>
#include <stdexcept>

namespace nervekit {

Simplex Subdivision::chain_simplex(const std::vector<Simplex>& chain) const {
    std::vector<VertexId> ids;
    ids.reserve(chain.size());
    for (const Simplex& s : chain) ids.push_back(id_of.at(s));
    return Simplex(std::move(ids));
}

Subdivision barycentric_subdivision(const SimplicialComplex& X) {
    if (X.empty()) throw std::invalid_argument("barycentric_subdivision: empty complex");

    Subdivision sd;
    // lexicographic order over all simplices, mixed dimensions
    std::vector<Simplex> base = X.all_simplices();
    std::sort(base.begin(), base.end());
    sd.source = base;
    for (std::size_t i = 0; i < base.size(); ++i) sd.id_of.emplace(base[i], static_cast<VertexId>(i));

    // strict supersets of each simplex, by source index
    std::size_t n = base.size();
    std::vector<std::vector<std::size_t>> supersets(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && base[i].is_face_of(base[j])) supersets[i].push_back(j);

    std::set<Simplex> simplices;
    // depth-first enumeration of inclusion chains
    std::vector<std::size_t> chain;
    auto emit = [&]() {
        std::vector<VertexId> ids;
        ids.reserve(chain.size());
        for (std::size_t idx : chain) ids.push_back(static_cast<VertexId>(idx));
        simplices.insert(Simplex(std::move(ids)));
    };
    auto extend = [&](auto&& self, std::size_t top) -> void {
        chain.push_back(top);
        emit();
        for (std::size_t nxt : supersets[top]) self(self, nxt);
        chain.pop_back();
    };
    for (std::size_t i = 0; i < n; ++i) extend(extend, i);

    sd.complex = SimplicialComplex::from_closed(std::move(simplices));
    return sd;
}

}  // namespace nervekit
