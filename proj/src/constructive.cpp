#include "nervekit/constructive.hpp"

#include "nervekit/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nervekit {

const Chain& ChainMap::image_of(const Simplex& s) const {
    auto it = images_.find(s);
    if (it == images_.end())
        throw std::invalid_argument("ChainMap: no image for simplex " + s.to_string());
    return it->second;
}

Chain ChainMap::apply(const Chain& c, const FieldSpec& field) const {
    Chain out(c.dim());  // degree 0: the image of an s-chain is an s-chain
    for (const auto& [s, v] : c.terms())
        out = chain_add(out, chain_scale(v, image_of(s), field), field);
    return out;
}

bool ChainMap::commutes_with_boundary(const FieldSpec& field) const {
    for (const auto& [s, img] : images_) {
        if (s.dim() == 0) {
            if (!(augmentation(img, field) == augmentation(unit_chain(s, field), field))) return false;
            continue;
        }
        Chain lhs = boundary(img, field);
        Chain rhs = apply(boundary(unit_chain(s, field), field), field);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool ChainMap::augmentation_preserving(const FieldSpec& field) const {
    for (const auto& [s, img] : images_)
        if (s.dim() == 0 && !field.is_one(augmentation(img, field))) return false;
    return true;
}

SimplicialComplex kill_homology(const SimplicialComplex& K, int d, const FieldSpec& field) {
    if (K.empty()) throw std::invalid_argument("kill_homology: empty complex");
    if (d < 1) throw std::invalid_argument("kill_homology: need d >= 1");

    BettiVector before = reduced_betti(K, field);
    std::vector<VertexId> verts = K.vertices();
    int n = static_cast<int>(verts.size());

    // full (d-1)-skeleton of the simplex on K's vertices
    std::set<Simplex> simplices;
    for (const Simplex& s : K.all_simplices()) simplices.insert(s);
    int skel_size = std::min(d, n);  // subsets of size <= d
    for (int size = 1; size <= skel_size; ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<VertexId> vs;
            vs.reserve(static_cast<std::size_t>(size));
            for (int i : idx) vs.push_back(verts[static_cast<std::size_t>(i)]);
            simplices.insert(Simplex(std::move(vs)));
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    SimplicialComplex current = SimplicialComplex::from_closed(std::move(simplices));

    // greedily add d-simplices whose boundary is a cycle that does not bound
    // yet; the dichotomy "cycle with no filling" is exactly what keeps
    // homology in dimensions >= d untouched
    if (n >= d + 1) {
        std::vector<int> idx(static_cast<std::size_t>(d) + 1);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<VertexId> vs;
            vs.reserve(static_cast<std::size_t>(d) + 1);
            for (int i : idx) vs.push_back(verts[static_cast<std::size_t>(i)]);
            Simplex candidate(std::move(vs));
            if (!current.contains(candidate)) {
                Chain bd = boundary(unit_chain(candidate, field), field);
                if (!fill(current, bd, field)) {
                    std::set<Simplex> next;
                    for (const Simplex& s : current.all_simplices()) next.insert(s);
                    next.insert(candidate);
                    current = SimplicialComplex::from_closed(std::move(next));
                }
            }
            int pos = d;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - (d + 1) + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j <= d; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    BettiVector after = reduced_betti(current, field);
    for (int i = -1; i <= d - 1; ++i)
        if (after.betti(i) != 0)
            throw std::logic_error("kill_homology: postcondition failed, betti(" + std::to_string(i) +
                                   ") = " + std::to_string(after.betti(i)) + " after the construction");
    int hi = std::max(before.max_degree(), after.max_degree());
    for (int i = d; i <= hi; ++i)
        if (after.betti(i) != before.betti(i))
            throw std::logic_error("kill_homology: postcondition failed, betti(" + std::to_string(i) +
                                   ") changed from " + std::to_string(before.betti(i)) + " to " +
                                   std::to_string(after.betti(i)));
    return current;
}

ChainMap build_chain_map(const CarrierAssignment& carrier, const FieldSpec& field, int up_to_dim) {
    std::map<Simplex, Chain> images;
    std::map<Simplex, SimplicialComplex> targets;

    int top = std::min(up_to_dim, carrier.domain.dim());
    for (int s = 0; s <= top; ++s) {
        for (const Simplex& sigma : carrier.domain.simplices_of_dim(s)) {
            SimplicialComplex target = carrier.assign(sigma);
            if (target.empty())
                throw std::invalid_argument("build_chain_map: empty carrier at " + sigma.to_string());
            // monotonicity against the facets
            for (const Simplex& tau : sigma.facets())
                for (const Simplex& member : targets.at(tau).all_simplices())
                    if (!target.contains(member))
                        throw std::invalid_argument("build_chain_map: carrier not monotone at " +
                                                    sigma.to_string());
            if (reduced_betti(target, field).betti(s - 1) != 0)
                throw std::invalid_argument("build_chain_map: carrier of " + sigma.to_string() +
                                            " has nonzero reduced homology in degree " +
                                            std::to_string(s - 1));
            if (s == 0) {
                images.emplace(sigma, unit_chain(Simplex{target.vertices().front()}, field));
            } else {
                // image of the boundary, then a deterministic filling inside
                // the carrier
                Chain boundary_image(s - 1);
                FieldScalar sign = field.one();
                for (int i = 0; i <= sigma.dim(); ++i) {
                    boundary_image = chain_add(
                        boundary_image, chain_scale(sign, images.at(sigma.face_dropping(i)), field), field);
                    sign = field.neg(sign);
                }
                auto filled = fill(target, boundary_image, field);
                if (!filled)
                    throw std::logic_error("build_chain_map: filling failed at " + sigma.to_string() +
                                           " despite the acyclicity precondition");
                images.emplace(sigma, std::move(*filled));
            }
            targets.emplace(sigma, std::move(target));
        }
    }

    ChainMap f(std::move(images));
    if (!f.commutes_with_boundary(field) || !f.augmentation_preserving(field))
        throw std::logic_error("build_chain_map: constructed map fails its invariants");
    return f;
}

namespace {

int permutation_sign(std::vector<int> perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        while (perm[i] != static_cast<int>(i)) {
            std::swap(perm[i], perm[static_cast<std::size_t>(perm[i])]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

ChainMap sd_chain_map(const SimplicialComplex& X, const FieldSpec& field) {
    Subdivision sd = barycentric_subdivision(X);
    std::map<Simplex, Chain> images;

    for (int d = 0; d <= X.dim(); ++d) {
        for (const Simplex& sigma : X.simplices_of_dim(d)) {
            Chain img(d);
            std::vector<int> order(static_cast<std::size_t>(d) + 1);
            std::iota(order.begin(), order.end(), 0);
            // each permutation of sigma's vertices yields the flag of its
            // prefixes; the orientation sign is the permutation sign times
            // the sign of sorting the flag's fresh ids into ascending order
            do {
                std::vector<VertexId> prefix;
                std::vector<VertexId> flag_ids;
                prefix.reserve(order.size());
                for (int i : order) {
                    prefix.push_back(sigma.vertices()[static_cast<std::size_t>(i)]);
                    flag_ids.push_back(sd.id_of.at(Simplex(prefix)));
                }
                std::vector<int> rank_perm(flag_ids.size());
                std::iota(rank_perm.begin(), rank_perm.end(), 0);
                std::sort(rank_perm.begin(), rank_perm.end(), [&](int a, int b) {
                    return flag_ids[static_cast<std::size_t>(a)] < flag_ids[static_cast<std::size_t>(b)];
                });
                int total_sign = permutation_sign(order) * permutation_sign(rank_perm);
                img.add_term(Simplex(flag_ids), field.from_int(total_sign), field);
            } while (std::next_permutation(order.begin(), order.end()));
            images.emplace(sigma, std::move(img));
        }
    }

    ChainMap f(std::move(images));
    if (!f.commutes_with_boundary(field))
        throw std::logic_error("sd_chain_map: constructed map does not commute with the boundary");
    return f;
}

ChainMap induced_chain_map(const SimplicialComplex& domain,
                           const std::function<VertexId(VertexId)>& vertex_map, const FieldSpec& field) {
    std::map<Simplex, Chain> images;
    for (int d = 0; d <= domain.dim(); ++d) {
        for (const Simplex& sigma : domain.simplices_of_dim(d)) {
            std::vector<VertexId> mapped;
            mapped.reserve(sigma.size());
            for (VertexId v : sigma.vertices()) mapped.push_back(vertex_map(v));
            std::vector<int> rank_perm(mapped.size());
            std::iota(rank_perm.begin(), rank_perm.end(), 0);
            std::sort(rank_perm.begin(), rank_perm.end(), [&](int a, int b) {
                return mapped[static_cast<std::size_t>(a)] < mapped[static_cast<std::size_t>(b)];
            });
            bool degenerate = false;
            for (std::size_t i = 1; i < mapped.size(); ++i)
                if (mapped[static_cast<std::size_t>(rank_perm[i])] ==
                    mapped[static_cast<std::size_t>(rank_perm[i - 1])]) { degenerate = true; break; }
            Chain img(d);
            if (!degenerate)
                img.add_term(Simplex(mapped), field.from_int(permutation_sign(rank_perm)), field);
            images.emplace(sigma, std::move(img));
        }
    }
    return ChainMap(std::move(images));
}

SimplicialComplex sd_colour_support(const ColouredComplex& K, int colour, const Subdivision& sd) {
    const auto& cls = K.colour_class(colour);
    if (cls.empty()) throw std::invalid_argument("sd_colour_support: empty colour class");
    std::set<VertexId> chosen;
    for (std::size_t id = 0; id < sd.source.size(); ++id) {
        for (VertexId v : sd.source[id].vertices())
            if (K.colour_of(v) == colour) { chosen.insert(static_cast<VertexId>(id)); break; }
    }
    return induced(sd.complex, chosen);
}

}  // namespace nervekit
