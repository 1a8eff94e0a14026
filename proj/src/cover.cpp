#include "nervekit/cover.hpp"

#include <bit>
#include <stdexcept>

namespace nervekit {

std::vector<int> mask_to_indices(MemberMask mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i);
    return out;
}

int mask_size(MemberMask mask) { return std::popcount(mask); }

Cover Cover::make(SimplicialComplex host, std::vector<SimplicialComplex> members) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (const Simplex& s : members[i].all_simplices())
            if (!host.contains(s))
                throw std::invalid_argument("Cover: member " + std::to_string(i) +
                                            " is not a subcomplex of the host");
    Cover c;
    c.host = std::move(host);
    c.members = std::move(members);
    return c;
}

bool Cover::covers_host() const {
    SimplicialComplex all;
    for (const SimplicialComplex& m : members) all = complex_union(all, m);
    return all == host;
}

SimplicialComplex Cover::member_union(MemberMask mask) const {
    SimplicialComplex out;
    for (int i : mask_to_indices(mask)) out = complex_union(out, members[static_cast<std::size_t>(i)]);
    return out;
}

SimplicialComplex Cover::member_intersection(MemberMask mask) const {
    auto indices = mask_to_indices(mask);
    if (indices.empty()) throw std::invalid_argument("member_intersection: empty index set");
    SimplicialComplex out = members[static_cast<std::size_t>(indices[0])];
    for (std::size_t k = 1; k < indices.size(); ++k)
        out = complex_intersection(out, members[static_cast<std::size_t>(indices[k])]);
    return out;
}

SimplicialComplex nerve(const Cover& cover, std::size_t member_cap) {
    std::size_t n = cover.size();
    if (n > member_cap)
        throw std::invalid_argument("nerve: cover has " + std::to_string(n) +
                                    " members, above the cap of " + std::to_string(member_cap) +
                                    " (raise the cap to override)");
    for (std::size_t i = 0; i < n; ++i)
        if (cover.members[i].empty())
            throw std::invalid_argument("nerve: member " + std::to_string(i) +
                                        " is empty and cannot be a nerve vertex");

    // intersections memoised over masks in binary-counter order; the
    // intersection over a mask extends the intersection over the mask without
    // its lowest bit
    std::vector<SimplicialComplex> inter(std::size_t{1} << n);
    std::set<Simplex> nerve_simplices;
    for (MemberMask mask = 1; mask < (MemberMask{1} << n); ++mask) {
        MemberMask low = mask & (~mask + 1);
        MemberMask rest = mask ^ low;
        int low_index = std::countr_zero(low);
        if (rest == 0)
            inter[mask] = cover.members[static_cast<std::size_t>(low_index)];
        else if (inter[rest].empty())
            continue;  // a superset of an empty intersection stays empty
        else
            inter[mask] = complex_intersection(inter[rest], cover.members[static_cast<std::size_t>(low_index)]);
        if (!inter[mask].empty()) {
            std::vector<VertexId> ids;
            for (int i : mask_to_indices(mask)) ids.push_back(i);
            nerve_simplices.insert(Simplex(std::move(ids)));
        }
    }
    return SimplicialComplex::from_closed(std::move(nerve_simplices));
}

}  // namespace nervekit
