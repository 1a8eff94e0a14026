#pragma once

#include "nervekit/simplex.hpp"

#include <cstdint>
#include <vector>

namespace nervekit {

/// Index subsets of cover members are carried as bit masks; member counts
/// are capped (12 by default) so masks always fit.
using MemberMask = std::uint32_t;

std::vector<int> mask_to_indices(MemberMask mask);
int mask_size(MemberMask mask);

/// An ordered collection of subcomplexes of a host complex. Repetition is
/// allowed and counts toward the cardinality. Construction checks that every
/// member is a subcomplex of the host; whether the members must cover the
/// host is up to each operation.
struct Cover {
    SimplicialComplex host;
    std::vector<SimplicialComplex> members;

    /// Throws std::invalid_argument when a member is not a subcomplex of the host.
    static Cover make(SimplicialComplex host, std::vector<SimplicialComplex> members);

    std::size_t size() const { return members.size(); }
    bool covers_host() const;

    SimplicialComplex member_union(MemberMask mask) const;
    SimplicialComplex member_intersection(MemberMask mask) const;  // mask must be nonempty
};

inline constexpr std::size_t kDefaultMemberCap = 12;

/// The nerve: one vertex per member index; an index set is a simplex exactly
/// when the members' intersection is nonempty. Throws on an empty member (an
/// empty subcomplex is not a vertex of the nerve) and when the member count
/// exceeds the cap.
SimplicialComplex nerve(const Cover& cover, std::size_t member_cap = kDefaultMemberCap);

}  // namespace nervekit
