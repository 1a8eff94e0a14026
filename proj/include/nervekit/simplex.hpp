#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace nervekit {

using VertexId = int;

/// A nonempty finite set of vertex ids, stored in ascending order.
/// The empty set is not a simplex; the minimal dimension is 0.
class Simplex {
public:
    /// Sorts and deduplicates; throws std::invalid_argument on an empty set
    /// or a negative vertex id.
    explicit Simplex(std::vector<VertexId> vertices);
    Simplex(std::initializer_list<VertexId> vertices);

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<VertexId>& vertices() const { return vertices_; }

    bool contains(VertexId v) const;
    bool is_face_of(const Simplex& other) const;

    /// The codimension-1 face obtained by dropping the i-th vertex; dim() must be >= 1.
    Simplex face_dropping(int i) const;
    std::vector<Simplex> facets() const;  // all codimension-1 faces

    Simplex with_vertex(VertexId v) const;
    /// The face on the remaining vertices; throws if v is the only vertex.
    Simplex without_vertex(VertexId v) const;

    auto operator<=>(const Simplex&) const = default;  // lexicographic

    std::string to_string() const;

private:
    std::vector<VertexId> vertices_;
};

/// A finite abstract simplicial complex stored as its full downward-closed
/// simplex set. Immutable after construction; every operation returns a new
/// complex.
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // the empty complex

    /// Downward closure of an arbitrary family of simplices.
    static SimplicialComplex close(const std::vector<Simplex>& family);
    /// Downward closure of facet vertex lists; throws on an empty facet.
    static SimplicialComplex from_facets(const std::vector<std::vector<VertexId>>& facets);
    /// Takes a set already known to be downward closed (set operations on
    /// closed sets, induced subcomplexes, ...).
    static SimplicialComplex from_closed(std::set<Simplex> simplices);

    bool empty() const { return by_dim_.empty(); }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t size() const { return total_; }

    bool contains(const Simplex& s) const;
    /// Simplices of dimension i in lexicographic order (empty list out of range).
    const std::vector<Simplex>& simplices_of_dim(int i) const;
    std::vector<Simplex> all_simplices() const;  // by dimension, lex within
    const std::vector<Simplex>& facets() const { return facets_; }
    std::vector<VertexId> vertices() const;
    std::size_t vertex_count() const;

    long euler_characteristic() const;
    /// True when every codimension-1 face of every member is a member.
    bool is_downward_closed() const;

    bool operator==(const SimplicialComplex& other) const { return by_dim_ == other.by_dim_; }

private:
    std::vector<std::vector<Simplex>> by_dim_;  // index = dimension, each sorted
    std::vector<Simplex> facets_;               // inclusion-maximal members
    std::size_t total_ = 0;

    void build(std::set<Simplex> simplices);
};

/// All simplices of dimension <= l; l = -1 gives the empty complex.
SimplicialComplex skeleton(const SimplicialComplex& X, int l);

/// The subcomplex induced by a vertex set U (ids absent from X are ignored).
SimplicialComplex induced(const SimplicialComplex& X, const std::set<VertexId>& U);

/// Set union / intersection of simplex sets; operands must live in a common
/// vertex id space.
SimplicialComplex complex_union(const SimplicialComplex& X, const SimplicialComplex& Y);
SimplicialComplex complex_intersection(const SimplicialComplex& X, const SimplicialComplex& Y);

/// lk(v, X) = { s : v not in s and s + {v} in X }; throws if v is not a vertex of X.
SimplicialComplex link(const SimplicialComplex& X, VertexId v);

}  // namespace nervekit
