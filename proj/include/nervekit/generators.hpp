#pragma once

#include "nervekit/coloured.hpp"
#include "nervekit/cover.hpp"
#include "nervekit/simplex.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>

namespace nervekit {

/// Boundary of the m-dimensional simplex on vertices 0..m; requires m >= 1.
SimplicialComplex simplex_boundary(int m);

/// The full m-dimensional simplex on vertices 0..m.
SimplicialComplex full_simplex(int m);

/// The 7-vertex triangulated torus (every pair of vertices spans an edge,
/// 14 triangles, Euler characteristic 0).
SimplicialComplex torus7();

/// The 6-vertex triangulation of the real projective plane (antipodal
/// quotient of the icosahedron: 15 edges, 10 triangles).
SimplicialComplex rp2_6();

/// Grid-torus triangulation with rows partitioned into three contiguous
/// cyclic bands as colours. band_sizes must be positive and sum to rows;
/// rows, cols >= 3. Each vertex (r, c) gets id r*cols + c.
ColouredComplex banded_torus(int rows, int cols, const std::array<int, 3>& band_sizes);

/// The full (d-1)-skeleton on n vertices plus each d-simplex independently
/// with probability p. Deterministic for a fixed seed.
SimplicialComplex random_complex(int n, int d, double p, std::uint64_t seed);

/// Cover members are unions of facet closures: each facet lands in a seeded
/// primary member and joins others with a small probability, so the union is
/// the whole complex and members overlap. parts >= 1.
Cover random_cover(const SimplicialComplex& X, int parts, std::uint64_t seed);

/// Uniform colouring of the vertices with colours 0..m, re-rolled until every
/// class is nonempty. Requires at least m+1 vertices.
ColouredComplex random_colouring(const SimplicialComplex& X, int m, std::uint64_t seed);

/// A simple graph on vertices 0..n-1.
struct Graph {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // each pair ascending

    static Graph make(int n, std::set<std::pair<int, int>> edges);
    bool adjacent(int a, int b) const;
    Graph complement() const;
    bool connected() const;
};

/// The complex of all cliques of the graph.
SimplicialComplex clique_complex(const Graph& G);

/// Minimum size of a set D such that every vertex has a neighbour in D
/// (a vertex is not a neighbour of itself); nullopt when no such set exists
/// (some vertex is isolated). Exhaustive search; graphs above 24 vertices
/// are rejected.
std::optional<int> total_domination_number(const Graph& G);

/// Seeded Erdos-Renyi-style graph, for fixture searches.
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

/// Deterministic splitmix-style derivation of per-trial seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace nervekit
