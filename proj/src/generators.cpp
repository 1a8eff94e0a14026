#include "nervekit/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace nervekit {

namespace {

// mt19937_64 is fully specified by the standard, and the helpers below avoid
// std::uniform_* distributions, whose outputs are implementation-defined.
bool chance(std::mt19937_64& rng, double p) {
    // 53-bit uniform in [0, 1)
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < p;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;  // modulo bias is irrelevant here; determinism is what matters
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

SimplicialComplex full_simplex(int m) {
    if (m < 0) throw std::invalid_argument("full_simplex: need m >= 0");
    std::vector<VertexId> all(static_cast<std::size_t>(m) + 1);
    std::iota(all.begin(), all.end(), 0);
    return SimplicialComplex::close({Simplex(all)});
}

SimplicialComplex simplex_boundary(int m) {
    if (m < 1) throw std::invalid_argument("simplex_boundary: need m >= 1 (m = 0 would be empty)");
    std::vector<VertexId> all(static_cast<std::size_t>(m) + 1);
    std::iota(all.begin(), all.end(), 0);
    return SimplicialComplex::close(Simplex(all).facets());
}

SimplicialComplex torus7() {
    std::vector<std::vector<VertexId>> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex rp2_6() {
    // antipodal quotient of the icosahedron
    return SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 4}, {0, 2, 3}, {0, 3, 5}, {0, 4, 5},
                                           {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 4, 5}});
}

ColouredComplex banded_torus(int rows, int cols, const std::array<int, 3>& band_sizes) {
    if (rows < 3 || cols < 3) throw std::invalid_argument("banded_torus: need rows, cols >= 3");
    if (band_sizes[0] < 1 || band_sizes[1] < 1 || band_sizes[2] < 1)
        throw std::invalid_argument("banded_torus: need three nonempty bands");
    if (band_sizes[0] + band_sizes[1] + band_sizes[2] != rows)
        throw std::invalid_argument("banded_torus: band sizes must sum to the row count");

    auto vid = [&](int r, int c) {
        return ((r % rows + rows) % rows) * cols + ((c % cols + cols) % cols);
    };
    std::vector<std::vector<VertexId>> facets;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            facets.push_back({vid(r, c), vid(r + 1, c), vid(r, c + 1)});
            facets.push_back({vid(r + 1, c), vid(r, c + 1), vid(r + 1, c + 1)});
        }
    SimplicialComplex complex = SimplicialComplex::from_facets(facets);

    std::vector<std::vector<VertexId>> classes(3);
    for (int r = 0; r < rows; ++r) {
        int band = r < band_sizes[0] ? 0 : (r < band_sizes[0] + band_sizes[1] ? 1 : 2);
        for (int c = 0; c < cols; ++c) classes[static_cast<std::size_t>(band)].push_back(r * cols + c);
    }
    return ColouredComplex::make(std::move(complex), std::move(classes));
}

SimplicialComplex random_complex(int n, int d, double p, std::uint64_t seed) {
    if (n < 1 || d < 1 || d > n - 1)
        throw std::invalid_argument("random_complex: need 1 <= d <= n - 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_complex: need 0 <= p <= 1");
    std::mt19937_64 rng(seed);

    std::vector<Simplex> family;
    // full (d-1)-skeleton: all subsets of size d suffice for the closure
    std::vector<int> idx(static_cast<std::size_t>(d));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        family.emplace_back(std::vector<VertexId>(idx.begin(), idx.end()));
        int pos = d - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - d + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < d; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    // each d-simplex with probability p, in lexicographic order
    idx.assign(static_cast<std::size_t>(d) + 1, 0);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (chance(rng, p)) family.emplace_back(std::vector<VertexId>(idx.begin(), idx.end()));
        int pos = d;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - (d + 1) + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j <= d; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return SimplicialComplex::close(family);
}

Cover random_cover(const SimplicialComplex& X, int parts, std::uint64_t seed) {
    if (parts < 1) throw std::invalid_argument("random_cover: need parts >= 1");
    if (X.empty()) throw std::invalid_argument("random_cover: empty complex");
    std::mt19937_64 rng(seed);
    const auto& facets = X.facets();

    std::vector<std::vector<Simplex>> assigned(static_cast<std::size_t>(parts));
    for (const Simplex& f : facets) {
        std::size_t primary = static_cast<std::size_t>(below(rng, static_cast<std::uint64_t>(parts)));
        assigned[primary].push_back(f);
        for (std::size_t part = 0; part < assigned.size(); ++part)
            if (part != primary && chance(rng, 0.25)) assigned[part].push_back(f);
    }
    // an empty member gets a seeded facet so every member is a nonempty
    // subcomplex and the union is still X
    for (auto& member : assigned)
        if (member.empty())
            member.push_back(facets[static_cast<std::size_t>(below(rng, facets.size()))]);

    std::vector<SimplicialComplex> members;
    members.reserve(assigned.size());
    for (auto& member : assigned) members.push_back(SimplicialComplex::close(member));
    return Cover::make(X, std::move(members));
}

ColouredComplex random_colouring(const SimplicialComplex& X, int m, std::uint64_t seed) {
    if (m < 0) throw std::invalid_argument("random_colouring: need m >= 0");
    std::vector<VertexId> verts = X.vertices();
    if (static_cast<int>(verts.size()) < m + 1)
        throw std::invalid_argument("random_colouring: fewer vertices than colours");
    std::mt19937_64 rng(seed);
    while (true) {
        std::vector<std::vector<VertexId>> classes(static_cast<std::size_t>(m) + 1);
        for (VertexId v : verts)
            classes[static_cast<std::size_t>(below(rng, static_cast<std::uint64_t>(m) + 1))].push_back(v);
        bool ok = true;
        for (const auto& cls : classes)
            if (cls.empty()) { ok = false; break; }
        if (ok) return ColouredComplex::make(X, std::move(classes));
    }
}

Graph Graph::make(int n, std::set<std::pair<int, int>> edges) {
    for (const auto& [a, b] : edges)
        if (a < 0 || b < 0 || a >= n || b >= n || a >= b)
            throw std::invalid_argument("Graph: bad edge");
    Graph G;
    G.n = n;
    G.edges = std::move(edges);
    return G;
}

bool Graph::adjacent(int a, int b) const {
    if (a > b) std::swap(a, b);
    return edges.count({a, b}) > 0;
}

Graph Graph::complement() const {
    std::set<std::pair<int, int>> comp;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!edges.count({a, b})) comp.insert({a, b});
    return Graph::make(n, std::move(comp));
}

bool Graph::connected() const {
    if (n == 0) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int nxt = 0; nxt < n; ++nxt)
            if (!seen[static_cast<std::size_t>(nxt)] && adjacent(cur, nxt)) {
                seen[static_cast<std::size_t>(nxt)] = true;
                stack.push_back(nxt);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

SimplicialComplex clique_complex(const Graph& G) {
    // grow cliques vertex by vertex; the closure of the maximal ones is the
    // full clique family
    std::vector<Simplex> maximal;
    std::vector<int> clique;
    auto grow = [&](auto&& self, int next_candidate) -> void {
        bool extended = false;
        for (int v = next_candidate; v < G.n; ++v) {
            bool fits = true;
            for (int u : clique)
                if (!G.adjacent(u, v)) { fits = false; break; }
            if (!fits) continue;
            clique.push_back(v);
            self(self, v + 1);
            clique.pop_back();
            extended = true;
        }
        if (!clique.empty() && !extended) {
            // not extendable to the right; maximality to the left is not
            // guaranteed, but the downward closure makes duplicates harmless
            maximal.emplace_back(std::vector<VertexId>(clique.begin(), clique.end()));
        }
    };
    grow(grow, 0);
    if (maximal.empty()) return SimplicialComplex();
    return SimplicialComplex::close(maximal);
}

std::optional<int> total_domination_number(const Graph& G) {
    if (G.n > 24) throw std::invalid_argument("total_domination_number: graph too large for exhaustive search");
    if (G.n == 0) return 0;
    for (int v = 0; v < G.n; ++v) {
        bool has_neighbour = false;
        for (int u = 0; u < G.n && !has_neighbour; ++u) has_neighbour = G.adjacent(u, v);
        if (!has_neighbour) return std::nullopt;  // isolated vertices cannot be dominated
    }
    for (int size = 1; size <= G.n; ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            bool dominates = true;
            for (int v = 0; v < G.n && dominates; ++v) {
                bool covered = false;
                for (int u : idx)
                    if (G.adjacent(u, v)) { covered = true; break; }
                dominates = covered;
            }
            if (dominates) return size;
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == G.n - size + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (chance(rng, edge_probability)) edges.insert({a, b});
    return Graph::make(n, std::move(edges));
}

}  // namespace nervekit
