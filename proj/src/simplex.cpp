#include "nervekit/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace nervekit {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("Simplex: the empty set is not a simplex");
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    if (vertices_.front() < 0) throw std::invalid_argument("Simplex: vertex ids must be nonnegative");
}

Simplex::Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

bool Simplex::contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(),
                         vertices_.begin(), vertices_.end());
}

Simplex Simplex::face_dropping(int i) const {
    std::vector<VertexId> vs = vertices_;
    vs.erase(vs.begin() + i);
    return Simplex(std::move(vs));
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (dim() == 0) return out;
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(face_dropping(static_cast<int>(i)));
    return out;
}

Simplex Simplex::with_vertex(VertexId v) const {
    std::vector<VertexId> vs = vertices_;
    vs.push_back(v);
    return Simplex(std::move(vs));
}

Simplex Simplex::without_vertex(VertexId v) const {
    std::vector<VertexId> vs;
    vs.reserve(vertices_.size());
    for (VertexId u : vertices_)
        if (u != v) vs.push_back(u);
    return Simplex(std::move(vs));
}

std::string Simplex::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vertices_[i]);
    }
    return out + "}";
}

void SimplicialComplex::build(std::set<Simplex> simplices) {
    by_dim_.clear();
    facets_.clear();
    total_ = simplices.size();
    if (simplices.empty()) return;
    int d = 0;
    for (const Simplex& s : simplices) d = std::max(d, s.dim());
    by_dim_.assign(static_cast<std::size_t>(d) + 1, {});
    for (const Simplex& s : simplices) by_dim_[static_cast<std::size_t>(s.dim())].push_back(s);
    for (auto& level : by_dim_) std::sort(level.begin(), level.end());
    // a simplex is maximal iff it is not a facet of any member one dimension up
    std::set<Simplex> non_maximal;
    for (int i = 1; i <= d; ++i)
        for (const Simplex& s : by_dim_[static_cast<std::size_t>(i)])
            for (const Simplex& f : s.facets()) non_maximal.insert(f);
    for (const auto& level : by_dim_)
        for (const Simplex& s : level)
            if (!non_maximal.count(s)) facets_.push_back(s);
}

SimplicialComplex SimplicialComplex::close(const std::vector<Simplex>& family) {
    std::set<Simplex> all;
    // breadth-first closure through codimension-1 faces
    std::vector<Simplex> frontier = family;
    while (!frontier.empty()) {
        std::vector<Simplex> next;
        for (const Simplex& s : frontier) {
            if (!all.insert(s).second) continue;
            if (s.dim() >= 1)
                for (Simplex f : s.facets()) next.push_back(std::move(f));
        }
        frontier = std::move(next);
    }
    SimplicialComplex X;
    X.build(std::move(all));
    return X;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<VertexId>>& facets) {
    std::vector<Simplex> family;
    family.reserve(facets.size());
    for (const auto& f : facets) {
        if (f.empty()) throw std::invalid_argument("from_facets: empty facet (the empty set is not a simplex)");
        family.emplace_back(f);
    }
    return close(family);
}

SimplicialComplex SimplicialComplex::from_closed(std::set<Simplex> simplices) {
    SimplicialComplex X;
    X.build(std::move(simplices));
    return X;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    int d = s.dim();
    if (d < 0 || d > dim()) return false;
    const auto& level = by_dim_[static_cast<std::size_t>(d)];
    return std::binary_search(level.begin(), level.end(), s);
}

const std::vector<Simplex>& SimplicialComplex::simplices_of_dim(int i) const {
    static const std::vector<Simplex> kEmpty;
    if (i < 0 || i > dim()) return kEmpty;
    return by_dim_[static_cast<std::size_t>(i)];
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
    std::vector<Simplex> out;
    out.reserve(total_);
    for (const auto& level : by_dim_) out.insert(out.end(), level.begin(), level.end());
    return out;
}

std::vector<VertexId> SimplicialComplex::vertices() const {
    std::vector<VertexId> out;
    for (const Simplex& s : simplices_of_dim(0)) out.push_back(s.vertices()[0]);
    return out;
}

std::size_t SimplicialComplex::vertex_count() const { return simplices_of_dim(0).size(); }

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int i = 0; i <= dim(); ++i) {
        long count = static_cast<long>(simplices_of_dim(i).size());
        chi += (i % 2 == 0) ? count : -count;
    }
    return chi;
}

bool SimplicialComplex::is_downward_closed() const {
    for (int i = 1; i <= dim(); ++i)
        for (const Simplex& s : simplices_of_dim(i))
            for (const Simplex& f : s.facets())
                if (!contains(f)) return false;
    return true;
}

SimplicialComplex skeleton(const SimplicialComplex& X, int l) {
    std::set<Simplex> kept;
    for (int i = 0; i <= std::min(l, X.dim()); ++i)
        for (const Simplex& s : X.simplices_of_dim(i)) kept.insert(s);
    return SimplicialComplex::from_closed(std::move(kept));
}

SimplicialComplex induced(const SimplicialComplex& X, const std::set<VertexId>& U) {
    std::set<Simplex> kept;
    for (int i = 0; i <= X.dim(); ++i)
        for (const Simplex& s : X.simplices_of_dim(i)) {
            bool inside = true;
            for (VertexId v : s.vertices())
                if (!U.count(v)) { inside = false; break; }
            if (inside) kept.insert(s);
        }
    return SimplicialComplex::from_closed(std::move(kept));
}

SimplicialComplex complex_union(const SimplicialComplex& X, const SimplicialComplex& Y) {
    std::set<Simplex> all;
    for (const Simplex& s : X.all_simplices()) all.insert(s);
    for (const Simplex& s : Y.all_simplices()) all.insert(s);
    return SimplicialComplex::from_closed(std::move(all));
}

SimplicialComplex complex_intersection(const SimplicialComplex& X, const SimplicialComplex& Y) {
    std::set<Simplex> common;
    for (int i = 0; i <= std::min(X.dim(), Y.dim()); ++i)
        for (const Simplex& s : X.simplices_of_dim(i))
            if (Y.contains(s)) common.insert(s);
    return SimplicialComplex::from_closed(std::move(common));
}

SimplicialComplex link(const SimplicialComplex& X, VertexId v) {
    if (!X.contains(Simplex{v})) throw std::invalid_argument("link: vertex not in complex");
    std::set<Simplex> out;
    for (int i = 1; i <= X.dim(); ++i)
        for (const Simplex& s : X.simplices_of_dim(i))
            if (s.contains(v)) out.insert(s.without_vertex(v));
    return SimplicialComplex::from_closed(std::move(out));
}

}  // namespace nervekit
