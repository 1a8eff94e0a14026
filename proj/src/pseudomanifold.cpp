#include "nervekit/pseudomanifold.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace nervekit {

PseudomanifoldReport check_pseudomanifold(const SimplicialComplex& M) {
    if (M.empty()) throw std::invalid_argument("check_pseudomanifold: empty complex");

    PseudomanifoldReport report;
    int d = M.dim();
    report.dimension = d;

    report.pure = true;
    for (const Simplex& f : M.facets())
        if (f.dim() != d) { report.pure = false; break; }

    const auto& top = M.simplices_of_dim(d);

    if (d == 0) {
        report.non_branching = top.size() == 2;
        report.strongly_connected = true;  // every pair of points shares the empty ridge
        return report;
    }

    // ridge -> indices of top-dimensional simplices containing it
    std::map<Simplex, std::vector<int>> ridge_cofaces;
    for (int i = 0; i < static_cast<int>(top.size()); ++i)
        for (const Simplex& r : top[static_cast<std::size_t>(i)].facets()) ridge_cofaces[r].push_back(i);

    report.non_branching = true;
    for (const Simplex& r : M.simplices_of_dim(d - 1)) {
        auto it = ridge_cofaces.find(r);
        if (it == ridge_cofaces.end() || it->second.size() != 2) { report.non_branching = false; break; }
    }

    // dual graph connectivity over shared ridges
    std::vector<std::vector<int>> adjacency(top.size());
    for (const auto& [r, cof] : ridge_cofaces)
        for (std::size_t a = 0; a < cof.size(); ++a)
            for (std::size_t b = a + 1; b < cof.size(); ++b) {
                adjacency[static_cast<std::size_t>(cof[a])].push_back(cof[b]);
                adjacency[static_cast<std::size_t>(cof[b])].push_back(cof[a]);
            }
    std::vector<bool> seen(top.size(), false);
    std::vector<int> stack;
    if (!top.empty()) { seen[0] = true; stack.push_back(0); }
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int nxt : adjacency[static_cast<std::size_t>(cur)])
            if (!seen[static_cast<std::size_t>(nxt)]) { seen[static_cast<std::size_t>(nxt)] = true; stack.push_back(nxt); }
    }
    report.strongly_connected = !top.empty();
    for (bool s : seen)
        if (!s) { report.strongly_connected = false; break; }

    return report;
}

}  // namespace nervekit
