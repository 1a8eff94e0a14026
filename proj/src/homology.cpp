#include "nervekit/homology.hpp"

#include "nervekit/pseudomanifold.hpp"
#include "nervekit/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nervekit {

bool BettiVector::all_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 0; });
}

bool BettiVector::operator==(const BettiVector& other) const {
    int hi = std::max(max_degree(), other.max_degree());
    for (int i = -1; i <= hi; ++i)
        if (betti(i) != other.betti(i)) return false;
    return true;
}

std::string BettiVector::to_string() const {
    std::string out = "[";
    for (int i = -1; i <= max_degree(); ++i) {
        if (i > -1) out += " ";
        out += "b" + std::to_string(i) + "=" + std::to_string(betti(i));
    }
    return out + "]";
}

BettiVector reduced_betti(const SimplicialComplex& X, const FieldSpec& field) {
    if (X.empty()) return BettiVector();  // betti(-1) = 1 by convention
    int d = X.dim();
    // ranks of the augmented boundary maps d_0 .. d_d (d_{d+1} = 0)
    std::vector<int> ranks(static_cast<std::size_t>(d) + 2, 0);
    for (int i = 0; i <= d; ++i)
        ranks[static_cast<std::size_t>(i)] = rank(boundary_matrix(X, i, field, /*augmented=*/true), field);
    std::vector<int> values(static_cast<std::size_t>(d) + 2, 0);
    values[0] = 1 - ranks[0];  // degree -1: zero for any nonempty complex
    for (int i = 0; i <= d; ++i) {
        int n_i = static_cast<int>(X.simplices_of_dim(i).size());
        values[static_cast<std::size_t>(i) + 1] =
            (n_i - ranks[static_cast<std::size_t>(i)]) - ranks[static_cast<std::size_t>(i) + 1];
    }
    return BettiVector(std::move(values));
}

std::optional<Chain> fill(const SimplicialComplex& X, const Chain& z, const FieldSpec& field) {
    if (!is_cycle(z, field)) throw std::invalid_argument("fill: the given chain is not a cycle");
    int s = z.dim();
    // validates support containment as a side effect
    std::vector<FieldScalar> b = chain_to_vector(X, z, field);
    if (s + 1 > X.dim()) {
        if (z.is_zero()) return Chain(s + 1);
        return std::nullopt;
    }
    SparseMatrix D = boundary_matrix(X, s + 1, field, true);
    auto x = solve(D, b, field);
    if (!x) return std::nullopt;
    return vector_to_chain(X, s + 1, *x, field);
}

std::optional<Chain> fundamental_class(const SimplicialComplex& M, const FieldSpec& field) {
    PseudomanifoldReport report = check_pseudomanifold(M);
    if (!report.is_pseudomanifold())
        throw std::invalid_argument("fundamental_class: complex is not a pseudomanifold");
    int d = report.dimension;
    const auto& top = M.simplices_of_dim(d);

    // ridge coefficient of each top simplex: position of the dropped vertex
    // determines the sign under the canonical orientation
    auto ridge_sign = [&](const Simplex& facet, const Simplex& ridge) {
        FieldScalar sign = field.one();
        for (int i = 0; i <= facet.dim(); ++i) {
            if (facet.face_dropping(i) == ridge) return sign;
            sign = field.neg(sign);
        }
        throw std::logic_error("fundamental_class: ridge is not a face of the facet");
    };

    std::vector<FieldScalar> coeff(top.size(), field.zero());
    if (d == 0) {
        // exactly two points; the augmentation must cancel
        coeff[0] = field.one();
        coeff[1] = field.neg(field.one());
    } else {
        std::map<Simplex, std::vector<int>> ridge_cofaces;
        for (int i = 0; i < static_cast<int>(top.size()); ++i)
            for (const Simplex& r : top[static_cast<std::size_t>(i)].facets()) ridge_cofaces[r].push_back(i);
        // propagate orientations across the dual graph; the complex is
        // strongly connected so one sweep reaches every facet
        std::vector<bool> fixed(top.size(), false);
        coeff[0] = field.one();
        fixed[0] = true;
        std::vector<int> stack{0};
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            const Simplex& f = top[static_cast<std::size_t>(cur)];
            for (const Simplex& r : f.facets()) {
                for (int other : ridge_cofaces.at(r)) {
                    if (other == cur) continue;
                    // want coeff[cur]*sign_cur + coeff[other]*sign_other = 0
                    FieldScalar needed = field.neg(
                        field.mul(coeff[static_cast<std::size_t>(cur)],
                                  field.div(ridge_sign(f, r), ridge_sign(top[static_cast<std::size_t>(other)], r))));
                    if (!fixed[static_cast<std::size_t>(other)]) {
                        coeff[static_cast<std::size_t>(other)] = needed;
                        fixed[static_cast<std::size_t>(other)] = true;
                        stack.push_back(other);
                    } else if (!(coeff[static_cast<std::size_t>(other)] == needed)) {
                        return std::nullopt;  // orientation contradiction
                    }
                }
            }
        }
    }

    Chain z(d);
    for (std::size_t i = 0; i < top.size(); ++i) z.add_term(top[i], coeff[i], field);
    if (!is_cycle(z, field)) return std::nullopt;
    return z;
}

}  // namespace nervekit
