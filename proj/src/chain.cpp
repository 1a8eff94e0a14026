#include "nervekit/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace nervekit {

FieldScalar Chain::coefficient(const Simplex& s, const FieldSpec& field) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? field.zero() : it->second;
}

void Chain::add_term(const Simplex& s, const FieldScalar& value, const FieldSpec& field) {
    if (s.dim() != dim_) throw std::invalid_argument("Chain::add_term: dimension mismatch");
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        if (!field.is_zero(value)) terms_.emplace(s, value);
        return;
    }
    FieldScalar next = field.add(it->second, value);
    if (field.is_zero(next))
        terms_.erase(it);
    else
        it->second = std::move(next);
}

Chain unit_chain(const Simplex& s, const FieldSpec& field) {
    Chain c(s.dim());
    c.add_term(s, field.one(), field);
    return c;
}

Chain chain_add(const Chain& a, const Chain& b, const FieldSpec& field) {
    if (a.dim() != b.dim()) throw std::invalid_argument("chain_add: dimension mismatch");
    Chain out = a;
    for (const auto& [s, v] : b.terms()) out.add_term(s, v, field);
    return out;
}

Chain chain_scale(const FieldScalar& factor, const Chain& a, const FieldSpec& field) {
    Chain out(a.dim());
    for (const auto& [s, v] : a.terms()) out.add_term(s, field.mul(factor, v), field);
    return out;
}

Chain boundary(const Chain& c, const FieldSpec& field) {
    Chain out(c.dim() - 1);
    if (c.dim() == 0) return out;
    for (const auto& [s, v] : c.terms()) {
        FieldScalar sign = field.one();
        for (int i = 0; i <= s.dim(); ++i) {
            out.add_term(s.face_dropping(i), field.mul(sign, v), field);
            sign = field.neg(sign);
        }
    }
    return out;
}

FieldScalar augmentation(const Chain& c, const FieldSpec& field) {
    FieldScalar sum = field.zero();
    for (const auto& [s, v] : c.terms()) sum = field.add(sum, v);
    return sum;
}

bool is_cycle(const Chain& c, const FieldSpec& field) {
    if (c.dim() == 0) return field.is_zero(augmentation(c, field));
    return boundary(c, field).is_zero();
}

SimplicialComplex supporting_complex(const Chain& c) {
    std::vector<Simplex> family;
    family.reserve(c.terms().size());
    for (const auto& [s, v] : c.terms()) family.push_back(s);
    return SimplicialComplex::close(family);
}

SparseMatrix boundary_matrix(const SimplicialComplex& X, int i, const FieldSpec& field, bool augmented) {
    if (i < 0 || i > X.dim()) throw std::invalid_argument("boundary_matrix: dimension out of range");
    const auto& cols = X.simplices_of_dim(i);
    if (i == 0) {
        SparseMatrix M(augmented ? 1 : 0, static_cast<int>(cols.size()));
        if (augmented)
            for (int c = 0; c < static_cast<int>(cols.size()); ++c) M.set(0, c, field.one(), field);
        return M;
    }
    const auto& rows = X.simplices_of_dim(i - 1);
    SparseMatrix M(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        FieldScalar sign = field.one();
        for (int t = 0; t <= i; ++t) {
            Simplex face = cols[static_cast<std::size_t>(c)].face_dropping(t);
            auto it = std::lower_bound(rows.begin(), rows.end(), face);
            M.set(static_cast<int>(it - rows.begin()), c, sign, field);
            sign = field.neg(sign);
        }
    }
    return M;
}

std::vector<FieldScalar> chain_to_vector(const SimplicialComplex& X, const Chain& c, const FieldSpec& field) {
    const auto& basis = X.simplices_of_dim(c.dim());
    std::vector<FieldScalar> out(basis.size(), field.zero());
    for (const auto& [s, v] : c.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), s);
        if (it == basis.end() || !(*it == s))
            throw std::invalid_argument("chain_to_vector: chain not supported in the complex");
        out[static_cast<std::size_t>(it - basis.begin())] = v;
    }
    return out;
}

Chain vector_to_chain(const SimplicialComplex& X, int dim, const std::vector<FieldScalar>& coeffs,
                      const FieldSpec& field) {
    const auto& basis = X.simplices_of_dim(dim);
    if (coeffs.size() != basis.size()) throw std::invalid_argument("vector_to_chain: dimension mismatch");
    Chain c(dim);
    for (std::size_t i = 0; i < basis.size(); ++i) c.add_term(basis[i], coeffs[i], field);
    return c;
}

}  // namespace nervekit
