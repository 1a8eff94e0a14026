#pragma once

#include "nervekit/field.hpp"
#include "nervekit/simplex.hpp"
#include "nervekit/sparse_matrix.hpp"

#include <map>

namespace nervekit {

/// A formal linear combination of simplices of one dimension, over the
/// canonical (ascending vertex order) orientation. Zero coefficients are
/// never stored.
class Chain {
public:
    explicit Chain(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    const std::map<Simplex, FieldScalar>& terms() const { return terms_; }

    FieldScalar coefficient(const Simplex& s, const FieldSpec& field) const;
    /// Accumulates value onto the simplex's coefficient, dropping zeros.
    void add_term(const Simplex& s, const FieldScalar& value, const FieldSpec& field);

    bool operator==(const Chain& other) const { return dim_ == other.dim_ && terms_ == other.terms_; }

private:
    int dim_;
    std::map<Simplex, FieldScalar> terms_;
};

Chain unit_chain(const Simplex& s, const FieldSpec& field);
Chain chain_add(const Chain& a, const Chain& b, const FieldSpec& field);
Chain chain_scale(const FieldScalar& factor, const Chain& a, const FieldSpec& field);

/// Boundary under the sign convention
///   d[v0..vk] = sum_i (-1)^i [v0..\hat{v_i}..vk]   (ascending tuples).
/// A 0-chain maps to the zero chain of dimension -1; its augmentation is
/// exposed separately.
Chain boundary(const Chain& c, const FieldSpec& field);

/// Sum of coefficients (the image under the augmentation map).
FieldScalar augmentation(const Chain& c, const FieldSpec& field);

/// Cycle test in the augmented complex: boundary zero, and for 0-chains a
/// zero coefficient sum.
bool is_cycle(const Chain& c, const FieldSpec& field);

/// Downward closure of the support (plus all faces).
SimplicialComplex supporting_complex(const Chain& c);

/// Matrix of d_i : C_i -> C_{i-1} with rows/columns in lexicographic simplex
/// order. With `augmented` set, i = 0 yields the 1 x n all-ones augmentation
/// row (otherwise a 0 x n matrix). Throws when i is outside 0..dim(X).
SparseMatrix boundary_matrix(const SimplicialComplex& X, int i, const FieldSpec& field, bool augmented);

/// Coefficient vector of c over simplices_of_dim(c.dim()) of X; throws if the
/// support is not contained in X.
std::vector<FieldScalar> chain_to_vector(const SimplicialComplex& X, const Chain& c, const FieldSpec& field);
Chain vector_to_chain(const SimplicialComplex& X, int dim, const std::vector<FieldScalar>& coeffs,
                      const FieldSpec& field);

}  // namespace nervekit
