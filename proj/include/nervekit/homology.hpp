#pragma once

#include "nervekit/chain.hpp"
#include "nervekit/field.hpp"
#include "nervekit/simplex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nervekit {

/// Reduced Betti numbers, indexed by degree -1 .. dim(X). Degrees outside the
/// stored range read as zero. The empty complex has betti(-1) = 1.
class BettiVector {
public:
    BettiVector() : values_{1} {}  // empty complex
    explicit BettiVector(std::vector<int> values_from_minus_one)
        : values_(std::move(values_from_minus_one)) {}

    int betti(int degree) const {
        int idx = degree + 1;
        if (idx < 0 || idx >= static_cast<int>(values_.size())) return 0;
        return values_[static_cast<std::size_t>(idx)];
    }
    int max_degree() const { return static_cast<int>(values_.size()) - 2; }
    bool all_zero() const;

    bool operator==(const BettiVector& other) const;
    std::string to_string() const;

private:
    std::vector<int> values_;  // index 0 holds degree -1
};

/// Reduced Betti numbers over the given field, using the augmented chain
/// complex (so betti(-1) = 1 exactly for the empty complex).
BettiVector reduced_betti(const SimplicialComplex& X, const FieldSpec& field);

/// A chain c in X with boundary z, or nullopt when z is not a boundary.
/// Throws std::invalid_argument when z is not a cycle (augmented convention
/// at dimension 0) or not supported in X. The choice of c is deterministic.
std::optional<Chain> fill(const SimplicialComplex& X, const Chain& z, const FieldSpec& field);

/// A cycle with a unit (+-1) coefficient on every top-dimensional simplex of
/// a pseudomanifold, produced by orientation propagation over the dual
/// graph; nullopt when no such cycle exists (non-orientable in odd or zero
/// characteristic). Throws std::invalid_argument unless M is a
/// pseudomanifold.
std::optional<Chain> fundamental_class(const SimplicialComplex& M, const FieldSpec& field);

}  // namespace nervekit
