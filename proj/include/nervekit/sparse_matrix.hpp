#pragma once

#include "nervekit/field.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace nervekit {

/// A sparse matrix over a coefficient field. Entries that become zero are
/// never stored. Treated as immutable once built; all eliminations work on
/// internal copies.
class SparseMatrix {
public:
    SparseMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }

    /// Sets entry (r, c); a zero value erases. Bounds-checked.
    void set(int r, int c, FieldScalar value, const FieldSpec& field);
    FieldScalar get(int r, int c, const FieldSpec& field) const;

    const std::map<std::pair<int, int>, FieldScalar>& entries() const { return entries_; }

    SparseMatrix transpose() const;
    std::vector<FieldScalar> apply(const std::vector<FieldScalar>& x, const FieldSpec& field) const;

private:
    int rows_, cols_;
    std::map<std::pair<int, int>, FieldScalar> entries_;
};

/// Rank over the given field, by exact Gaussian elimination with
/// deterministic pivoting (columns in natural order; pivot row of minimal
/// fill, ties to the lowest index).
int rank(const SparseMatrix& M, const FieldSpec& field);

/// Some x with Mx = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero under the natural column order, so the choice
/// is deterministic. Throws std::invalid_argument on a dimension mismatch.
std::optional<std::vector<FieldScalar>> solve(const SparseMatrix& M,
                                              const std::vector<FieldScalar>& b,
                                              const FieldSpec& field);

int nullspace_dim(const SparseMatrix& M, const FieldSpec& field);

}  // namespace nervekit
