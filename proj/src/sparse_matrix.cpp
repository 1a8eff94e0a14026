#include "nervekit/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace nervekit {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMatrix: negative dimension");
}

void SparseMatrix::set(int r, int c, FieldScalar value, const FieldSpec& field) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseMatrix::set: index out of range");
    if (field.is_zero(value))
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(value);
}

FieldScalar SparseMatrix::get(int r, int c, const FieldSpec& field) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? field.zero() : it->second;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix T(cols_, rows_);
    for (const auto& [rc, v] : entries_) T.entries_[{rc.second, rc.first}] = v;
    return T;
}

std::vector<FieldScalar> SparseMatrix::apply(const std::vector<FieldScalar>& x, const FieldSpec& field) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("SparseMatrix::apply: dimension mismatch");
    std::vector<FieldScalar> y(static_cast<std::size_t>(rows_), field.zero());
    for (const auto& [rc, v] : entries_) {
        const auto& xc = x[static_cast<std::size_t>(rc.second)];
        if (!field.is_zero(xc))
            y[static_cast<std::size_t>(rc.first)] = field.add(y[static_cast<std::size_t>(rc.first)], field.mul(v, xc));
    }
    return y;
}

namespace {

using SparseRow = std::map<int, FieldScalar>;

// Row-reduced elimination state. Columns are processed in natural order;
// pivot rows are normalised to 1 and eliminated from every other row, so
// back-substitution is a direct read-off.
struct Elimination {
    std::vector<SparseRow> rows;
    std::vector<int> pivot_col;  // per pivot row, aligned with pivot_rows
    std::vector<int> pivot_rows;
    std::vector<bool> used;

    Elimination(const SparseMatrix& M, const std::vector<FieldScalar>* b, int b_col, const FieldSpec& field)
        : rows(static_cast<std::size_t>(M.rows())), used(static_cast<std::size_t>(M.rows()), false) {
        for (const auto& [rc, v] : M.entries()) rows[static_cast<std::size_t>(rc.first)][rc.second] = v;
        if (b)
            for (std::size_t r = 0; r < b->size(); ++r)
                if (!field.is_zero((*b)[r])) rows[r][b_col] = (*b)[r];
    }

    void run(int num_cols, const FieldSpec& field) {
        for (int c = 0; c < num_cols; ++c) {
            // deterministic pivot: among unused rows with a nonzero in column
            // c, the sparsest one, ties to the lowest row index
            int pivot = -1;
            std::size_t best_nnz = 0;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (used[r]) continue;
                auto it = rows[r].find(c);
                if (it == rows[r].end()) continue;
                if (pivot < 0 || rows[r].size() < best_nnz) {
                    pivot = static_cast<int>(r);
                    best_nnz = rows[r].size();
                }
            }
            if (pivot < 0) continue;
            std::size_t p = static_cast<std::size_t>(pivot);
            used[p] = true;
            pivot_col.push_back(c);
            pivot_rows.push_back(pivot);
            // normalise pivot row
            FieldScalar inv = field.inv(rows[p].at(c));
            for (auto& [col, v] : rows[p]) v = field.mul(v, inv);
            // eliminate column c everywhere else
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == p) continue;
                auto it = rows[r].find(c);
                if (it == rows[r].end()) continue;
                FieldScalar factor = it->second;
                for (const auto& [col, v] : rows[p]) {
                    auto jt = rows[r].find(col);
                    FieldScalar cur = (jt == rows[r].end()) ? field.zero() : jt->second;
                    FieldScalar next = field.sub(cur, field.mul(factor, v));
                    if (field.is_zero(next)) {
                        if (jt != rows[r].end()) rows[r].erase(jt);
                    } else {
                        rows[r][col] = next;
                    }
                }
            }
        }
    }

    int rank() const { return static_cast<int>(pivot_col.size()); }
};

}  // namespace

int rank(const SparseMatrix& M, const FieldSpec& field) {
    Elimination e(M, nullptr, -1, field);
    e.run(M.cols(), field);
    return e.rank();
}

std::optional<std::vector<FieldScalar>> solve(const SparseMatrix& M,
                                              const std::vector<FieldScalar>& b,
                                              const FieldSpec& field) {
    if (static_cast<int>(b.size()) != M.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    const int b_col = M.cols();
    Elimination e(M, &b, b_col, field);
    e.run(M.cols(), field);  // never pivots on the augmented column
    // inconsistent iff some row reduced to (0 ... 0 | nonzero)
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        if (e.used[r]) continue;
        const auto& row = e.rows[r];
        if (row.size() == 1 && row.begin()->first == b_col) return std::nullopt;
    }
    std::vector<FieldScalar> x(static_cast<std::size_t>(M.cols()), field.zero());
    for (std::size_t k = 0; k < e.pivot_col.size(); ++k) {
        const auto& row = e.rows[static_cast<std::size_t>(e.pivot_rows[k])];
        auto it = row.find(b_col);
        if (it != row.end()) x[static_cast<std::size_t>(e.pivot_col[k])] = it->second;
    }
    return x;
}

int nullspace_dim(const SparseMatrix& M, const FieldSpec& field) {
    return M.cols() - rank(M, field);
}

}  // namespace nervekit
