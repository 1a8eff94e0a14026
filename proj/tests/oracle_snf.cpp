#include "oracle_snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace nervekit::testing {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// independent dense integer boundary matrix: rows = (i-1)-simplices (or the
// augmentation row for i = 0), columns = i-simplices, lexicographic order
IntMatrix integer_boundary_matrix(const SimplicialComplex& X, int i) {
    const auto& cols = X.simplices_of_dim(i);
    if (i == 0) {
        IntMatrix M(1, std::vector<BigInt>(cols.size(), 1));
        return M;
    }
    const auto& rows = X.simplices_of_dim(i - 1);
    IntMatrix M(rows.size(), std::vector<BigInt>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        int sign = 1;
        for (int t = 0; t <= i; ++t) {
            Simplex face = cols[c].face_dropping(t);
            auto it = std::lower_bound(rows.begin(), rows.end(), face);
            M[static_cast<std::size_t>(it - rows.begin())][c] = sign;
            sign = -sign;
        }
    }
    return M;
}

}  // namespace

std::vector<BigInt> snf_diagonal(IntMatrix M) {
    std::vector<BigInt> diagonal;
    if (M.empty() || M[0].empty()) return diagonal;
    std::size_t rows = M.size(), cols = M[0].size();
    std::size_t t = 0;

    while (t < rows && t < cols) {
        // locate a smallest-magnitude nonzero entry in the trailing submatrix
        std::size_t pr = t, pc = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (M[i][j] != 0 && (!found || abs_big(M[i][j]) < abs_big(M[pr][pc]))) {
                    pr = i; pc = j; found = true;
                }
        if (!found) break;
        std::swap(M[t], M[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(M[i][t], M[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            // reduce column t by the pivot
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (M[i][t] == 0) continue;
                BigInt q = M[i][t] / M[t][t];
                for (std::size_t j = t; j < cols; ++j) M[i][j] -= q * M[t][j];
                if (M[i][t] != 0) {  // remainder became the new, smaller pivot candidate
                    std::swap(M[t], M[i]);
                    clean = false;
                }
            }
            // reduce row t by the pivot
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (M[t][j] == 0) continue;
                BigInt q = M[t][j] / M[t][t];
                for (std::size_t i = t; i < rows; ++i) M[i][j] -= q * M[i][t];
                if (M[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(M[i][t], M[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: the pivot must divide every remaining entry
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols && clean; ++j)
                    if (M[i][j] % M[t][t] != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj) M[t][jj] += M[i][jj];
                        clean = false;
                    }
        }
        diagonal.push_back(abs_big(M[t][t]));
        ++t;
    }
    return diagonal;
}

int snf_rank(const IntMatrix& M, const FieldSpec& field) {
    std::vector<BigInt> diagonal = snf_diagonal(M);
    int rank = 0;
    for (const BigInt& d : diagonal) {
        if (d == 0) continue;
        if (field.kind() == FieldSpec::Kind::Q || d % field.characteristic() != 0) ++rank;
    }
    return rank;
}

BettiVector oracle_reduced_betti(const SimplicialComplex& X, const FieldSpec& field) {
    if (X.empty()) return BettiVector();
    int dim = X.dim();
    std::vector<int> ranks(static_cast<std::size_t>(dim) + 2, 0);
    for (int i = 0; i <= dim; ++i)
        ranks[static_cast<std::size_t>(i)] = snf_rank(integer_boundary_matrix(X, i), field);
    std::vector<int> values(static_cast<std::size_t>(dim) + 2, 0);
    values[0] = 1 - ranks[0];
    for (int i = 0; i <= dim; ++i) {
        int n_i = static_cast<int>(X.simplices_of_dim(i).size());
        values[static_cast<std::size_t>(i) + 1] =
            n_i - ranks[static_cast<std::size_t>(i)] - ranks[static_cast<std::size_t>(i) + 1];
    }
    return BettiVector(std::move(values));
}

}  // namespace nervekit::testing
