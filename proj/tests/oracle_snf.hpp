#pragma once

#include "nervekit/field.hpp"
#include "nervekit/homology.hpp"
#include "nervekit/simplex.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace nervekit::testing {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Diagonal of the Smith normal form (invariant factors, possibly with
/// trailing zeros suppressed).
std::vector<BigInt> snf_diagonal(IntMatrix M);

/// Rank over Q (nonzero invariant factors) and over F_p (factors not
/// divisible by p) read off the Smith normal form.
int snf_rank(const IntMatrix& M, const FieldSpec& field);

/// Reduced Betti numbers computed from integer boundary matrices through the
/// Smith normal form only; fully independent of the library's elimination.
BettiVector oracle_reduced_betti(const SimplicialComplex& X, const FieldSpec& field);

}  // namespace nervekit::testing
