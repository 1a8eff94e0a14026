#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nervekit {

/// Aggregated result of one randomized property run. A correct
/// implementation never reports a violation; hypothesis-sharpness witnesses
/// land in `notes`.
struct PropertyOutcome {
    std::string name;
    long instances = 0;           // generated instances
    long evaluations = 0;         // individual theorem checks
    long hypothesis_passes = 0;   // checks whose hypotheses all passed
    long non_vacuous_passes = 0;  // passes with at least one degree >= 0 condition
    long violations = 0;          // hypothesis passes with a failing conclusion
    std::map<std::string, long> counters;
    std::vector<std::string> notes;
};

std::string render_outcome(const PropertyOutcome& outcome);

inline constexpr std::uint64_t kDefaultSearchSeed = 1729;

/// Mixed nerve inequality over seeded random covers, every admissible (k, l),
/// over F2 and Q. When `min_stratum` is positive, extra covers are generated
/// past `covers` until both the k = -1 and the k = l strata have at least
/// that many covers with a non-vacuous hypothesis pass.
PropertyOutcome mixed_nerve_property(std::uint64_t seed, long covers, long min_stratum = 0);

/// Homology killing over seeded random complexes, d in {1, 2}, over F2, F3
/// and Q; the construction's postconditions are re-verified externally and
/// idempotence is checked.
PropertyOutcome killing_property(std::uint64_t seed, long complexes);

/// Union acyclicity from intersection acyclicity, over seeded random
/// collections of subcomplexes.
PropertyOutcome union_acyclicity_property(std::uint64_t seed, long instances);

/// The colour-support subcomplexes of the barycentric subdivision have the
/// homology of the colour-induced subcomplexes, for every nonempty colour
/// set, over F2 and Q.
PropertyOutcome colour_union_property(std::uint64_t seed, long instances);

/// Helly-type check over seeded random covers and every admissible k.
PropertyOutcome helly_property(std::uint64_t seed, long covers);

/// The rainbow checkers (plain, interpolated for every admissible k,
/// isolated vertex for every eligible vertex, discrete when applicable) over
/// seeded coloured complexes, F2 and Q.
PropertyOutcome meshulam_family_property(std::uint64_t seed, long instances);

/// The polytopal pipeline over seeded coloured complexes and small pattern
/// pseudomanifolds, including the structural reduction to the plain rainbow
/// checker for simplex-boundary patterns.
PropertyOutcome polytopal_property(std::uint64_t seed, long instances);

/// The support-counting bound on seeded cone chains over random
/// pseudomanifold boundaries.
PropertyOutcome count_lemma_property(std::uint64_t seed, long chains);

/// Deterministic hypothesis-sharpness witnesses: the banded torus (all
/// interpolated hypotheses pass except the top homology, no rainbow
/// simplex) and the three-edge circle cover (only the full-collection union
/// hypothesis fails, empty intersection).
std::vector<PropertyOutcome> sharpness_witnesses();

}  // namespace nervekit
