#pragma once

#include "nervekit/batch.hpp"
#include "nervekit/cover.hpp"
#include "nervekit/field.hpp"

#include <string>
#include <vector>

namespace nervekit {

/// One tested subcollection: the reduced Betti number of its intersection or
/// union, at the degree the theorem requires to vanish.
struct HypothesisEntry {
    std::vector<int> subset;  // member indices
    int degree;
    int observed;
    bool pass;
};

struct HypothesisReport {
    std::string condition;  // "inter" or "union"
    std::vector<HypothesisEntry> entries;
    bool all_pass = true;

    /// True when at least one genuinely homological condition (degree >= 0)
    /// was evaluated; degree -1 entries only assert nonemptiness.
    bool non_vacuous() const;
};

/// Hypothesis side of the mixed nerve inequality: condition "inter" tests
/// betti(k - |s|) of the intersection for every nerve simplex s of dimension
/// at most k, condition "union" tests betti(|s| - 2) of the union for every
/// nerve simplex of dimension k+1 .. l. Requires -1 <= k <= l < |cover| and
/// that the members cover the host.
struct MixedHypotheses {
    HypothesisReport inter;
    HypothesisReport uni;
    bool all_pass() const { return inter.all_pass && uni.all_pass; }
};

MixedHypotheses check_mixed_hypotheses(const Cover& cover, int k, int l, const FieldSpec& field,
                                       ExecMode mode = default_exec_mode(),
                                       std::size_t member_cap = kDefaultMemberCap);

/// The inequality itself: betti_l(nerve) <= betti_l(host). Reported, never
/// asserted; a hypothesis-passing cover for which this fails would violate
/// the theorem.
struct MixedConclusion {
    int betti_nerve;
    int betti_host;
    bool holds;
};

MixedConclusion verify_mixed_conclusion(const Cover& cover, int l, const FieldSpec& field,
                                        std::size_t member_cap = kDefaultMemberCap);

/// Helly-type check: over every nonempty subcollection G of the cover
/// (nerve membership not required), small G test betti(k - |G|) of the
/// intersection, large G test betti(|G| - 2) of the union; the conclusion is
/// a nonempty total intersection. `max_subset_size` restricts which
/// subcollections are tested (the embedded presets cap it at d+1); by
/// default all are. Requires -1 <= k <= |cover| - 2.
struct HellyReport {
    HypothesisReport inter;
    HypothesisReport uni;
    bool hypotheses_pass = false;
    bool intersection_nonempty = false;
    bool theorem_violation = false;  // hypotheses pass yet the intersection is empty
};

struct HellyOptions {
    int max_subset_size = -1;  // -1: no restriction
    ExecMode mode = default_exec_mode();
    std::size_t member_cap = kDefaultMemberCap;
};

HellyReport helly_check(const Cover& cover, int k, const FieldSpec& field, const HellyOptions& options = {});

}  // namespace nervekit
