#include "nervekit/nerve_checks.hpp"

#include "nervekit/homology.hpp"

#include <stdexcept>

namespace nervekit {

bool HypothesisReport::non_vacuous() const {
    for (const auto& e : entries)
        if (e.degree >= 0) return true;
    return false;
}

namespace {

// Evaluates a list of (complex, degree) conditions through the batch kernel
// and appends the outcomes to a report.
struct ConditionBatch {
    std::vector<SimplicialComplex> complexes;
    std::vector<std::vector<int>> subsets;
    std::vector<int> degrees;

    void add(std::vector<int> subset, SimplicialComplex X, int degree) {
        subsets.push_back(std::move(subset));
        complexes.push_back(std::move(X));
        degrees.push_back(degree);
    }

    void evaluate_into(HypothesisReport& report, const FieldSpec& field, ExecMode mode) const {
        std::vector<BettiVector> betti = reduced_betti_batch(complexes, field, mode);
        for (std::size_t i = 0; i < complexes.size(); ++i) {
            HypothesisEntry entry;
            entry.subset = subsets[i];
            entry.degree = degrees[i];
            entry.observed = betti[i].betti(degrees[i]);
            entry.pass = entry.observed == 0;
            if (!entry.pass) report.all_pass = false;
            report.entries.push_back(std::move(entry));
        }
    }
};

}  // namespace

MixedHypotheses check_mixed_hypotheses(const Cover& cover, int k, int l, const FieldSpec& field,
                                       ExecMode mode, std::size_t member_cap) {
    int n = static_cast<int>(cover.size());
    if (!(-1 <= k && k <= l && l < n))
        throw std::invalid_argument("check_mixed_hypotheses: need -1 <= k <= l < |cover|");
    if (!cover.covers_host())
        throw std::invalid_argument("check_mixed_hypotheses: members do not cover the host");

    SimplicialComplex N = nerve(cover, member_cap);

    ConditionBatch inter_batch, union_batch;
    // the theorem quantifies over nerve simplices only; masks run in
    // binary-counter order for deterministic reports
    for (MemberMask mask = 1; mask < (MemberMask{1} << n); ++mask) {
        std::vector<int> indices = mask_to_indices(mask);
        std::vector<VertexId> ids(indices.begin(), indices.end());
        if (!N.contains(Simplex(ids))) continue;
        int size = static_cast<int>(indices.size());
        int dim = size - 1;
        if (dim <= k)
            inter_batch.add(indices, cover.member_intersection(mask), k - size);
        else if (dim <= l)
            union_batch.add(indices, cover.member_union(mask), size - 2);
    }

    MixedHypotheses out;
    out.inter.condition = "inter";
    out.uni.condition = "union";
    inter_batch.evaluate_into(out.inter, field, mode);
    union_batch.evaluate_into(out.uni, field, mode);
    return out;
}

MixedConclusion verify_mixed_conclusion(const Cover& cover, int l, const FieldSpec& field,
                                        std::size_t member_cap) {
    if (!cover.covers_host())
        throw std::invalid_argument("verify_mixed_conclusion: members do not cover the host");
    SimplicialComplex N = nerve(cover, member_cap);
    MixedConclusion out;
    out.betti_nerve = reduced_betti(N, field).betti(l);
    out.betti_host = reduced_betti(cover.host, field).betti(l);
    out.holds = out.betti_nerve <= out.betti_host;
    return out;
}

HellyReport helly_check(const Cover& cover, int k, const FieldSpec& field, const HellyOptions& options) {
    int n = static_cast<int>(cover.size());
    if (!(-1 <= k && k <= n - 2))
        throw std::invalid_argument("helly_check: need -1 <= k <= |cover| - 2");
    if (cover.size() > options.member_cap)
        throw std::invalid_argument("helly_check: cover size above the member cap");
    int max_size = options.max_subset_size < 0 ? n : options.max_subset_size;

    ConditionBatch inter_batch, union_batch;
    for (MemberMask mask = 1; mask < (MemberMask{1} << n); ++mask) {
        std::vector<int> indices = mask_to_indices(mask);
        int size = static_cast<int>(indices.size());
        if (size > max_size) continue;
        if (size <= k + 1)
            inter_batch.add(indices, cover.member_intersection(mask), k - size);
        else
            union_batch.add(indices, cover.member_union(mask), size - 2);
    }

    HellyReport out;
    out.inter.condition = "inter";
    out.uni.condition = "union";
    inter_batch.evaluate_into(out.inter, field, options.mode);
    union_batch.evaluate_into(out.uni, field, options.mode);
    out.hypotheses_pass = out.inter.all_pass && out.uni.all_pass;
    out.intersection_nonempty = !cover.member_intersection((MemberMask{1} << n) - 1).empty();
    out.theorem_violation = out.hypotheses_pass && !out.intersection_nonempty;
    return out;
}

}  // namespace nervekit
