#include "nervekit/sperner_checks.hpp"

#include "nervekit/constructive.hpp"
#include "nervekit/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nervekit {

namespace {

// batch runner shared by the colour-set hypothesis suites
struct ColourBatch {
    std::vector<SimplicialComplex> complexes;
    std::vector<std::vector<int>> subsets;
    std::vector<int> degrees;

    void add(std::vector<int> colours, SimplicialComplex X, int degree) {
        subsets.push_back(std::move(colours));
        complexes.push_back(std::move(X));
        degrees.push_back(degree);
    }

    HypothesisReport evaluate(std::string condition, const FieldSpec& field, ExecMode mode) const {
        HypothesisReport report;
        report.condition = std::move(condition);
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
        return report;
    }
};

HypothesisReport meshulam_hypotheses(const ColouredComplex& K, const FieldSpec& field, ExecMode mode) {
    int m = K.max_colour();
    ColourBatch batch;
    for (ColourMask mask = 1; mask < (ColourMask{1} << (m + 1)); ++mask)
        batch.add(colours_of_mask(mask), sub_by_colours(K, mask), mask_size(mask) - 2);
    return batch.evaluate("colour-induced", field, mode);
}

}  // namespace

MeshulamReport check_meshulam(const ColouredComplex& K, const FieldSpec& field, ExecMode mode) {
    MeshulamReport report;
    report.hypotheses = meshulam_hypotheses(K, field, mode);
    report.rainbows = rainbow_simplices(K);
    report.theorem_violation = report.hypotheses.all_pass && report.rainbows.empty();
    return report;
}

RemixedReport check_remixed(const ColouredComplex& K, int k, const FieldSpec& field, ExecMode mode) {
    int m = K.max_colour();
    if (!(-1 <= k && k <= m - 1))
        throw std::invalid_argument("check_remixed: need -1 <= k <= m - 1");

    RemixedReport report;
    ColourMask full = (ColourMask{1} << (m + 1)) - 1;

    report.top.subset = colours_of_mask(full);
    report.top.degree = m - 1;
    report.top.observed = reduced_betti(K.complex(), field).betti(m - 1);
    report.top.pass = report.top.observed == 0;

    ColourBatch inter_batch, union_batch;
    for (ColourMask mask = 1; mask < full; ++mask) {  // proper nonempty subsets
        int size = mask_size(mask);
        if (1 <= size && size <= k + 1)
            inter_batch.add(colours_of_mask(mask), sub_by_colours(K, full & ~mask), k - size);
        else if (k + 2 <= size && size <= m)
            union_batch.add(colours_of_mask(mask), not_spanning_colours(K, mask), size - 2);
    }
    report.inter = inter_batch.evaluate("complement-induced", field, mode);
    report.uni = union_batch.evaluate("not-spanning", field, mode);

    report.hypotheses_pass = report.top.pass && report.inter.all_pass && report.uni.all_pass;
    report.rainbows = rainbow_simplices(K);
    report.theorem_violation = report.hypotheses_pass && report.rainbows.empty();
    return report;
}

IsolatedReport check_isolated(const ColouredComplex& K, VertexId v, const FieldSpec& field, ExecMode mode) {
    int colour = K.colour_of(v);  // throws on unknown vertex
    // isolated on its colour: no edge joins v to another vertex of the same colour
    for (const Simplex& e : K.complex().simplices_of_dim(1))
        if (e.contains(v)) {
            VertexId other = e.vertices()[0] == v ? e.vertices()[1] : e.vertices()[0];
            if (K.colour_of(other) == colour)
                throw std::invalid_argument("check_isolated: vertex " + std::to_string(v) +
                                            " has a same-colour neighbour");
        }

    IsolatedReport report;
    report.vertex = v;
    report.hypotheses = meshulam_hypotheses(K, field, mode);
    for (const Simplex& r : rainbow_simplices(K))
        if (r.contains(v)) report.rainbows_with_vertex.push_back(r);
    report.theorem_violation = report.hypotheses.all_pass && report.rainbows_with_vertex.empty();
    return report;
}

DiscreteReport check_discrete(const ColouredComplex& K, const FieldSpec& field, ExecMode mode) {
    for (int c = 0; c <= K.max_colour(); ++c)
        if (sub_by_colours(K, ColourMask{1} << c).dim() > 0)
            throw std::invalid_argument("check_discrete: colour class " + std::to_string(c) +
                                        " spans an edge");

    DiscreteReport report;
    report.hypotheses = meshulam_hypotheses(K, field, mode);
    std::vector<Simplex> rainbows = rainbow_simplices(K);
    for (int d = 0; d <= K.complex().dim(); ++d)
        for (const Simplex& s : K.complex().simplices_of_dim(d)) {
            bool extends = false;
            for (const Simplex& r : rainbows)
                if (s.is_face_of(r)) { extends = true; break; }
            if (!extends) report.non_extending.push_back(s);
        }
    report.theorem_violation = report.hypotheses.all_pass && !report.non_extending.empty();
    return report;
}

CountLemmaReport count_lemma_check(const Chain& c, const FieldSpec& field) {
    Chain bd = boundary(c, field);
    SimplicialComplex bd_support = supporting_complex(bd);
    if (bd_support.empty() || !check_pseudomanifold(bd_support).is_pseudomanifold())
        throw std::invalid_argument(
            "count_lemma_check: the supporting complex of the boundary is not a pseudomanifold");

    CountLemmaReport report;
    report.n = static_cast<int>(bd_support.vertex_count());
    report.s = c.dim();
    report.support = c.support_size();
    report.bound_holds = static_cast<long>(report.support) >= report.n - report.s;

    // support graph: simplices in the support of c, adjacent when they share
    // a codimension-1 face
    std::vector<Simplex> support;
    for (const auto& [s, v] : c.terms()) support.push_back(s);
    std::map<Simplex, std::vector<int>> facet_owners;
    for (int i = 0; i < static_cast<int>(support.size()); ++i)
        for (const Simplex& f : support[static_cast<std::size_t>(i)].facets())
            facet_owners[f].push_back(i);
    std::vector<int> component(support.size(), -1);
    int num_components = 0;
    for (std::size_t start = 0; start < support.size(); ++start) {
        if (component[start] != -1) continue;
        int id = num_components++;
        std::vector<std::size_t> stack{start};
        component[start] = id;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (const Simplex& f : support[cur].facets())
                for (int other : facet_owners[f])
                    if (component[static_cast<std::size_t>(other)] == -1) {
                        component[static_cast<std::size_t>(other)] = id;
                        stack.push_back(static_cast<std::size_t>(other));
                    }
        }
    }
    report.components.assign(static_cast<std::size_t>(num_components), {});
    for (std::size_t i = 0; i < support.size(); ++i)
        report.components[static_cast<std::size_t>(component[i])].push_back(support[i]);

    int with_boundary = 0;
    for (int id = 0; id < num_components; ++id) {
        Chain part(c.dim());
        for (const Simplex& s : report.components[static_cast<std::size_t>(id)])
            part.add_term(s, c.coefficient(s, field), field);
        bool nonzero_boundary =
            part.dim() == 0 ? !field.is_zero(augmentation(part, field)) : !boundary(part, field).is_zero();
        if (nonzero_boundary) {
            ++with_boundary;
            report.boundary_component = id;
        }
    }
    report.unique_boundary_component = with_boundary == 1;
    return report;
}

PolytopalReport polytopal_meshulam(const ColouredComplex& K, const SimplicialComplex& M,
                                   const FieldSpec& field, ExecMode mode) {
    PolytopalReport report;
    int m = K.max_colour();
    report.required = 1;  // patched below once d is known

    auto fail = [&](std::string why) {
        report.preconditions_pass = false;
        report.precondition_failure = std::move(why);
        return report;
    };

    // vertex set of the pattern complex must be exactly the colour indices
    std::vector<VertexId> mv = M.vertices();
    std::vector<VertexId> expected(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) expected[static_cast<std::size_t>(i)] = i;
    if (mv != expected)
        return fail("pattern complex vertices must be exactly the colour indices 0.." + std::to_string(m));

    PseudomanifoldReport pm = check_pseudomanifold(M);
    if (!pm.is_pseudomanifold()) return fail("pattern complex is not a pseudomanifold");
    int d = pm.dimension;
    report.required = m - d;

    std::optional<Chain> z = fundamental_class(M, field);
    report.fundamental_class_exists = z.has_value();
    if (!z) return fail("pattern complex has no fundamental class over " + field.name());

    // carrier acyclicity: betti(|sigma|-2) of K[colours of sigma] for every
    // simplex of the pattern complex
    {
        ColourBatch batch;
        for (int i = 0; i <= M.dim(); ++i)
            for (const Simplex& sigma : M.simplices_of_dim(i)) {
                ColourMask mask = 0;
                for (VertexId v : sigma.vertices()) mask |= ColourMask{1} << v;
                batch.add(colours_of_mask(mask), sub_by_colours(K, mask), i - 1);
            }
        report.carrier_hypotheses = batch.evaluate("carrier", field, mode);
    }
    if (!report.carrier_hypotheses.all_pass) return fail("carrier acyclicity fails (see hypotheses)");

    report.betti_d_of_K = reduced_betti(K.complex(), field).betti(d);
    if (report.betti_d_of_K != 0)
        return fail("betti(" + std::to_string(d) + ") of the coloured complex is " +
                    std::to_string(report.betti_d_of_K));

    report.preconditions_pass = true;

    // (a) direct enumeration
    report.colourful_count = static_cast<long>(colourful_simplices(K, d + 1).size());
    report.count_holds = report.colourful_count >= report.required;

    // (b) constructive pipeline
    CarrierAssignment carrier{M, [&](const Simplex& sigma) {
        ColourMask mask = 0;
        for (VertexId v : sigma.vertices()) mask |= ColourMask{1} << v;
        return sub_by_colours(K, mask);
    }};
    ChainMap f = build_chain_map(carrier, field, d);

    // the colour projection must invert the carrier map on the pattern chains
    ChainMap lambda = induced_chain_map(K.complex(), [&](VertexId v) { return K.colour_of(v); }, field);
    report.identity_verified = true;
    for (int i = 0; i <= M.dim(); ++i)
        for (const Simplex& sigma : M.simplices_of_dim(i))
            if (!(lambda.apply(f.image_of(sigma), field) == unit_chain(sigma, field))) {
                report.identity_verified = false;
                break;
            }

    Chain fz = f.apply(*z, field);
    auto filled = fill(K.complex(), fz, field);
    if (!filled)
        throw std::logic_error("polytopal_meshulam: filling failed although betti(d) of K vanishes");
    Chain projected = lambda.apply(*filled, field);
    report.count_report = count_lemma_check(projected, field);
    report.support_count = static_cast<long>(projected.support_size());
    report.support_holds = report.support_count >= report.required;

    report.theorem_violation =
        !(report.count_holds && report.support_holds && report.identity_verified &&
          report.count_report.bound_holds);
    return report;
}

}  // namespace nervekit
