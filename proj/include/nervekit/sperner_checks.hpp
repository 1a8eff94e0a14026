#pragma once

#include "nervekit/batch.hpp"
#include "nervekit/chain.hpp"
#include "nervekit/coloured.hpp"
#include "nervekit/field.hpp"
#include "nervekit/nerve_checks.hpp"
#include "nervekit/pseudomanifold.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nervekit {

/// Rainbow-existence check: betti(|S|-2) of the colour-induced subcomplex
/// must vanish for every nonempty colour set S; when all do, a rainbow
/// simplex must exist. The entries' subsets hold colour indices.
struct MeshulamReport {
    HypothesisReport hypotheses;
    std::vector<Simplex> rainbows;
    bool theorem_violation = false;  // hypotheses pass, no rainbow simplex
};

MeshulamReport check_meshulam(const ColouredComplex& K, const FieldSpec& field,
                              ExecMode mode = default_exec_mode());

/// Interpolated variant: betti(m-1) of the whole complex must vanish, small
/// colour sets test the complement-induced subcomplex, large ones the
/// not-spanning subcomplex. k = m-1 coincides with check_meshulam, k = -1
/// keeps only the not-spanning conditions. Requires -1 <= k <= m-1.
struct RemixedReport {
    HypothesisEntry top;  // betti(m-1) of the whole complex
    HypothesisReport inter;
    HypothesisReport uni;
    std::vector<Simplex> rainbows;
    bool hypotheses_pass = false;
    bool theorem_violation = false;
};

RemixedReport check_remixed(const ColouredComplex& K, int k, const FieldSpec& field,
                            ExecMode mode = default_exec_mode());

/// Same hypotheses as check_meshulam; when they pass, some rainbow simplex
/// must contain the vertex v. Requires v to be an isolated point of the
/// subcomplex induced by its own colour class (throws otherwise).
struct IsolatedReport {
    VertexId vertex;
    HypothesisReport hypotheses;
    std::vector<Simplex> rainbows_with_vertex;
    bool theorem_violation = false;
};

IsolatedReport check_isolated(const ColouredComplex& K, VertexId v, const FieldSpec& field,
                              ExecMode mode = default_exec_mode());

/// Same hypotheses again; when every colour class is 0-dimensional (throws
/// otherwise) and they pass, every simplex must extend to a rainbow simplex.
struct DiscreteReport {
    HypothesisReport hypotheses;
    std::vector<Simplex> non_extending;  // simplices with no rainbow extension
    bool theorem_violation = false;
};

DiscreteReport check_discrete(const ColouredComplex& K, const FieldSpec& field,
                              ExecMode mode = default_exec_mode());

/// Support-counting check: for a chain c whose boundary's supporting complex
/// is a pseudomanifold with n vertices, |support(c)| >= n - dim(c). Also
/// exposes the components of the facet-adjacency graph of the support and
/// the unique component carrying the boundary. Throws when the supporting
/// complex of the boundary is not a pseudomanifold.
struct CountLemmaReport {
    int n = 0;  // vertices of the boundary's supporting complex
    int s = 0;  // dim(c)
    std::size_t support = 0;
    bool bound_holds = false;
    std::vector<std::vector<Simplex>> components;  // of the support graph G(c)
    int boundary_component = -1;                   // index of the unique component with nonzero boundary
    bool unique_boundary_component = false;
};

CountLemmaReport count_lemma_check(const Chain& c, const FieldSpec& field);

/// The polytopal pipeline. Preconditions: the pattern complex M is a
/// pseudomanifold with vertex set exactly {0..m} (vertex i <-> colour i), it
/// has a fundamental class over the field, every simplex of M has an
/// acyclic-enough carrier K[union of its colour classes], and betti(d) of K
/// vanishes. Two independent results must agree with the bound m - d: the
/// direct count of (d+1)-dimensional colourful simplices, and the support of
/// the chain obtained by building the carrier chain map, transporting the
/// fundamental class, filling it in K, and projecting through the colour
/// map. The projection composed with the carrier map is verified to be the
/// identity.
struct PolytopalReport {
    bool preconditions_pass = false;
    std::string precondition_failure;  // empty when preconditions pass
    HypothesisReport carrier_hypotheses;
    int betti_d_of_K = -1;
    bool fundamental_class_exists = false;

    long required = 0;  // m - d
    long colourful_count = -1;
    long support_count = -1;
    bool identity_verified = false;
    CountLemmaReport count_report;
    bool count_holds = false;
    bool support_holds = false;
    bool theorem_violation = false;
};

PolytopalReport polytopal_meshulam(const ColouredComplex& K, const SimplicialComplex& M,
                                   const FieldSpec& field, ExecMode mode = default_exec_mode());

}  // namespace nervekit
