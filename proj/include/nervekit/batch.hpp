#pragma once

#include "nervekit/field.hpp"
#include "nervekit/homology.hpp"
#include "nervekit/simplex.hpp"

#include <vector>

namespace nervekit {

/// Execution mode for the batch kernels. The theorem checkers fan the many
/// independent per-subcollection homology computations through these; results
/// are index-aligned with the inputs in both modes, so reports are identical.
enum class ExecMode { Serial, Parallel };

/// Parallel when built with OpenMP, Serial otherwise.
ExecMode default_exec_mode();
bool parallel_available();

/// Reduced Betti vectors for a batch of complexes. The Serial variant is the
/// reference implementation; the Parallel variant distributes the batch over
/// an OpenMP loop and must agree with it entry for entry.
std::vector<BettiVector> reduced_betti_batch(const std::vector<SimplicialComplex>& batch,
                                             const FieldSpec& field, ExecMode mode);

}  // namespace nervekit
