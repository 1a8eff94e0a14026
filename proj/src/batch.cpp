#include "nervekit/batch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nervekit {

bool parallel_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

ExecMode default_exec_mode() {
    return parallel_available() ? ExecMode::Parallel : ExecMode::Serial;
}

namespace {

std::vector<BettiVector> batch_serial(const std::vector<SimplicialComplex>& batch, const FieldSpec& field) {
    std::vector<BettiVector> out;
    out.reserve(batch.size());
    for (const SimplicialComplex& X : batch) out.push_back(reduced_betti(X, field));
    return out;
}

std::vector<BettiVector> batch_parallel(const std::vector<SimplicialComplex>& batch, const FieldSpec& field) {
#ifdef _OPENMP
    std::vector<BettiVector> out(batch.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(batch.size()); ++i)
        out[static_cast<std::size_t>(i)] = reduced_betti(batch[static_cast<std::size_t>(i)], field);
    return out;
#else
    return batch_serial(batch, field);
#endif
}

}  // namespace

std::vector<BettiVector> reduced_betti_batch(const std::vector<SimplicialComplex>& batch,
                                             const FieldSpec& field, ExecMode mode) {
    return mode == ExecMode::Parallel ? batch_parallel(batch, field) : batch_serial(batch, field);
}

}  // namespace nervekit
