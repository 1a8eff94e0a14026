#pragma once

#include "nervekit/homology.hpp"
#include "nervekit/nerve_checks.hpp"
#include "nervekit/sperner_checks.hpp"

#include <string>

namespace nervekit {

/// Plain-text and JSON renderings of the report structs. All output is
/// deterministic: fixed field order, no timestamps, LF line endings.

std::string render_betti_table(const std::string& name, const BettiVector& betti, const FieldSpec& field,
                               bool as_json);

std::string render_hypothesis_report(const HypothesisReport& report);

std::string render_mixed(const std::string& name, int k, int l, const FieldSpec& field,
                         const MixedHypotheses& hyp, const MixedConclusion& conclusion, bool as_json);

std::string render_helly(const std::string& name, int k, const FieldSpec& field, const HellyReport& report,
                         bool as_json);

std::string render_meshulam(const std::string& name, const FieldSpec& field, const MeshulamReport& report,
                            bool as_json);
std::string render_remixed(const std::string& name, int k, const FieldSpec& field,
                           const RemixedReport& report, bool as_json);
std::string render_isolated(const std::string& name, const FieldSpec& field, const IsolatedReport& report,
                            bool as_json);
std::string render_discrete(const std::string& name, const FieldSpec& field, const DiscreteReport& report,
                            bool as_json);
std::string render_polytopal(const std::string& name, const FieldSpec& field, const PolytopalReport& report,
                             bool as_json);

std::string render_kill(const std::string& name, int d, const FieldSpec& field, const BettiVector& before,
                        const BettiVector& after, bool as_json);

}  // namespace nervekit
