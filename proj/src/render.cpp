#include "nervekit/render.hpp"

#include <json.hpp>

#include <sstream>

namespace nervekit {

using nlohmann::json;

namespace {

std::string subset_string(const std::vector<int>& subset) {
    std::string out = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(subset[i]);
    }
    return out + "}";
}

json betti_json(const BettiVector& b) {
    json out = json::object();
    for (int i = -1; i <= b.max_degree(); ++i) out[std::to_string(i)] = b.betti(i);
    return out;
}

json hypothesis_json(const HypothesisReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries)
        entries.push_back({{"subset", e.subset},
                           {"degree", e.degree},
                           {"observed", e.observed},
                           {"pass", e.pass}});
    return json{{"condition", report.condition}, {"all_pass", report.all_pass}, {"entries", entries}};
}

std::string simplex_list_string(const std::vector<Simplex>& simplices) {
    std::string out;
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        if (i) out += " ";
        out += simplices[i].to_string();
    }
    return out;
}

json simplex_list_json(const std::vector<Simplex>& simplices) {
    json out = json::array();
    for (const Simplex& s : simplices) out.push_back(s.vertices());
    return out;
}

}  // namespace

std::string render_betti_table(const std::string& name, const BettiVector& betti, const FieldSpec& field,
                               bool as_json) {
    if (as_json) {
        json j{{"name", name}, {"field", field.name()}, {"betti", betti_json(betti)}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "homology of " << name << " over " << field.name() << "\n";
    out << "degree  betti\n";
    for (int i = -1; i <= betti.max_degree(); ++i)
        out << (i < 0 ? std::string("-1") : " " + std::to_string(i)) << "      " << betti.betti(i) << "\n";
    return out.str();
}

std::string render_hypothesis_report(const HypothesisReport& report) {
    std::ostringstream out;
    out << "condition " << report.condition << ": " << (report.all_pass ? "PASS" : "FAIL") << "\n";
    for (const auto& e : report.entries)
        out << "  " << subset_string(e.subset) << "  betti(" << e.degree << ") = " << e.observed << "  "
            << (e.pass ? "ok" : "NONZERO") << "\n";
    return out.str();
}

std::string render_mixed(const std::string& name, int k, int l, const FieldSpec& field,
                         const MixedHypotheses& hyp, const MixedConclusion& conclusion, bool as_json) {
    if (as_json) {
        json j{{"name", name},
               {"k", k},
               {"l", l},
               {"field", field.name()},
               {"hypotheses",
                {{"inter", hypothesis_json(hyp.inter)}, {"union", hypothesis_json(hyp.uni)}}},
               {"conclusion",
                {{"betti_nerve", conclusion.betti_nerve},
                 {"betti_host", conclusion.betti_host},
                 {"holds", conclusion.holds}}},
               {"theorem_violation", hyp.all_pass() && !conclusion.holds}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "nerve check on " << name << "  (k = " << k << ", l = " << l << ", field = " << field.name()
        << ")\n";
    out << render_hypothesis_report(hyp.inter);
    out << render_hypothesis_report(hyp.uni);
    out << "conclusion: betti_" << l << "(nerve) = " << conclusion.betti_nerve << " <= " << "betti_" << l
        << "(host) = " << conclusion.betti_host << "  " << (conclusion.holds ? "HOLDS" : "FAILS") << "\n";
    if (hyp.all_pass() && !conclusion.holds) out << "THEOREM VIOLATION\n";
    return out.str();
}

std::string render_helly(const std::string& name, int k, const FieldSpec& field, const HellyReport& report,
                         bool as_json) {
    if (as_json) {
        json j{{"name", name},
               {"k", k},
               {"field", field.name()},
               {"hypotheses",
                {{"inter", hypothesis_json(report.inter)}, {"union", hypothesis_json(report.uni)}}},
               {"hypotheses_pass", report.hypotheses_pass},
               {"intersection_nonempty", report.intersection_nonempty},
               {"theorem_violation", report.theorem_violation}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "helly check on " << name << "  (k = " << k << ", field = " << field.name() << ")\n";
    out << render_hypothesis_report(report.inter);
    out << render_hypothesis_report(report.uni);
    out << "total intersection " << (report.intersection_nonempty ? "nonempty" : "EMPTY") << "\n";
    if (report.theorem_violation) out << "THEOREM VIOLATION\n";
    return out.str();
}

std::string render_meshulam(const std::string& name, const FieldSpec& field, const MeshulamReport& report,
                            bool as_json) {
    if (as_json) {
        json j{{"name", name},
               {"field", field.name()},
               {"hypotheses", hypothesis_json(report.hypotheses)},
               {"rainbow_count", report.rainbows.size()},
               {"rainbows", simplex_list_json(report.rainbows)},
               {"theorem_violation", report.theorem_violation}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "rainbow check on " << name << "  (field = " << field.name() << ")\n";
    out << render_hypothesis_report(report.hypotheses);
    out << "rainbow simplices: " << report.rainbows.size();
    if (!report.rainbows.empty()) out << "  " << simplex_list_string(report.rainbows);
    out << "\n";
    if (report.theorem_violation) out << "THEOREM VIOLATION\n";
    return out.str();
}

std::string render_remixed(const std::string& name, int k, const FieldSpec& field,
                           const RemixedReport& report, bool as_json) {
    if (as_json) {
        json j{{"name", name},
               {"k", k},
               {"field", field.name()},
               {"top", {{"degree", report.top.degree}, {"observed", report.top.observed}, {"pass", report.top.pass}}},
               {"hypotheses",
                {{"inter", hypothesis_json(report.inter)}, {"union", hypothesis_json(report.uni)}}},
               {"hypotheses_pass", report.hypotheses_pass},
               {"rainbow_count", report.rainbows.size()},
               {"rainbows", simplex_list_json(report.rainbows)},
               {"theorem_violation", report.theorem_violation}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "rainbow check on " << name << "  (k = " << k << ", field = " << field.name() << ")\n";
    out << "whole complex: betti(" << report.top.degree << ") = " << report.top.observed << "  "
        << (report.top.pass ? "ok" : "NONZERO") << "\n";
    out << render_hypothesis_report(report.inter);
    out << render_hypothesis_report(report.uni);
    out << "rainbow simplices: " << report.rainbows.size();
    if (!report.rainbows.empty()) out << "  " << simplex_list_string(report.rainbows);
    out << "\n";
    if (report.theorem_violation) out << "THEOREM VIOLATION\n";
    return out.str();
}

std::string render_isolated(const std::string& name, const FieldSpec& field, const IsolatedReport& report,
                            bool as_json) {
    if (as_json) {
        json j{{"name", name},
               {"field", field.name()},
               {"vertex", report.vertex},
               {"hypotheses", hypothesis_json(report.hypotheses)},
               {"rainbows_with_vertex", simplex_list_json(report.rainbows_with_vertex)},
               {"theorem_violation", report.theorem_violation}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "isolated-vertex rainbow check on " << name << "  (vertex " << report.vertex
        << ", field = " << field.name() << ")\n";
    out << render_hypothesis_report(report.hypotheses);
    out << "rainbow simplices containing the vertex: " << report.rainbows_with_vertex.size();
    if (!report.rainbows_with_vertex.empty())
        out << "  " << simplex_list_string(report.rainbows_with_vertex);
    out << "\n";
    if (report.theorem_violation) out << "THEOREM VIOLATION\n";
    return out.str();
}

std::string render_discrete(const std::string& name, const FieldSpec& field, const DiscreteReport& report,
                            bool as_json) {
    if (as_json) {
        json j{{"name", name},
               {"field", field.name()},
               {"hypotheses", hypothesis_json(report.hypotheses)},
               {"non_extending", simplex_list_json(report.non_extending)},
               {"theorem_violation", report.theorem_violation}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "discrete-colours rainbow check on " << name << "  (field = " << field.name() << ")\n";
    out << render_hypothesis_report(report.hypotheses);
    if (report.non_extending.empty())
        out << "every simplex extends to a rainbow simplex\n";
    else
        out << "simplices with no rainbow extension: " << simplex_list_string(report.non_extending) << "\n";
    if (report.theorem_violation) out << "THEOREM VIOLATION\n";
    return out.str();
}

std::string render_polytopal(const std::string& name, const FieldSpec& field, const PolytopalReport& report,
                             bool as_json) {
    if (as_json) {
        json j{{"name", name},
               {"field", field.name()},
               {"preconditions_pass", report.preconditions_pass},
               {"precondition_failure", report.precondition_failure},
               {"carrier_hypotheses", hypothesis_json(report.carrier_hypotheses)},
               {"required", report.required},
               {"colourful_count", report.colourful_count},
               {"support_count", report.support_count},
               {"identity_verified", report.identity_verified},
               {"theorem_violation", report.theorem_violation}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "polytopal rainbow check on " << name << "  (field = " << field.name() << ")\n";
    if (!report.preconditions_pass) {
        out << "preconditions fail: " << report.precondition_failure << "\n";
        if (!report.carrier_hypotheses.entries.empty()) out << render_hypothesis_report(report.carrier_hypotheses);
        return out.str();
    }
    out << render_hypothesis_report(report.carrier_hypotheses);
    out << "required bound: " << report.required << "\n";
    out << "colourful simplex count: " << report.colourful_count << "  "
        << (report.count_holds ? "ok" : "BELOW BOUND") << "\n";
    out << "pipeline support count: " << report.support_count << "  "
        << (report.support_holds ? "ok" : "BELOW BOUND") << "\n";
    out << "projection identity: " << (report.identity_verified ? "verified" : "FAILED") << "\n";
    if (report.theorem_violation) out << "THEOREM VIOLATION\n";
    return out.str();
}

std::string render_kill(const std::string& name, int d, const FieldSpec& field, const BettiVector& before,
                        const BettiVector& after, bool as_json) {
    if (as_json) {
        json j{{"name", name},
               {"d", d},
               {"field", field.name()},
               {"before", betti_json(before)},
               {"after", betti_json(after)}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "homology killed below dimension " << d << " on " << name << " over " << field.name() << "\n";
    int hi = std::max(before.max_degree(), after.max_degree());
    out << "degree  before  after\n";
    for (int i = -1; i <= hi; ++i)
        out << (i < 0 ? std::string("-1") : " " + std::to_string(i)) << "      " << before.betti(i)
            << "       " << after.betti(i) << "\n";
    return out.str();
}

}  // namespace nervekit
