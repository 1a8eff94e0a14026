#include "nervekit/document.hpp"

#include <json.hpp>

#include <algorithm>

namespace nervekit {

using nlohmann::json;

const char* doc_error_name(DocError code) {
    switch (code) {
        case DocError::BadDocument: return "BAD_DOCUMENT";
        case DocError::EmptyFacet: return "EMPTY_FACET";
        case DocError::ColourOverlap: return "COLOUR_OVERLAP";
        case DocError::ColourPartition: return "COLOUR_PARTITION";
    }
    return "UNKNOWN";
}

namespace {

std::vector<std::vector<VertexId>> parse_facet_list(const json& j, const char* what) {
    if (!j.is_array()) throw document_error(DocError::BadDocument, std::string(what) + " must be an array");
    std::vector<std::vector<VertexId>> out;
    for (const auto& f : j) {
        if (!f.is_array())
            throw document_error(DocError::BadDocument, std::string(what) + " entries must be arrays");
        if (f.empty())
            throw document_error(DocError::EmptyFacet, "empty facet: the empty set is not a simplex");
        std::vector<VertexId> facet;
        for (const auto& v : f) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw document_error(DocError::BadDocument, "vertex ids must be nonnegative integers");
            facet.push_back(v.get<VertexId>());
        }
        out.push_back(std::move(facet));
    }
    return out;
}

json facet_list_json(const std::vector<std::vector<VertexId>>& facets) {
    // canonical: each facet ascending, facet list lexicographic
    std::vector<std::vector<VertexId>> canon = facets;
    for (auto& f : canon) std::sort(f.begin(), f.end());
    std::sort(canon.begin(), canon.end());
    return json(canon);
}

}  // namespace

ComplexDocument parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object())
        throw document_error(DocError::BadDocument, "not a JSON object");
    if (!j.contains("facets")) throw document_error(DocError::BadDocument, "missing 'facets'");

    ComplexDocument doc;
    doc.name = j.value("name", "");
    doc.facets = parse_facet_list(j.at("facets"), "facets");

    if (j.contains("colours")) {
        const json& cj = j.at("colours");
        if (!cj.is_object()) throw document_error(DocError::BadDocument, "'colours' must be an object");
        std::map<int, std::vector<VertexId>> colours;
        for (const auto& [key, val] : cj.items()) {
            int idx = -1;
            try {
                std::size_t pos = 0;
                idx = std::stoi(key, &pos);
                if (pos != key.size()) idx = -1;
            } catch (...) {
                idx = -1;
            }
            if (idx < 0)
                throw document_error(DocError::BadDocument,
                                     "colour keys must be nonnegative integers, got '" + key + "'");
            if (!val.is_array())
                throw document_error(DocError::BadDocument, "colour classes must be arrays");
            std::vector<VertexId> cls;
            for (const auto& v : val) {
                if (!v.is_number_integer() || v.get<long long>() < 0)
                    throw document_error(DocError::BadDocument, "vertex ids must be nonnegative integers");
                cls.push_back(v.get<VertexId>());
            }
            colours.emplace(idx, std::move(cls));
        }
        doc.colours = std::move(colours);
    }

    if (j.contains("metadata")) {
        const json& mj = j.at("metadata");
        if (!mj.is_object()) throw document_error(DocError::BadDocument, "'metadata' must be an object");
        for (const auto& [key, val] : mj.items()) {
            if (!val.is_string())
                throw document_error(DocError::BadDocument, "metadata values must be strings");
            doc.metadata.emplace(key, val.get<std::string>());
        }
    }
    return doc;
}

std::string emit_document(const ComplexDocument& doc) {
    json j;
    j["name"] = doc.name;
    j["facets"] = facet_list_json(doc.facets);
    if (doc.colours) {
        json cj = json::object();
        for (const auto& [idx, cls] : *doc.colours) {
            std::vector<VertexId> sorted = cls;
            std::sort(sorted.begin(), sorted.end());
            cj[std::to_string(idx)] = sorted;
        }
        j["colours"] = std::move(cj);
    }
    if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
    return j.dump(2) + "\n";
}

SimplicialComplex to_complex(const ComplexDocument& doc) {
    try {
        return SimplicialComplex::from_facets(doc.facets);
    } catch (const std::invalid_argument& e) {
        throw document_error(DocError::EmptyFacet, e.what());
    }
}

ColouredComplex to_coloured(const ComplexDocument& doc) {
    if (!doc.colours) throw document_error(DocError::BadDocument, "document has no colours");
    SimplicialComplex X = to_complex(doc);
    int max_colour = -1;
    for (const auto& [idx, cls] : *doc.colours) max_colour = std::max(max_colour, idx);
    std::vector<std::vector<VertexId>> classes(static_cast<std::size_t>(max_colour) + 1);
    for (const auto& [idx, cls] : *doc.colours) classes[static_cast<std::size_t>(idx)] = cls;
    try {
        return ColouredComplex::make(std::move(X), std::move(classes));
    } catch (const std::invalid_argument& e) {
        std::string what = e.what();
        if (what.find("two colour classes") != std::string::npos)
            throw document_error(DocError::ColourOverlap, what);
        throw document_error(DocError::ColourPartition, what);
    }
}

ComplexDocument document_of(const SimplicialComplex& X, std::string name) {
    ComplexDocument doc;
    doc.name = std::move(name);
    for (const Simplex& f : X.facets()) doc.facets.push_back(f.vertices());
    return doc;
}

ComplexDocument document_of(const ColouredComplex& K, std::string name) {
    ComplexDocument doc = document_of(K.complex(), std::move(name));
    std::map<int, std::vector<VertexId>> colours;
    for (int c = 0; c <= K.max_colour(); ++c) colours[c] = K.colour_class(c);
    doc.colours = std::move(colours);
    return doc;
}

CoverDocument parse_cover_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw document_error(DocError::BadDocument, "not a JSON object");
    if (!j.contains("members") || !j.at("members").is_array())
        throw document_error(DocError::BadDocument, "cover document needs a 'members' array");
    CoverDocument doc;
    doc.name = j.value("name", "");
    for (const auto& member : j.at("members"))
        doc.members.push_back(parse_facet_list(member, "member"));
    return doc;
}

std::string emit_cover_document(const CoverDocument& doc) {
    json j;
    j["name"] = doc.name;
    json members = json::array();
    for (const auto& member : doc.members) members.push_back(facet_list_json(member));
    j["members"] = std::move(members);
    return j.dump(2) + "\n";
}

Cover to_cover(const CoverDocument& doc, const SimplicialComplex& host) {
    std::vector<SimplicialComplex> members;
    members.reserve(doc.members.size());
    for (const auto& facets : doc.members) {
        if (facets.empty())
            throw document_error(DocError::BadDocument, "cover member with no facets");
        members.push_back(SimplicialComplex::from_facets(facets));
    }
    return Cover::make(host, std::move(members));
}

CoverDocument cover_document_of(const Cover& cover, std::string name) {
    CoverDocument doc;
    doc.name = std::move(name);
    for (const SimplicialComplex& member : cover.members) {
        std::vector<std::vector<VertexId>> facets;
        for (const Simplex& f : member.facets()) facets.push_back(f.vertices());
        doc.members.push_back(std::move(facets));
    }
    return doc;
}

}  // namespace nervekit
