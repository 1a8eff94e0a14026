#pragma once

#include "nervekit/coloured.hpp"
#include "nervekit/cover.hpp"
#include "nervekit/simplex.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nervekit {

/// Machine-readable error classes for document parsing; the CLI maps any of
/// these to the input-error exit code.
enum class DocError {
    BadDocument,      // malformed JSON or wrong shape
    EmptyFacet,       // [] given as a facet
    ColourOverlap,    // a vertex in two colour classes
    ColourPartition,  // a vertex with no colour when colours are present
};

class document_error : public std::runtime_error {
public:
    document_error(DocError code, const std::string& what) : std::runtime_error(what), code_(code) {}
    DocError code() const { return code_; }

private:
    DocError code_;
};

const char* doc_error_name(DocError code);

/// On-disk form of a complex: a name, facet lists, optional colour classes,
/// and free-form metadata. The canonical emitted form sorts facet vertex
/// lists ascending and the facet list lexicographically.
struct ComplexDocument {
    std::string name;
    std::vector<std::vector<VertexId>> facets;
    std::optional<std::map<int, std::vector<VertexId>>> colours;
    std::map<std::string, std::string> metadata;
};

ComplexDocument parse_document(const std::string& text);
std::string emit_document(const ComplexDocument& doc);

SimplicialComplex to_complex(const ComplexDocument& doc);
/// Requires the colours field; validates the partition.
ColouredComplex to_coloured(const ComplexDocument& doc);

ComplexDocument document_of(const SimplicialComplex& X, std::string name);
ComplexDocument document_of(const ColouredComplex& K, std::string name);

/// On-disk form of a cover: the members' facet lists. The host complex comes
/// from its own document.
struct CoverDocument {
    std::string name;
    std::vector<std::vector<std::vector<VertexId>>> members;
};

CoverDocument parse_cover_document(const std::string& text);
std::string emit_cover_document(const CoverDocument& doc);

/// Throws document_error / std::invalid_argument when a member is not a
/// subcomplex of the host.
Cover to_cover(const CoverDocument& doc, const SimplicialComplex& host);
CoverDocument cover_document_of(const Cover& cover, std::string name);

}  // namespace nervekit
