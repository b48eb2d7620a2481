#pragma once

#include <optional>
#include <string>

#include "qtoric/char_pair.hpp"

namespace qtoric {

// On-disk form of a complex or pair.  `lambda` is optional so the same format
// carries bare complexes (enumeration input) and full pairs.
struct PairDocument {
    int format_version = 1;
    int rank = 0;
    int facet_count = 0;
    std::optional<std::vector<std::string>> facet_names;
    std::vector<std::vector<int>> vertices;
    std::optional<std::vector<EdgeRec>> edges;
    std::optional<IntMatrix> lambda;

    bool operator==(const PairDocument&) const = default;
};

struct ParsedDocument {
    std::optional<PairDocument> doc;
    Validation report; // schema issues, code "SchemaError"
};

ParsedDocument parse_pair_document(const std::string& text);

// Sorts vertex records lexicographically (stable), renumbers edge endpoints
// accordingly, and sorts the edge list.
PairDocument canonical_document(PairDocument doc);

// Canonical, byte-stable serialization: sorted keys, two-space indent,
// trailing newline.
std::string serialize_document(const PairDocument& doc);

struct RealizedDocument {
    std::optional<OrbitComplex> complex;
    std::optional<CharacteristicPair> pair; // set when lambda was present
    Validation report;
};

// Builds and validates the complex (and pair, when lambda is present),
// passing validator diagnostics through verbatim.
RealizedDocument realize_document(const PairDocument& doc);

PairDocument document_from_pair(const CharacteristicPair& p,
                                std::optional<std::vector<std::string>> facet_names = std::nullopt);
PairDocument document_from_complex(const OrbitComplex& c);

} // namespace qtoric
