#include "qtoric/pair_io.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace qtoric {

using nlohmann::json;

namespace {

bool require_int(Validation& report, const json& j, const char* key, int& out) {
    if (!j.contains(key)) {
        report.add("SchemaError", std::string("missing key '") + key + "'");
        return false;
    }
    if (!j[key].is_number_integer()) {
        report.add("SchemaError", std::string("'") + key + "' must be an integer");
        return false;
    }
    out = j[key].get<int>();
    return true;
}

bool parse_int_lists(Validation& report, const json& j, const char* key,
                     std::vector<std::vector<Int>>& out) {
    if (!j.is_array()) {
        report.add("SchemaError", std::string("'") + key + "' must be an array of integer arrays");
        return false;
    }
    for (const auto& row : j) {
        if (!row.is_array()) {
            report.add("SchemaError", std::string("'") + key + "' must contain arrays");
            return false;
        }
        std::vector<Int> r;
        for (const auto& e : row) {
            if (!e.is_number_integer()) {
                report.add("SchemaError", std::string("'") + key + "' entries must be integers");
                return false;
            }
            r.push_back(e.get<Int>());
        }
        out.push_back(std::move(r));
    }
    return true;
}

} // namespace

ParsedDocument parse_pair_document(const std::string& text) {
    ParsedDocument out;
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
        out.report.add("SchemaError", "input is not valid JSON");
        return out;
    }
    if (!j.is_object()) {
        out.report.add("SchemaError", "top-level value must be an object");
        return out;
    }
    static const std::vector<std::string> known{"format_version", "rank",  "facet_count",
                                               "facet_names",    "vertices", "edges", "lambda"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            out.report.add("SchemaError", "unknown key '" + it.key() + "'");
    }

    PairDocument doc;
    if (!require_int(out.report, j, "format_version", doc.format_version)) return out;
    if (doc.format_version != 1) {
        out.report.add("SchemaError", "unsupported format_version " + std::to_string(doc.format_version));
        return out;
    }
    if (!require_int(out.report, j, "rank", doc.rank)) return out;
    if (!require_int(out.report, j, "facet_count", doc.facet_count)) return out;

    if (j.contains("facet_names")) {
        if (!j["facet_names"].is_array()) {
            out.report.add("SchemaError", "'facet_names' must be an array of strings");
            return out;
        }
        std::vector<std::string> names;
        for (const auto& e : j["facet_names"]) {
            if (!e.is_string()) {
                out.report.add("SchemaError", "'facet_names' must be an array of strings");
                return out;
            }
            names.push_back(e.get<std::string>());
        }
        if (static_cast<int>(names.size()) != doc.facet_count) {
            out.report.add("SchemaError", "'facet_names' length must equal facet_count");
            return out;
        }
        doc.facet_names = std::move(names);
    }

    if (!j.contains("vertices")) {
        out.report.add("SchemaError", "missing key 'vertices'");
        return out;
    }
    std::vector<std::vector<Int>> vertex_rows;
    if (!parse_int_lists(out.report, j["vertices"], "vertices", vertex_rows)) return out;
    for (const auto& r : vertex_rows) {
        std::vector<int> v;
        for (Int e : r) v.push_back(static_cast<int>(e));
        doc.vertices.push_back(std::move(v));
    }

    if (j.contains("edges")) {
        if (!j["edges"].is_array()) {
            out.report.add("SchemaError", "'edges' must be an array");
            return out;
        }
        std::vector<EdgeRec> edges;
        for (const auto& e : j["edges"]) {
            if (!e.is_object() || !e.contains("facets") || !e["facets"].is_array() ||
                e["facets"].size() != 2 || !e["facets"][0].is_number_integer() ||
                !e["facets"][1].is_number_integer()) {
                out.report.add("SchemaError", "each edge needs a two-element integer 'facets' array");
                return out;
            }
            int fa = e["facets"][0].get<int>();
            int fb = e["facets"][1].get<int>();
            bool circle = e.contains("circle") && e["circle"].is_boolean() && e["circle"].get<bool>();
            if (circle) {
                if (e.contains("ends")) {
                    out.report.add("SchemaError", "circle edges must not carry 'ends'");
                    return out;
                }
                edges.push_back(EdgeRec::circle_edge(fa, fb));
            } else {
                if (!e.contains("ends") || !e["ends"].is_array() || e["ends"].size() != 2 ||
                    !e["ends"][0].is_number_integer() || !e["ends"][1].is_number_integer()) {
                    out.report.add("SchemaError", "segment edges need a two-element integer 'ends' array");
                    return out;
                }
                edges.push_back(EdgeRec::segment(fa, fb, e["ends"][0].get<int>(), e["ends"][1].get<int>()));
            }
        }
        doc.edges = std::move(edges);
    }

    if (j.contains("lambda")) {
        std::vector<std::vector<Int>> rows;
        if (!parse_int_lists(out.report, j["lambda"], "lambda", rows)) return out;
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != doc.rank) {
                out.report.add("SchemaError", "'lambda' rows must have length rank");
                return out;
            }
        }
        if (static_cast<int>(rows.size()) != doc.facet_count) {
            out.report.add("SchemaError", "'lambda' must have facet_count rows");
            return out;
        }
        doc.lambda = IntMatrix::from_rows(rows);
    }

    if (!out.report.ok()) return out;
    out.doc = std::move(doc);
    return out;
}

PairDocument canonical_document(PairDocument doc) {
    for (auto& v : doc.vertices) std::sort(v.begin(), v.end());
    std::vector<int> order(doc.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return doc.vertices[static_cast<size_t>(a)] < doc.vertices[static_cast<size_t>(b)];
    });
    std::vector<int> new_index(order.size());
    std::vector<std::vector<int>> sorted;
    for (size_t pos = 0; pos < order.size(); ++pos) {
        new_index[static_cast<size_t>(order[pos])] = static_cast<int>(pos);
        sorted.push_back(doc.vertices[static_cast<size_t>(order[pos])]);
    }
    doc.vertices = std::move(sorted);
    if (doc.edges) {
        for (auto& e : *doc.edges) {
            if (e.facet_a > e.facet_b) std::swap(e.facet_a, e.facet_b);
            if (!e.circle) {
                e.v0 = new_index[static_cast<size_t>(e.v0)];
                e.v1 = new_index[static_cast<size_t>(e.v1)];
                if (e.v0 > e.v1) std::swap(e.v0, e.v1);
            }
        }
        std::sort(doc.edges->begin(), doc.edges->end(), [](const EdgeRec& a, const EdgeRec& b) {
            return std::tie(a.facet_a, a.facet_b, a.circle, a.v0, a.v1) <
                   std::tie(b.facet_a, b.facet_b, b.circle, b.v0, b.v1);
        });
    }
    return doc;
}

std::string serialize_document(const PairDocument& input) {
    PairDocument doc = canonical_document(input);
    json j;
    j["format_version"] = doc.format_version;
    j["rank"] = doc.rank;
    j["facet_count"] = doc.facet_count;
    if (doc.facet_names) j["facet_names"] = *doc.facet_names;
    j["vertices"] = doc.vertices;
    if (doc.edges) {
        json edges = json::array();
        for (const auto& e : *doc.edges) {
            json je;
            je["facets"] = {e.facet_a, e.facet_b};
            if (e.circle)
                je["circle"] = true;
            else
                je["ends"] = {e.v0, e.v1};
            edges.push_back(je);
        }
        j["edges"] = edges;
    }
    if (doc.lambda) {
        json rows = json::array();
        for (int i = 0; i < doc.lambda->rows(); ++i) rows.push_back(doc.lambda->row(i));
        j["lambda"] = rows;
    }
    return j.dump(2) + "\n";
}

RealizedDocument realize_document(const PairDocument& doc) {
    RealizedDocument out;
    // an empty edge list is the same as no list outside rank 3
    std::optional<std::vector<EdgeRec>> edges = doc.edges;
    if (edges && edges->empty() && doc.rank != 3) edges.reset();
    ComplexBuildResult built = build_complex(doc.rank, doc.facet_count, doc.vertices, edges);
    out.report.merge(built.report);
    if (!built.complex) return out;
    out.complex = std::move(built.complex);
    if (doc.lambda) {
        CharacteristicPair p{*out.complex, *doc.lambda};
        Validation v = validate_pair(p);
        out.report.merge(v);
        if (v.ok()) out.pair = std::move(p);
    }
    return out;
}

PairDocument document_from_pair(const CharacteristicPair& p,
                                std::optional<std::vector<std::string>> facet_names) {
    PairDocument doc = document_from_complex(p.complex);
    doc.lambda = p.lambda;
    doc.facet_names = std::move(facet_names);
    return doc;
}

PairDocument document_from_complex(const OrbitComplex& c) {
    PairDocument doc;
    doc.rank = c.rank();
    doc.facet_count = c.facet_count();
    doc.vertices = c.vertices();
    if (c.rank() == 3) doc.edges = c.edges();
    return canonical_document(std::move(doc));
}

} // namespace qtoric
