#include <doctest.h>

#include <algorithm>
#include <random>

#include "qtoric/equivalence.hpp"
#include "qtoric/pair_io.hpp"
#include "test_support.hpp"

using namespace qtoric;

TEST_CASE("serialize, parse, realize round trip") {
    std::vector<CharacteristicPair> corpus{simplex_pair(3), lens_family_pair(2), square_pair_b(),
                                           product_with_s2(square_pair_a(1)), simplex_pair(4)};
    for (const auto& p : corpus) {
        PairDocument doc = document_from_pair(p);
        std::string text = serialize_document(doc);
        ParsedDocument parsed = parse_pair_document(text);
        REQUIRE(parsed.doc.has_value());
        CHECK(parsed.report.ok());
        CHECK(*parsed.doc == canonical_document(doc));
        // byte stability
        CHECK(serialize_document(*parsed.doc) == text);
        RealizedDocument realized = realize_document(*parsed.doc);
        REQUIRE(realized.pair.has_value());
        CHECK(realized.report.ok());
        CHECK(are_equivalent(*realized.pair, p).has_value());
    }
}

TEST_CASE("vertex order does not affect the canonical form") {
    auto rng = seeded_rng(51);
    CharacteristicPair p = prism_family_pair(1);
    PairDocument doc = document_from_pair(p);
    std::string canonical = serialize_document(doc);

    // shuffle the vertex list, rewiring edges through the same shuffle
    std::vector<int> order(doc.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::shuffle(order.begin(), order.end(), rng);
    PairDocument shuffled = doc;
    std::vector<int> inverse(order.size());
    for (size_t i = 0; i < order.size(); ++i) inverse[static_cast<size_t>(order[i])] = static_cast<int>(i);
    shuffled.vertices.clear();
    for (size_t i = 0; i < order.size(); ++i)
        shuffled.vertices.push_back(doc.vertices[static_cast<size_t>(order[i])]);
    for (auto& e : *shuffled.edges) {
        if (!e.circle) {
            e.v0 = inverse[static_cast<size_t>(e.v0)];
            e.v1 = inverse[static_cast<size_t>(e.v1)];
        }
    }
    CHECK(serialize_document(shuffled) == canonical);
    RealizedDocument realized = realize_document(canonical_document(shuffled));
    REQUIRE(realized.pair.has_value());
    CHECK(are_equivalent(*realized.pair, p).has_value());
}

TEST_CASE("schema diagnostics") {
    CHECK(parse_pair_document("not json").report.has("SchemaError"));
    CHECK(parse_pair_document("[1,2]").report.has("SchemaError"));
    CHECK(parse_pair_document("{\"rank\": 2}").report.has("SchemaError"));
    CHECK(parse_pair_document("{\"format_version\": 2, \"rank\": 2, \"facet_count\": 3, \"vertices\": []}")
              .report.has("SchemaError"));
    CHECK(parse_pair_document(
              "{\"format_version\": 1, \"rank\": 2, \"facet_count\": 3, \"vertices\": [], \"extra\": 0}")
              .report.has("SchemaError"));
    // lambda shape mismatch
    CHECK(parse_pair_document("{\"format_version\": 1, \"rank\": 2, \"facet_count\": 3, "
                              "\"vertices\": [[0,1],[1,2],[0,2]], \"lambda\": [[1,0],[0,1]]}")
              .report.has("SchemaError"));
}

TEST_CASE("validator diagnostics pass through realize_document") {
    // dangling facet
    ParsedDocument parsed = parse_pair_document(
        "{\"format_version\": 1, \"rank\": 2, \"facet_count\": 4, \"vertices\": [[0,1],[1,2],[0,2]]}");
    REQUIRE(parsed.doc.has_value());
    RealizedDocument realized = realize_document(*parsed.doc);
    CHECK_FALSE(realized.complex.has_value());
    CHECK(realized.report.has("DanglingFacet"));

    // singular vertex: det at {0,2} is 2
    ParsedDocument bad = parse_pair_document(
        "{\"format_version\": 1, \"rank\": 2, \"facet_count\": 3, "
        "\"vertices\": [[0,1],[1,2],[0,2]], \"lambda\": [[1,0],[0,1],[1,2]]}");
    REQUIRE(bad.doc.has_value());
    RealizedDocument r2 = realize_document(*bad.doc);
    CHECK(r2.complex.has_value());
    CHECK_FALSE(r2.pair.has_value());
    CHECK(r2.report.has("SingularVertex"));
}

TEST_CASE("complex-only documents realize without a pair") {
    PairDocument doc = document_from_complex(polygon_complex(5));
    RealizedDocument realized = realize_document(doc);
    CHECK(realized.complex.has_value());
    CHECK_FALSE(realized.pair.has_value());
    CHECK(realized.report.ok());
}

TEST_CASE("circle edges serialize") {
    PairDocument doc = document_from_complex(two_facet_ball_complex());
    std::string text = serialize_document(doc);
    ParsedDocument parsed = parse_pair_document(text);
    REQUIRE(parsed.doc.has_value());
    RealizedDocument realized = realize_document(*parsed.doc);
    REQUIRE(realized.complex.has_value());
    CHECK(realized.complex->circle_edge_count() == 1);
}
