#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qtoric/orbit_complex.hpp"
#include "test_support.hpp"

using namespace qtoric;

namespace {

// polygon x interval: facets 0..s-1 are the sides, s the bottom, s+1 the top
OrbitComplex prism_complex(int s) {
    std::vector<std::vector<int>> vertices;
    for (int i = 0; i < s; ++i) vertices.push_back({i, (i + 1) % s, s});
    for (int i = 0; i < s; ++i) vertices.push_back({i, (i + 1) % s, s + 1});
    std::vector<EdgeRec> edges;
    for (int i = 0; i < s; ++i) {
        int prev = (i + s - 1) % s;
        edges.push_back(EdgeRec::segment(i, s, prev, i));
        edges.push_back(EdgeRec::segment(i, s + 1, s + prev, s + i));
    }
    for (int i = 0; i < s; ++i) edges.push_back(EdgeRec::segment(i, (i + 1) % s, i, s + i));
    return make_complex(3, s + 2, std::move(vertices), std::move(edges));
}

OrbitComplex cube_complex() { return prism_complex(4); }

OrbitComplex bigon_prism_complex() { return prism_complex(2); }

std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

std::vector<OrbitComplex> complex_corpus() {
    return {simplex_boundary_complex(3), cube_complex(), bigon_prism_complex(),
            prism_complex(3), prism_complex(5), prism_complex(6)};
}

} // namespace

TEST_CASE("tetrahedron builds and has the expected counts") {
    OrbitComplex tetra = simplex_boundary_complex(3);
    CHECK(tetra.facet_count() == 4);
    CHECK(tetra.vertex_count() == 4);
    CHECK(tetra.segment_edge_count() == 6);
    CHECK(f_vector(tetra) == std::vector<Int>{4, 6, 4});
}

TEST_CASE("bigon x interval is valid with Euler count 2") {
    OrbitComplex c = bigon_prism_complex();
    CHECK(c.vertex_count() == 4);
    CHECK(c.segment_edge_count() == 6);
    CHECK(c.facet_count() == 4);
    CHECK(f_vector(c) == std::vector<Int>{4, 6, 4});
    // two records share a facet-set on each cap
    CHECK(c.vertex(0) == c.vertex(1));
    CHECK_FALSE(c.is_polytopal());
}

TEST_CASE("single-vertex rank-3 complex is rejected as a non-sphere") {
    auto r = build_complex(3, 3, {{0, 1, 2}}, std::vector<EdgeRec>{});
    CHECK_FALSE(r.complex.has_value());
    CHECK(r.report.has("BoundaryNotSphere"));
}

TEST_CASE("builder diagnostics") {
    SUBCASE("vertex of the wrong size") {
        auto r = build_complex(3, 4, {{0, 1}, {0, 1, 2}}, std::vector<EdgeRec>{});
        CHECK_FALSE(r.complex.has_value());
        CHECK(r.report.has("DimensionMismatch"));
    }
    SUBCASE("facet in no record") {
        auto r = build_complex(2, 4, {{0, 1}, {1, 2}, {0, 2}});
        CHECK_FALSE(r.complex.has_value());
        CHECK(r.report.has("DanglingFacet"));
    }
    SUBCASE("edge whose facet pair misses an endpoint") {
        OrbitComplex tetra = simplex_boundary_complex(3);
        auto edges = tetra.edges();
        edges[0].v0 = 3; // vertex {1,2,3} does not contain facet 0
        auto r = build_complex(3, 4, tetra.vertices(), edges);
        CHECK_FALSE(r.complex.has_value());
        CHECK(r.report.has("BadEdgeIncidence"));
    }
    SUBCASE("edge list forbidden away from rank 3") {
        auto r = build_complex(2, 3, {{0, 1}, {1, 2}, {0, 2}},
                               std::vector<EdgeRec>{EdgeRec::segment(0, 1, 0, 1)});
        CHECK_FALSE(r.complex.has_value());
        CHECK(r.report.has("BadEdgeIncidence"));
    }
    SUBCASE("out of range facet") {
        auto r = build_complex(2, 3, {{0, 1}, {1, 5}, {0, 5}});
        CHECK_FALSE(r.complex.has_value());
        CHECK(r.report.has("BadIndex"));
    }
    SUBCASE("duplicate facet-sets rejected for rank 4") {
        auto r = build_complex(4, 5, {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}});
        CHECK_FALSE(r.complex.has_value());
        CHECK(r.report.has("NotPolytopal"));
    }
    SUBCASE("two dangling ridge counts are a non-sphere") {
        // two disjoint triangles: every ridge fine, but disconnected
        auto r = build_complex(2, 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
        CHECK_FALSE(r.complex.has_value());
        CHECK(r.report.has("BoundaryNotSphere"));
    }
}

TEST_CASE("two-facet ball with a circle edge is accepted") {
    OrbitComplex ball = two_facet_ball_complex();
    CHECK(ball.facet_count() == 2);
    CHECK(ball.vertex_count() == 0);
    CHECK(ball.circle_edge_count() == 1);
    CHECK(f_vector(ball) == std::vector<Int>{0, 0, 2});
    CHECK_FALSE(ball.is_polytopal());
}

TEST_CASE("f-vectors of stock complexes") {
    CHECK(f_vector(cube_complex()) == std::vector<Int>{8, 12, 6});
    CHECK(f_vector(polygon_complex(5)) == std::vector<Int>{5, 5});
    CHECK(f_vector(simplex_boundary_complex(4)) == std::vector<Int>{5, 10, 10, 5});
    CHECK(f_vector(prism_complex(3)) == std::vector<Int>{6, 9, 5});
}

TEST_CASE("h-vector examples and laws") {
    CHECK(h_vector(simplex_boundary_complex(3)) == std::vector<Int>{1, 1, 1, 1});
    CHECK(h_vector(cube_complex()) == std::vector<Int>{1, 3, 3, 1});
    CHECK(h_vector(prism_complex(3)) == std::vector<Int>{1, 2, 2, 1});
    CHECK(h_vector(simplex_boundary_complex(4)) == std::vector<Int>{1, 1, 1, 1, 1});
    CHECK_THROWS_WITH_AS(h_vector(bigon_prism_complex()), doctest::Contains("NotPolytopal"), Error);

    auto rng = seeded_rng(10);
    for (const OrbitComplex& c : complex_corpus()) {
        if (!c.is_polytopal()) continue;
        std::vector<Int> h = h_vector(c);
        Int sum = std::accumulate(h.begin(), h.end(), Int{0});
        CHECK(sum == c.vertex_count());
        for (size_t i = 0; i < h.size(); ++i) CHECK(h[i] == h[h.size() - 1 - i]);
        // invariance under relabeling
        OrbitComplex r = relabel_facets(c, random_permutation(rng, c.facet_count()));
        CHECK(h_vector(r) == h);
        CHECK(f_vector(r) == f_vector(c));
    }
}

TEST_CASE("find_isomorphism on relabeled complexes") {
    auto rng = seeded_rng(11);
    for (const OrbitComplex& c : complex_corpus()) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> perm = random_permutation(rng, c.facet_count());
            OrbitComplex r = relabel_facets(c, perm);
            auto iso = find_isomorphism(c, r);
            REQUIRE(iso.has_value());
            // the returned bijection maps vertex records onto vertex records
            OrbitComplex mapped = relabel_facets(c, *iso);
            auto sorted = [](std::vector<std::vector<int>> v) {
                std::sort(v.begin(), v.end());
                return v;
            };
            CHECK(sorted(mapped.vertices()) == sorted(r.vertices()));
        }
    }
}

TEST_CASE("isomorphism is reflexive, symmetric, transitive on the corpus") {
    auto rng = seeded_rng(12);
    for (const OrbitComplex& c : complex_corpus()) {
        auto self = find_isomorphism(c, c);
        REQUIRE(self.has_value());
        OrbitComplex b = relabel_facets(c, random_permutation(rng, c.facet_count()));
        OrbitComplex d = relabel_facets(b, random_permutation(rng, b.facet_count()));
        auto ab = find_isomorphism(c, b);
        auto bd = find_isomorphism(b, d);
        REQUIRE(ab.has_value());
        REQUIRE(bd.has_value());
        // symmetric: the inverse direction also has a witness
        CHECK(find_isomorphism(b, c).has_value());
        // composed witness maps c onto d
        std::vector<int> comp(ab->size());
        for (size_t i = 0; i < ab->size(); ++i) comp[i] = (*bd)[static_cast<size_t>((*ab)[i])];
        OrbitComplex mapped = relabel_facets(c, comp);
        auto sorted = [](std::vector<std::vector<int>> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        CHECK(sorted(mapped.vertices()) == sorted(d.vertices()));
    }
}

TEST_CASE("non-isomorphic complexes are separated") {
    CHECK_FALSE(find_isomorphism(simplex_boundary_complex(3), bigon_prism_complex()).has_value());
    CHECK_FALSE(find_isomorphism(cube_complex(), prism_complex(5)).has_value());
    CHECK_FALSE(find_isomorphism(polygon_complex(4), polygon_complex(5)).has_value());
}

TEST_CASE("identity is the lexicographically least self-isomorphism") {
    for (const OrbitComplex& c : complex_corpus()) {
        auto iso = find_isomorphism(c, c);
        REQUIRE(iso.has_value());
        std::vector<int> identity(static_cast<size_t>(c.facet_count()));
        std::iota(identity.begin(), identity.end(), 0);
        CHECK(*iso == identity);
    }
}

TEST_CASE("every ordering of the tetrahedron is a disc ordering") {
    OrbitComplex tetra = simplex_boundary_complex(3);
    std::vector<int> ordering{0, 1, 2, 3};
    int valid = 0;
    do {
        bool all = true;
        for (int k = 1; k < 4; ++k)
            if (!verify_disc_union(tetra, ordering, k)) all = false;
        if (all) ++valid;
    } while (std::next_permutation(ordering.begin(), ordering.end()));
    CHECK(valid == 24);
}

TEST_CASE("disc orderings verify on the rank-3 corpus") {
    for (const OrbitComplex& c : complex_corpus()) {
        if (c.rank() != 3) continue;
        std::vector<int> ordering = disc_ordering(c);
        REQUIRE(static_cast<int>(ordering.size()) == c.facet_count());
        for (int k = 0; k <= c.facet_count(); ++k) CHECK(verify_disc_union(c, ordering, k));
    }
}

TEST_CASE("cube prefix checks") {
    OrbitComplex cube = cube_complex();
    // top and bottom caps: two disjoint discs
    CHECK(verify_disc_union(cube, {4, 5}, 2));
    // the four side facets form an annulus
    CHECK_FALSE(verify_disc_union(cube, {0, 1, 2, 3}, 4));
    // full boundary passes by convention
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    CHECK(verify_disc_union(cube, all, 6));
}

TEST_CASE("disc ordering rejects circle edges") {
    CHECK_THROWS_WITH_AS(disc_ordering(two_facet_ball_complex()), doctest::Contains("NoOrdering"), Error);
}
