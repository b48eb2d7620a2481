#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qtoric/diagnostics.hpp"
#include "qtoric/intmat.hpp"

namespace qtoric {

// One-dimensional face of a rank-3 orbit space: either a segment between two
// corner vertices or a closed circle with no vertices on it.
struct EdgeRec {
    int facet_a = -1; // facet_a < facet_b
    int facet_b = -1;
    int v0 = -1;      // endpoint vertex record indices; -1 for circle edges
    int v1 = -1;
    bool circle = false;

    static EdgeRec segment(int fa, int fb, int v0, int v1);
    static EdgeRec circle_edge(int fa, int fb);

    bool operator==(const EdgeRec&) const = default;
};

struct FacetProfile {
    int vertex_count = 0;
    int segment_edges = 0;
    int circle_edges = 0;
    auto operator<=>(const FacetProfile&) const = default;
};

// Combinatorial face structure of the orbit space of a locally standard
// torus manifold: facets 0..m-1, corner vertices given as facet sets (two
// records may share a set; that is the simplicial-poset case), and for rank 3
// an explicit edge list.  Instances are immutable once built.
class OrbitComplex {
public:
    int rank() const { return rank_; }
    int facet_count() const { return facet_count_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    const std::vector<std::vector<int>>& vertices() const { return vertices_; }
    const std::vector<int>& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }

    bool has_edges() const { return rank_ == 3; }
    const std::vector<EdgeRec>& edges() const { return edges_; }
    int segment_edge_count() const { return segment_edge_count_; }
    int circle_edge_count() const { return circle_edge_count_; }

    const std::vector<int>& facet_vertex_ids(int f) const { return facet_vertices_[static_cast<size_t>(f)]; }
    const std::vector<int>& facet_edge_ids(int f) const { return facet_edges_[static_cast<size_t>(f)]; }
    FacetProfile facet_profile(int f) const;

    // distinct vertex sets, at least one vertex, no circle edges
    bool is_polytopal() const;

    bool operator==(const OrbitComplex&) const = default;

private:
    friend struct ComplexBuilder;

    int rank_ = 0;
    int facet_count_ = 0;
    std::vector<std::vector<int>> vertices_;
    std::vector<EdgeRec> edges_;
    int segment_edge_count_ = 0;
    int circle_edge_count_ = 0;
    std::vector<std::vector<int>> facet_vertices_;
    std::vector<std::vector<int>> facet_edges_;
};

struct ComplexBuildResult {
    std::optional<OrbitComplex> complex;
    Validation report;
};

// Validates and builds.  Reported issue codes: DimensionMismatch,
// DanglingFacet, BoundaryNotSphere, BadEdgeIncidence, NotPolytopal, BadIndex,
// BadInput.
ComplexBuildResult build_complex(int rank, int facet_count,
                                 std::vector<std::vector<int>> vertices,
                                 std::optional<std::vector<EdgeRec>> edges = std::nullopt);

// Throwing convenience wrapper around build_complex.
OrbitComplex make_complex(int rank, int facet_count,
                          std::vector<std::vector<int>> vertices,
                          std::optional<std::vector<EdgeRec>> edges = std::nullopt);

// (f_0, ..., f_{n-1}); for rank 3 f_1 counts segment edges only.
std::vector<Int> f_vector(const OrbitComplex& c);

// h-vector of the dual simplicial sphere; throws Error("NotPolytopal") when
// the complex is not the boundary of a simple polytope.
std::vector<Int> h_vector(const OrbitComplex& c);

// Facet bijection c1 -> c2 inducing a bijection of vertex records (and of
// edge records for rank 3), or nullopt.  Deterministic: the witness with the
// lexicographically least image sequence is returned.
std::optional<std::vector<int>> find_isomorphism(const OrbitComplex& c1, const OrbitComplex& c2);

// Calls cb for every isomorphism in lexicographic order until cb returns
// false.  Returns true if the enumeration was stopped early.
bool for_each_isomorphism(const OrbitComplex& c1, const OrbitComplex& c2,
                          const std::function<bool(const std::vector<int>&)>& cb);

// Whether this particular facet bijection is a complex isomorphism.
bool is_isomorphism(const OrbitComplex& c1, const OrbitComplex& c2, const std::vector<int>& phi);

// Facet ordering F_1..F_m such that every proper prefix union is a disjoint
// union of discs.  Requires rank 3 with all facets discs (no circle edges);
// throws Error("NoOrdering") otherwise.
std::vector<int> disc_ordering(const OrbitComplex& c);

// True iff every connected component of the union of the first k facets has
// Euler characteristic 1.  k == m returns true by convention (the full
// boundary is a sphere, which the prefix criterion does not constrain).
bool verify_disc_union(const OrbitComplex& c, const std::vector<int>& ordering, int k);

OrbitComplex relabel_facets(const OrbitComplex& c, const std::vector<int>& perm);

// Stock complexes.
OrbitComplex simplex_boundary_complex(int rank);
OrbitComplex polygon_complex(int sides);
// 3-ball split into two hemisphere facets along one circle edge
OrbitComplex two_facet_ball_complex();

} // namespace qtoric
