#include "qtoric/orbit_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qtoric {

namespace {

std::string set_to_string(const std::vector<int>& s) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    os << '}';
    return os.str();
}

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

EdgeRec EdgeRec::segment(int fa, int fb, int va, int vb) {
    EdgeRec e;
    e.facet_a = std::min(fa, fb);
    e.facet_b = std::max(fa, fb);
    e.v0 = va;
    e.v1 = vb;
    return e;
}

EdgeRec EdgeRec::circle_edge(int fa, int fb) {
    EdgeRec e;
    e.facet_a = std::min(fa, fb);
    e.facet_b = std::max(fa, fb);
    e.circle = true;
    return e;
}

FacetProfile OrbitComplex::facet_profile(int f) const {
    FacetProfile p;
    p.vertex_count = static_cast<int>(facet_vertices_[static_cast<size_t>(f)].size());
    for (int e : facet_edges_[static_cast<size_t>(f)]) {
        if (edges_[static_cast<size_t>(e)].circle)
            ++p.circle_edges;
        else
            ++p.segment_edges;
    }
    return p;
}

bool OrbitComplex::is_polytopal() const {
    if (vertices_.empty() || circle_edge_count_ > 0) return false;
    std::set<std::vector<int>> distinct(vertices_.begin(), vertices_.end());
    return distinct.size() == vertices_.size();
}

struct ComplexBuilder {
    static ComplexBuildResult run(int rank, int facet_count,
                                  std::vector<std::vector<int>> vertices,
                                  std::optional<std::vector<EdgeRec>> edges) {
        ComplexBuildResult result;
        Validation& report = result.report;

        if (rank < 1) {
            report.add("BadInput", "rank must be at least 1");
            return result;
        }
        if (facet_count < 1) {
            report.add("BadInput", "facet_count must be at least 1");
            return result;
        }

        // vertex records: exactly `rank` distinct facet indices each
        for (size_t vi = 0; vi < vertices.size(); ++vi) {
            auto& v = vertices[vi];
            std::sort(v.begin(), v.end());
            bool bad_index = false;
            for (int f : v) {
                if (f < 0 || f >= facet_count) {
                    report.add("BadIndex", "vertex " + std::to_string(vi) + " names facet " +
                                               std::to_string(f) + " outside 0.." +
                                               std::to_string(facet_count - 1));
                    bad_index = true;
                }
            }
            if (bad_index) continue;
            bool distinct = std::adjacent_find(v.begin(), v.end()) == v.end();
            if (static_cast<int>(v.size()) != rank || !distinct) {
                report.add("DimensionMismatch", "vertex " + std::to_string(vi) + " = " + set_to_string(v) +
                                                    " is not a set of " + std::to_string(rank) +
                                                    " distinct facets");
            }
        }
        if (!report.ok()) return result;

        std::vector<EdgeRec> edge_list;
        if (rank == 3) {
            if (!edges.has_value()) {
                report.add("BadEdgeIncidence", "rank-3 complexes require an edge list");
                return result;
            }
            edge_list = std::move(*edges);
        } else if (edges.has_value() && !edges->empty()) {
            report.add("BadEdgeIncidence", "edge lists are only supported for rank 3");
            return result;
        }

        int vcount = static_cast<int>(vertices.size());
        for (size_t ei = 0; ei < edge_list.size(); ++ei) {
            EdgeRec& e = edge_list[ei];
            if (e.facet_a > e.facet_b) std::swap(e.facet_a, e.facet_b);
            std::string tag = "edge " + std::to_string(ei);
            if (e.facet_a < 0 || e.facet_b >= facet_count) {
                report.add("BadIndex", tag + " names a facet outside 0.." + std::to_string(facet_count - 1));
                continue;
            }
            if (e.facet_a == e.facet_b) {
                report.add("BadEdgeIncidence", tag + " joins facet " + std::to_string(e.facet_a) + " to itself");
                continue;
            }
            if (e.circle) {
                if (e.v0 != -1 || e.v1 != -1)
                    report.add("BadEdgeIncidence", tag + " is a circle edge with endpoints");
                continue;
            }
            if (e.v0 < 0 || e.v0 >= vcount || e.v1 < 0 || e.v1 >= vcount) {
                report.add("BadIndex", tag + " has an endpoint outside 0.." + std::to_string(vcount - 1));
                continue;
            }
            if (e.v0 == e.v1) {
                report.add("BadEdgeIncidence", tag + " has equal endpoints");
                continue;
            }
            for (int f : {e.facet_a, e.facet_b}) {
                for (int v : {e.v0, e.v1}) {
                    const auto& vs = vertices[static_cast<size_t>(v)];
                    if (!std::binary_search(vs.begin(), vs.end(), f)) {
                        report.add("BadEdgeIncidence", tag + " facet pair is not contained in vertex " +
                                                           std::to_string(v));
                    }
                }
            }
        }
        if (!report.ok()) return result;

        // facet incidence tables
        std::vector<std::vector<int>> facet_vertices(static_cast<size_t>(facet_count));
        std::vector<std::vector<int>> facet_edges(static_cast<size_t>(facet_count));
        for (int vi = 0; vi < vcount; ++vi)
            for (int f : vertices[static_cast<size_t>(vi)]) facet_vertices[static_cast<size_t>(f)].push_back(vi);
        for (size_t ei = 0; ei < edge_list.size(); ++ei) {
            facet_edges[static_cast<size_t>(edge_list[ei].facet_a)].push_back(static_cast<int>(ei));
            facet_edges[static_cast<size_t>(edge_list[ei].facet_b)].push_back(static_cast<int>(ei));
        }

        for (int f = 0; f < facet_count; ++f) {
            if (facet_vertices[static_cast<size_t>(f)].empty() && facet_edges[static_cast<size_t>(f)].empty())
                report.add("DanglingFacet", "facet " + std::to_string(f) + " appears in no vertex or edge record");
        }
        if (!report.ok()) return result;

        if (rank == 3)
            check_rank3(report, facet_count, vertices, edge_list, facet_vertices, facet_edges);
        else
            check_ridges(report, rank, vertices);
        if (!report.ok()) return result;

        OrbitComplex c;
        c.rank_ = rank;
        c.facet_count_ = facet_count;
        c.vertices_ = std::move(vertices);
        c.edges_ = std::move(edge_list);
        for (const auto& e : c.edges_) {
            if (e.circle)
                ++c.circle_edge_count_;
            else
                ++c.segment_edge_count_;
        }
        c.facet_vertices_ = std::move(facet_vertices);
        c.facet_edges_ = std::move(facet_edges);
        result.complex = std::move(c);
        return result;
    }

    static void check_rank3(Validation& report, int facet_count,
                            const std::vector<std::vector<int>>& vertices,
                            const std::vector<EdgeRec>& edges,
                            const std::vector<std::vector<int>>& facet_vertices,
                            const std::vector<std::vector<int>>& facet_edges) {
        int vcount = static_cast<int>(vertices.size());

        // each vertex carries one segment edge per facet pair of its set
        std::vector<std::vector<int>> vertex_edges(static_cast<size_t>(vcount));
        for (size_t ei = 0; ei < edges.size(); ++ei) {
            if (edges[ei].circle) continue;
            vertex_edges[static_cast<size_t>(edges[ei].v0)].push_back(static_cast<int>(ei));
            vertex_edges[static_cast<size_t>(edges[ei].v1)].push_back(static_cast<int>(ei));
        }
        for (int vi = 0; vi < vcount; ++vi) {
            const auto& vs = vertices[static_cast<size_t>(vi)];
            std::set<std::pair<int, int>> seen;
            bool bad = vertex_edges[static_cast<size_t>(vi)].size() != 3;
            for (int ei : vertex_edges[static_cast<size_t>(vi)]) {
                auto key = std::make_pair(edges[static_cast<size_t>(ei)].facet_a,
                                          edges[static_cast<size_t>(ei)].facet_b);
                if (!seen.insert(key).second) bad = true;
            }
            // the three pairs of the vertex set, each exactly once
            if (!bad) {
                for (size_t a = 0; a < vs.size(); ++a)
                    for (size_t b = a + 1; b < vs.size(); ++b)
                        if (!seen.count({vs[a], vs[b]})) bad = true;
            }
            if (bad)
                report.add("BadEdgeIncidence", "vertex " + std::to_string(vi) +
                                                   " does not carry exactly one segment edge per facet pair");
        }

        // per-facet boundary: single vertex/segment cycle, or one circle edge
        for (int f = 0; f < facet_count; ++f) {
            const auto& fverts = facet_vertices[static_cast<size_t>(f)];
            std::vector<int> segs, circles;
            for (int ei : facet_edges[static_cast<size_t>(f)]) {
                (edges[static_cast<size_t>(ei)].circle ? circles : segs).push_back(ei);
            }
            std::string tag = "facet " + std::to_string(f);
            if (!circles.empty()) {
                if (!segs.empty() || !fverts.empty())
                    report.add("BadEdgeIncidence", tag + " mixes circle and segment boundary");
                else if (circles.size() != 1)
                    report.add("BadEdgeIncidence", tag + " is bounded by more than one circle");
                continue;
            }
            if (fverts.size() < 2 || segs.size() != fverts.size()) {
                report.add("BadEdgeIncidence", tag + " boundary is not a closed cycle (" +
                                                   std::to_string(fverts.size()) + " vertices, " +
                                                   std::to_string(segs.size()) + " segments)");
                continue;
            }
            std::map<int, int> degree;
            DisjointSets comp(static_cast<int>(fverts.size()));
            std::map<int, int> local;
            for (size_t i = 0; i < fverts.size(); ++i) local[fverts[i]] = static_cast<int>(i);
            bool ok = true;
            for (int ei : segs) {
                const EdgeRec& e = edges[static_cast<size_t>(ei)];
                if (!local.count(e.v0) || !local.count(e.v1)) {
                    ok = false;
                    break;
                }
                ++degree[e.v0];
                ++degree[e.v1];
                comp.unite(local[e.v0], local[e.v1]);
            }
            if (ok)
                for (int v : fverts)
                    if (degree[v] != 2) ok = false;
            if (ok) {
                int root = comp.find(0);
                for (size_t i = 1; i < fverts.size(); ++i)
                    if (comp.find(static_cast<int>(i)) != root) ok = false;
            }
            if (!ok) report.add("BadEdgeIncidence", tag + " boundary is not a single closed cycle");
        }

        // boundary surface is one sphere
        int segment_edges = 0;
        for (const auto& e : edges)
            if (!e.circle) ++segment_edges;
        int euler = vcount - segment_edges + facet_count;
        if (euler != 2)
            report.add("BoundaryNotSphere", "Euler count " + std::to_string(vcount) + " - " +
                                                std::to_string(segment_edges) + " + " + std::to_string(facet_count) +
                                                " = " + std::to_string(euler) + " (expected 2)");
        DisjointSets comp(facet_count);
        for (const auto& e : edges) comp.unite(e.facet_a, e.facet_b);
        for (int f = 1; f < facet_count; ++f)
            if (comp.find(f) != comp.find(0)) {
                report.add("BoundaryNotSphere", "boundary surface is disconnected");
                break;
            }
    }

    static void check_ridges(Validation& report, int rank,
                             const std::vector<std::vector<int>>& vertices) {
        int vcount = static_cast<int>(vertices.size());
        if (vcount == 0) return; // facets already flagged as dangling

        if (rank >= 4) {
            std::set<std::vector<int>> distinct(vertices.begin(), vertices.end());
            if (distinct.size() != vertices.size()) {
                report.add("NotPolytopal",
                           "duplicate vertex facet-sets are only supported for rank 2 and 3");
                return;
            }
        }

        // every (rank-1)-subset of a vertex is shared with exactly one other record
        std::map<std::vector<int>, std::vector<int>> ridge_owners;
        for (int vi = 0; vi < vcount; ++vi) {
            const auto& vs = vertices[static_cast<size_t>(vi)];
            for (size_t drop = 0; drop < vs.size(); ++drop) {
                std::vector<int> ridge;
                for (size_t i = 0; i < vs.size(); ++i)
                    if (i != drop) ridge.push_back(vs[i]);
                ridge_owners[ridge].push_back(vi);
            }
        }
        if (rank == 1) {
            // the single ridge is the empty set; a closed 0-sphere has two points
            if (vcount != 2)
                report.add("BoundaryNotSphere",
                           "rank-1 complexes have exactly two vertex records, got " + std::to_string(vcount));
        } else {
            for (const auto& [ridge, owners] : ridge_owners) {
                if (owners.size() != 2)
                    report.add("BoundaryNotSphere", "ridge " + set_to_string(ridge) + " lies in " +
                                                        std::to_string(owners.size()) +
                                                        " vertex records (expected 2)");
            }
        }
        if (!report.ok()) return;

        DisjointSets comp(vcount);
        for (const auto& [ridge, owners] : ridge_owners)
            for (size_t i = 1; i < owners.size(); ++i) comp.unite(owners[0], owners[i]);
        for (int vi = 1; vi < vcount; ++vi)
            if (comp.find(vi) != comp.find(0)) {
                report.add("BoundaryNotSphere", "vertex structure is disconnected");
                break;
            }
    }
};

ComplexBuildResult build_complex(int rank, int facet_count,
                                 std::vector<std::vector<int>> vertices,
                                 std::optional<std::vector<EdgeRec>> edges) {
    return ComplexBuilder::run(rank, facet_count, std::move(vertices), std::move(edges));
}

OrbitComplex make_complex(int rank, int facet_count,
                          std::vector<std::vector<int>> vertices,
                          std::optional<std::vector<EdgeRec>> edges) {
    ComplexBuildResult r = build_complex(rank, facet_count, std::move(vertices), std::move(edges));
    if (!r.complex)
        throw Error(r.report.issues.empty() ? std::string("BadInput") : r.report.issues.front().code,
                    r.report.summary());
    return std::move(*r.complex);
}

std::vector<Int> f_vector(const OrbitComplex& c) {
    int n = c.rank();
    std::vector<Int> f(static_cast<size_t>(n), 0);
    f[0] = c.vertex_count();
    if (n >= 2) f[static_cast<size_t>(n - 1)] = c.facet_count();
    if (n == 3) {
        f[1] = c.segment_edge_count();
    } else if (n >= 4) {
        for (int j = 1; j <= n - 2; ++j) {
            // codimension n-j faces = distinct (n-j)-subsets of vertex sets
            int k = n - j;
            std::set<std::vector<int>> faces;
            std::vector<int> pick(static_cast<size_t>(k));
            for (const auto& vs : c.vertices()) {
                std::vector<int> mask(vs.size(), 0);
                std::fill(mask.begin(), mask.begin() + k, 1);
                std::sort(mask.begin(), mask.end());
                do {
                    std::vector<int> face;
                    for (size_t i = 0; i < vs.size(); ++i)
                        if (mask[i]) face.push_back(vs[i]);
                    faces.insert(std::move(face));
                } while (std::next_permutation(mask.begin(), mask.end()));
            }
            f[static_cast<size_t>(j)] = static_cast<Int>(faces.size());
        }
    }
    return f;
}

std::vector<Int> h_vector(const OrbitComplex& c) {
    if (!c.is_polytopal())
        throw Error("NotPolytopal", "h-vector requires distinct vertex facet-sets and disc-free edges");
    int n = c.rank();
    std::vector<Int> f = f_vector(c);
    f.push_back(1); // the polytope itself
    // sum_i f_i (t-1)^i = sum_k h_k t^(n-k)
    std::vector<Int> poly(static_cast<size_t>(n + 1), 0);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Int sign = ((i - j) % 2 == 0) ? 1 : -1;
            poly[static_cast<size_t>(j)] += f[static_cast<size_t>(i)] * sign * binomial(i, j);
        }
    }
    std::vector<Int> h(static_cast<size_t>(n + 1));
    for (int k = 0; k <= n; ++k) h[static_cast<size_t>(k)] = poly[static_cast<size_t>(n - k)];
    return h;
}

namespace {

// Pairwise incidence counts between two facets.
struct PairCounts {
    int shared_vertices = 0;
    int segment_edges = 0;
    int circle_edges = 0;
    auto operator<=>(const PairCounts&) const = default;
};

struct IsoContext {
    const OrbitComplex& c;
    std::vector<FacetProfile> profile;
    std::vector<std::vector<PairCounts>> pair;
    std::vector<std::vector<std::pair<FacetProfile, PairCounts>>> neighborhood;

    explicit IsoContext(const OrbitComplex& cc) : c(cc) {
        int m = c.facet_count();
        profile.resize(static_cast<size_t>(m));
        pair.assign(static_cast<size_t>(m), std::vector<PairCounts>(static_cast<size_t>(m)));
        for (int f = 0; f < m; ++f) profile[static_cast<size_t>(f)] = c.facet_profile(f);
        for (const auto& vs : c.vertices())
            for (size_t a = 0; a < vs.size(); ++a)
                for (size_t b = a + 1; b < vs.size(); ++b) {
                    ++pair[static_cast<size_t>(vs[a])][static_cast<size_t>(vs[b])].shared_vertices;
                    ++pair[static_cast<size_t>(vs[b])][static_cast<size_t>(vs[a])].shared_vertices;
                }
        for (const auto& e : c.edges()) {
            auto& ab = pair[static_cast<size_t>(e.facet_a)][static_cast<size_t>(e.facet_b)];
            auto& ba = pair[static_cast<size_t>(e.facet_b)][static_cast<size_t>(e.facet_a)];
            if (e.circle) {
                ++ab.circle_edges;
                ++ba.circle_edges;
            } else {
                ++ab.segment_edges;
                ++ba.segment_edges;
            }
        }
        neighborhood.resize(static_cast<size_t>(m));
        for (int f = 0; f < m; ++f) {
            for (int g = 0; g < m; ++g) {
                if (g == f) continue;
                const PairCounts& pc = pair[static_cast<size_t>(f)][static_cast<size_t>(g)];
                if (pc == PairCounts{}) continue;
                neighborhood[static_cast<size_t>(f)].emplace_back(profile[static_cast<size_t>(g)], pc);
            }
            std::sort(neighborhood[static_cast<size_t>(f)].begin(), neighborhood[static_cast<size_t>(f)].end());
        }
    }
};

// Checks whether a facet bijection extends to a bijection of vertex records
// and, for rank 3, of edge records.
bool witness_has_record_bijection(const OrbitComplex& c1, const OrbitComplex& c2,
                                  const std::vector<int>& phi) {
    std::map<std::vector<int>, std::vector<int>> classes1, classes2;
    for (int vi = 0; vi < c1.vertex_count(); ++vi) {
        std::vector<int> image;
        for (int f : c1.vertex(vi)) image.push_back(phi[static_cast<size_t>(f)]);
        std::sort(image.begin(), image.end());
        classes1[image].push_back(vi);
    }
    for (int vi = 0; vi < c2.vertex_count(); ++vi) classes2[c2.vertex(vi)].push_back(vi);
    if (classes1.size() != classes2.size()) return false;
    for (const auto& [key, ids] : classes1) {
        auto it = classes2.find(key);
        if (it == classes2.end() || it->second.size() != ids.size()) return false;
    }
    if (c1.rank() != 3) return true;

    // try record assignments class by class, with incremental edge checks
    using EdgeKey = std::tuple<int, int, int, int, bool>; // facets sorted, endpoints sorted, circle
    std::map<EdgeKey, int> budget;
    for (const auto& e : c2.edges()) {
        EdgeKey key{e.facet_a, e.facet_b, e.circle ? -1 : std::min(e.v0, e.v1),
                    e.circle ? -1 : std::max(e.v0, e.v1), e.circle};
        ++budget[key];
    }
    // circle edges have no endpoints: match them up front
    for (const auto& e : c1.edges()) {
        if (!e.circle) continue;
        int fa = phi[static_cast<size_t>(e.facet_a)];
        int fb = phi[static_cast<size_t>(e.facet_b)];
        EdgeKey key{std::min(fa, fb), std::max(fa, fb), -1, -1, true};
        if (--budget[key] < 0) return false;
    }

    std::vector<int> sigma(static_cast<size_t>(c1.vertex_count()), -1);
    std::vector<char> used(static_cast<size_t>(c2.vertex_count()), 0);
    // incident segment edges per c1 vertex
    std::vector<std::vector<int>> incident(static_cast<size_t>(c1.vertex_count()));
    for (size_t ei = 0; ei < c1.edges().size(); ++ei) {
        const EdgeRec& e = c1.edges()[ei];
        if (e.circle) continue;
        incident[static_cast<size_t>(e.v0)].push_back(static_cast<int>(ei));
        incident[static_cast<size_t>(e.v1)].push_back(static_cast<int>(ei));
    }

    std::function<bool(int)> assign = [&](int vi) -> bool {
        if (vi == c1.vertex_count()) return true;
        std::vector<int> image;
        for (int f : c1.vertex(vi)) image.push_back(phi[static_cast<size_t>(f)]);
        std::sort(image.begin(), image.end());
        for (int target : classes2[image]) {
            if (used[static_cast<size_t>(target)]) continue;
            // consume budget for edges whose endpoints are now both assigned
            std::vector<EdgeKey> consumed;
            bool ok = true;
            sigma[static_cast<size_t>(vi)] = target;
            used[static_cast<size_t>(target)] = 1;
            for (int ei : incident[static_cast<size_t>(vi)]) {
                const EdgeRec& e = c1.edges()[static_cast<size_t>(ei)];
                int other = (e.v0 == vi) ? e.v1 : e.v0;
                if (sigma[static_cast<size_t>(other)] < 0) continue;
                int fa = phi[static_cast<size_t>(e.facet_a)];
                int fb = phi[static_cast<size_t>(e.facet_b)];
                int wa = sigma[static_cast<size_t>(vi)];
                int wb = sigma[static_cast<size_t>(other)];
                EdgeKey key{std::min(fa, fb), std::max(fa, fb), std::min(wa, wb), std::max(wa, wb), false};
                auto it = budget.find(key);
                if (it == budget.end() || it->second == 0) {
                    ok = false;
                    break;
                }
                --it->second;
                consumed.push_back(key);
            }
            if (ok && assign(vi + 1)) return true;
            for (const auto& key : consumed) ++budget[key];
            sigma[static_cast<size_t>(vi)] = -1;
            used[static_cast<size_t>(target)] = 0;
        }
        return false;
    };
    return assign(0);
}

bool enumerate_isomorphisms(const OrbitComplex& c1, const OrbitComplex& c2,
                            const std::function<bool(const std::vector<int>&)>& cb) {
    if (c1.rank() != c2.rank() || c1.facet_count() != c2.facet_count() ||
        c1.vertex_count() != c2.vertex_count() ||
        c1.segment_edge_count() != c2.segment_edge_count() ||
        c1.circle_edge_count() != c2.circle_edge_count())
        return false;

    IsoContext x1(c1), x2(c2);
    int m = c1.facet_count();
    std::vector<int> phi(static_cast<size_t>(m), -1);
    std::vector<char> used(static_cast<size_t>(m), 0);

    std::function<bool(int)> search = [&](int f) -> bool {
        if (f == m) {
            if (witness_has_record_bijection(c1, c2, phi)) {
                if (!cb(phi)) return true; // stop requested
            }
            return false;
        }
        for (int target = 0; target < m; ++target) {
            if (used[static_cast<size_t>(target)]) continue;
            if (x1.profile[static_cast<size_t>(f)] != x2.profile[static_cast<size_t>(target)]) continue;
            if (x1.neighborhood[static_cast<size_t>(f)] != x2.neighborhood[static_cast<size_t>(target)]) continue;
            bool consistent = true;
            for (int g = 0; g < f; ++g) {
                if (x1.pair[static_cast<size_t>(f)][static_cast<size_t>(g)] !=
                    x2.pair[static_cast<size_t>(target)][static_cast<size_t>(phi[static_cast<size_t>(g)])]) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) continue;
            phi[static_cast<size_t>(f)] = target;
            used[static_cast<size_t>(target)] = 1;
            if (search(f + 1)) return true;
            phi[static_cast<size_t>(f)] = -1;
            used[static_cast<size_t>(target)] = 0;
        }
        return false;
    };
    return search(0);
}

} // namespace

bool is_isomorphism(const OrbitComplex& c1, const OrbitComplex& c2, const std::vector<int>& phi) {
    if (c1.rank() != c2.rank() || c1.facet_count() != c2.facet_count()) return false;
    if (static_cast<int>(phi.size()) != c1.facet_count()) return false;
    std::vector<char> seen(static_cast<size_t>(c1.facet_count()), 0);
    for (int img : phi) {
        if (img < 0 || img >= c1.facet_count() || seen[static_cast<size_t>(img)]) return false;
        seen[static_cast<size_t>(img)] = 1;
    }
    return witness_has_record_bijection(c1, c2, phi);
}

std::optional<std::vector<int>> find_isomorphism(const OrbitComplex& c1, const OrbitComplex& c2) {
    std::optional<std::vector<int>> witness;
    enumerate_isomorphisms(c1, c2, [&](const std::vector<int>& phi) {
        witness = phi;
        return false; // first witness in lexicographic order
    });
    return witness;
}

bool for_each_isomorphism(const OrbitComplex& c1, const OrbitComplex& c2,
                          const std::function<bool(const std::vector<int>&)>& cb) {
    return enumerate_isomorphisms(c1, c2, cb);
}

std::vector<int> disc_ordering(const OrbitComplex& c) {
    if (c.rank() != 3) throw Error("NoOrdering", "disc orderings are defined for rank-3 complexes");
    if (c.circle_edge_count() > 0)
        throw Error("NoOrdering", "complex has a circle edge; not all facets are discs");
    int m = c.facet_count();
    std::vector<int> ordering(static_cast<size_t>(m), -1);
    std::vector<char> placed(static_cast<size_t>(m), 0);

    int pos = m - 1;
    ordering[static_cast<size_t>(pos--)] = m - 1;
    placed[static_cast<size_t>(m - 1)] = 1;

    for (; pos >= 0; --pos) {
        // remove a facet meeting the boundary of the remaining region
        int chosen = -1;
        for (int f = m - 1; f >= 0; --f) {
            if (placed[static_cast<size_t>(f)]) continue;
            for (int ei : c.facet_edge_ids(f)) {
                const EdgeRec& e = c.edges()[static_cast<size_t>(ei)];
                int other = (e.facet_a == f) ? e.facet_b : e.facet_a;
                if (placed[static_cast<size_t>(other)]) {
                    chosen = f;
                    break;
                }
            }
            if (chosen >= 0) break;
        }
        if (chosen < 0) throw Error("NoOrdering", "region never meets the placed boundary (invalid complex)");
        ordering[static_cast<size_t>(pos)] = chosen;
        placed[static_cast<size_t>(chosen)] = 1;
    }
    return ordering;
}

bool verify_disc_union(const OrbitComplex& c, const std::vector<int>& ordering, int k) {
    int m = c.facet_count();
    if (k < 0 || k > static_cast<int>(ordering.size()) || static_cast<int>(ordering.size()) > m)
        throw Error("BadInput", "prefix length out of range");
    {
        std::set<int> distinct(ordering.begin(), ordering.end());
        if (distinct.size() != ordering.size() || (!ordering.empty() && (*distinct.begin() < 0 || *distinct.rbegin() >= m)))
            throw Error("BadInput", "ordering is not a list of distinct facets");
    }
    if (k == m) return true; // the full boundary is the sphere, not a disc
    if (k == 0) return true;

    std::vector<char> in_set(static_cast<size_t>(m), 0);
    for (int i = 0; i < k; ++i) in_set[static_cast<size_t>(ordering[static_cast<size_t>(i)])] = 1;

    int vcount = c.vertex_count();
    int ecount = static_cast<int>(c.edges().size());
    // cell ids: vertices, then edges, then facets
    auto vid = [](int v) { return v; };
    auto eid = [&](int e) { return vcount + e; };
    auto fid = [&](int f) { return vcount + ecount + f; };

    std::vector<char> v_present(static_cast<size_t>(vcount), 0);
    std::vector<char> e_present(static_cast<size_t>(ecount), 0);
    for (int vi = 0; vi < vcount; ++vi)
        for (int f : c.vertex(vi))
            if (in_set[static_cast<size_t>(f)]) v_present[static_cast<size_t>(vi)] = 1;
    for (int ei = 0; ei < ecount; ++ei) {
        const EdgeRec& e = c.edges()[static_cast<size_t>(ei)];
        if (in_set[static_cast<size_t>(e.facet_a)] || in_set[static_cast<size_t>(e.facet_b)])
            e_present[static_cast<size_t>(ei)] = 1;
    }

    DisjointSets comp(vcount + ecount + m);
    for (int ei = 0; ei < ecount; ++ei) {
        if (!e_present[static_cast<size_t>(ei)]) continue;
        const EdgeRec& e = c.edges()[static_cast<size_t>(ei)];
        if (!e.circle) {
            comp.unite(eid(ei), vid(e.v0));
            comp.unite(eid(ei), vid(e.v1));
        }
        for (int f : {e.facet_a, e.facet_b})
            if (in_set[static_cast<size_t>(f)]) comp.unite(eid(ei), fid(f));
    }
    for (int vi = 0; vi < vcount; ++vi) {
        if (!v_present[static_cast<size_t>(vi)]) continue;
        for (int f : c.vertex(vi))
            if (in_set[static_cast<size_t>(f)]) comp.unite(vid(vi), fid(f));
    }

    std::map<int, Int> chi;
    for (int vi = 0; vi < vcount; ++vi)
        if (v_present[static_cast<size_t>(vi)]) chi[comp.find(vid(vi))] += 1;
    for (int ei = 0; ei < ecount; ++ei)
        if (e_present[static_cast<size_t>(ei)]) chi[comp.find(eid(ei))] -= 1;
    for (int f = 0; f < m; ++f)
        if (in_set[static_cast<size_t>(f)]) chi[comp.find(fid(f))] += 1;

    for (const auto& [root, value] : chi)
        if (value != 1) return false;
    return true;
}

OrbitComplex relabel_facets(const OrbitComplex& c, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != c.facet_count())
        throw Error("BadInput", "permutation length mismatch");
    std::vector<std::vector<int>> vertices;
    for (const auto& vs : c.vertices()) {
        std::vector<int> w;
        for (int f : vs) w.push_back(perm[static_cast<size_t>(f)]);
        std::sort(w.begin(), w.end());
        vertices.push_back(std::move(w));
    }
    std::optional<std::vector<EdgeRec>> edges;
    if (c.rank() == 3) {
        std::vector<EdgeRec> es;
        for (const auto& e : c.edges()) {
            EdgeRec ne = e;
            ne.facet_a = perm[static_cast<size_t>(e.facet_a)];
            ne.facet_b = perm[static_cast<size_t>(e.facet_b)];
            if (ne.facet_a > ne.facet_b) std::swap(ne.facet_a, ne.facet_b);
            es.push_back(ne);
        }
        edges = std::move(es);
    }
    return make_complex(c.rank(), c.facet_count(), std::move(vertices), std::move(edges));
}

OrbitComplex simplex_boundary_complex(int rank) {
    if (rank < 1) throw Error("BadInput", "rank must be at least 1");
    int m = rank + 1;
    std::vector<std::vector<int>> vertices;
    for (int skip = m - 1; skip >= 0; --skip) {
        std::vector<int> v;
        for (int f = 0; f < m; ++f)
            if (f != skip) v.push_back(f);
        vertices.push_back(std::move(v));
    }
    std::sort(vertices.begin(), vertices.end());
    std::optional<std::vector<EdgeRec>> edges;
    if (rank == 3) {
        std::vector<EdgeRec> es;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                std::vector<int> ends;
                for (size_t vi = 0; vi < vertices.size(); ++vi) {
                    const auto& vs = vertices[vi];
                    if (std::binary_search(vs.begin(), vs.end(), a) &&
                        std::binary_search(vs.begin(), vs.end(), b))
                        ends.push_back(static_cast<int>(vi));
                }
                es.push_back(EdgeRec::segment(a, b, ends[0], ends[1]));
            }
        edges = std::move(es);
    }
    return make_complex(rank, m, std::move(vertices), std::move(edges));
}

OrbitComplex polygon_complex(int sides) {
    if (sides < 2) throw Error("BadInput", "polygons need at least 2 sides");
    std::vector<std::vector<int>> vertices;
    for (int i = 0; i < sides; ++i) {
        std::vector<int> v{i, (i + 1) % sides};
        std::sort(v.begin(), v.end());
        vertices.push_back(std::move(v));
    }
    return make_complex(2, sides, std::move(vertices));
}

OrbitComplex two_facet_ball_complex() {
    return make_complex(3, 2, {}, std::vector<EdgeRec>{EdgeRec::circle_edge(0, 1)});
}

} // namespace qtoric
