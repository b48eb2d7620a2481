#include "qtoric/char_pair.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qtoric/smith.hpp"

namespace qtoric {

Validation validate_pair(const CharacteristicPair& p) {
    Validation report;
    int m = p.facet_count();
    int n = p.rank();
    if (p.lambda.rows() != m || p.lambda.cols() != n) {
        report.add("BadShape", "lambda must be " + std::to_string(m) + " x " + std::to_string(n));
        return report;
    }
    for (int i = 0; i < m; ++i) {
        if (!is_primitive(p.lambda.row(i)))
            report.add("NonPrimitiveRow", "row " + std::to_string(i) + " has content " +
                                              std::to_string(content(p.lambda.row(i))));
    }
    for (int vi = 0; vi < p.complex.vertex_count(); ++vi) {
        Int d = vertex_determinant(p, vi);
        if (d != 1 && d != -1)
            report.add("SingularVertex", "vertex " + std::to_string(vi) + " has determinant " +
                                             std::to_string(d));
    }
    return report;
}

CharacteristicPair make_pair(OrbitComplex complex, IntMatrix lambda) {
    CharacteristicPair p{std::move(complex), std::move(lambda)};
    Validation report = validate_pair(p);
    if (!report.ok()) throw Error(report.issues.front().code, report.summary());
    return p;
}

Int vertex_determinant(const CharacteristicPair& p, int v) {
    const std::vector<int>& vs = p.complex.vertex(v);
    IntMatrix m(static_cast<int>(vs.size()), p.rank());
    for (size_t i = 0; i < vs.size(); ++i) m.set_row(static_cast<int>(i), p.lambda.row(vs[i]));
    return det(m);
}

CharacteristicPair simplex_pair(int n) {
    OrbitComplex c = simplex_boundary_complex(n);
    IntMatrix lambda(n + 1, n);
    for (int i = 0; i < n; ++i) lambda.at(i, i) = 1;
    for (int j = 0; j < n; ++j) lambda.at(n, j) = -1;
    return make_pair(std::move(c), std::move(lambda));
}

CharacteristicPair square_pair_a(Int p) {
    return make_pair(polygon_complex(4), IntMatrix{{1, 0}, {0, 1}, {1, p}, {0, 1}});
}

CharacteristicPair square_pair_b() {
    return make_pair(polygon_complex(4), IntMatrix{{1, 0}, {0, 1}, {1, 2}, {1, 1}});
}

namespace {

// polygon x interval; sides keep their indices, bottom = s, top = s + 1
OrbitComplex prism_over(const OrbitComplex& polygon) {
    int s = polygon.facet_count();
    int vold = polygon.vertex_count();
    std::vector<std::vector<int>> vertices;
    for (const auto& v : polygon.vertices()) {
        std::vector<int> w = v;
        w.push_back(s);
        vertices.push_back(std::move(w));
    }
    for (const auto& v : polygon.vertices()) {
        std::vector<int> w = v;
        w.push_back(s + 1);
        vertices.push_back(std::move(w));
    }
    std::vector<EdgeRec> edges;
    for (int i = 0; i < s; ++i) {
        const auto& recs = polygon.facet_vertex_ids(i);
        if (recs.size() != 2) throw Error("RankLimit", "rank-2 complex is not a polygon");
        edges.push_back(EdgeRec::segment(i, s, recs[0], recs[1]));
        edges.push_back(EdgeRec::segment(i, s + 1, vold + recs[0], vold + recs[1]));
    }
    for (int vi = 0; vi < vold; ++vi) {
        const auto& v = polygon.vertex(vi);
        edges.push_back(EdgeRec::segment(v[0], v[1], vi, vold + vi));
    }
    return make_complex(3, s + 2, std::move(vertices), std::move(edges));
}

CharacteristicPair bundle_family_pair(const OrbitComplex& base_polygon,
                                      const std::vector<std::vector<Int>>& side_rows, Int a) {
    OrbitComplex c = prism_over(base_polygon);
    IntMatrix lambda(c.facet_count(), 3);
    for (size_t i = 0; i < side_rows.size(); ++i) lambda.set_row(static_cast<int>(i), side_rows[i]);
    int s = static_cast<int>(side_rows.size());
    lambda.set_row(s, {0, 0, 1});
    lambda.set_row(s + 1, {-a, a, 1});
    return make_pair(std::move(c), std::move(lambda));
}

} // namespace

CharacteristicPair lens_family_pair(Int a) {
    return bundle_family_pair(polygon_complex(2), {{1, 0, 0}, {0, 1, 0}}, a);
}

CharacteristicPair prism_family_pair(Int a) {
    return bundle_family_pair(polygon_complex(3), {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}}, a);
}

CharacteristicPair product_with_s2(const CharacteristicPair& p) {
    int n = p.rank();
    int m = p.facet_count();
    OrbitComplex c = [&] {
        if (n == 2) return prism_over(p.complex);
        std::vector<std::vector<int>> vertices;
        for (const auto& v : p.complex.vertices()) {
            std::vector<int> w = v;
            w.push_back(m);
            vertices.push_back(std::move(w));
        }
        for (const auto& v : p.complex.vertices()) {
            std::vector<int> w = v;
            w.push_back(m + 1);
            vertices.push_back(std::move(w));
        }
        return make_complex(n + 1, m + 2, std::move(vertices));
    }();
    IntMatrix lambda(m + 2, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) lambda.at(i, j) = p.lambda.at(i, j);
    }
    lambda.at(m, n) = 1;
    lambda.at(m + 1, n) = 1;
    return make_pair(std::move(c), std::move(lambda));
}

CharacteristicPair facet_subpair(const CharacteristicPair& p, int facet) {
    return facet_subpair_detailed(p, facet).sub;
}

FacetRestrictionData facet_subpair_detailed(const CharacteristicPair& p, int facet) {
    int n = p.rank();
    int m = p.facet_count();
    if (facet < 0 || facet >= m) throw Error("BadIndex", "facet out of range");
    if (n < 2) throw Error("InvalidFacetComplex", "facets of rank-1 complexes are points");

    QuotientPresentation quotient = quotient_presentation(
        IntMatrix::from_rows({p.lambda.row(facet)}), n);
    auto quotient_row = [&](int ambient_facet) { return quotient.proj.apply(p.lambda.row(ambient_facet)); };

    const std::vector<int>& fverts = p.complex.facet_vertex_ids(facet);
    std::map<int, int> vertex_index; // ambient record id -> sub record id
    for (size_t i = 0; i < fverts.size(); ++i) vertex_index[fverts[i]] = static_cast<int>(i);

    try {
        if (n == 3) {
            // facets of the 2-dimensional face are its boundary edges
            std::vector<int> face_edges;
            for (int ei : p.complex.facet_edge_ids(facet)) {
                if (p.complex.edges()[static_cast<size_t>(ei)].circle)
                    throw Error("InvalidFacetComplex", "facet boundary is a circle");
                face_edges.push_back(ei);
            }
            std::map<int, int> edge_index;
            for (size_t i = 0; i < face_edges.size(); ++i) edge_index[face_edges[i]] = static_cast<int>(i);
            std::vector<std::vector<int>> vertices(fverts.size());
            for (size_t i = 0; i < face_edges.size(); ++i) {
                const EdgeRec& e = p.complex.edges()[static_cast<size_t>(face_edges[i])];
                vertices[static_cast<size_t>(vertex_index.at(e.v0))].push_back(static_cast<int>(i));
                vertices[static_cast<size_t>(vertex_index.at(e.v1))].push_back(static_cast<int>(i));
            }
            OrbitComplex sub = make_complex(2, static_cast<int>(face_edges.size()), std::move(vertices));
            IntMatrix lambda(static_cast<int>(face_edges.size()), n - 1);
            std::vector<int> source;
            for (size_t i = 0; i < face_edges.size(); ++i) {
                const EdgeRec& e = p.complex.edges()[static_cast<size_t>(face_edges[i])];
                int other = (e.facet_a == facet) ? e.facet_b : e.facet_a;
                lambda.set_row(static_cast<int>(i), quotient_row(other));
                source.push_back(other);
            }
            return {make_pair(std::move(sub), std::move(lambda)), std::move(source)};
        }

        if (n == 2) {
            // the facet is an interval; its two endpoints become the facets
            if (fverts.size() != 2) throw Error("InvalidFacetComplex", "interval facet needs two endpoints");
            OrbitComplex sub = make_complex(1, 2, {{0}, {1}});
            IntMatrix lambda(2, 1);
            std::vector<int> source;
            for (int i = 0; i < 2; ++i) {
                const auto& v = p.complex.vertex(fverts[static_cast<size_t>(i)]);
                int other = (v[0] == facet) ? v[1] : v[0];
                lambda.set_row(i, quotient_row(other));
                source.push_back(other);
            }
            return {make_pair(std::move(sub), std::move(lambda)), std::move(source)};
        }

        // rank >= 4 (polytopal): sub facets are the adjacent ambient facets
        std::set<int> adjacent_set;
        for (int vi : fverts)
            for (int f : p.complex.vertex(vi))
                if (f != facet) adjacent_set.insert(f);
        std::vector<int> adjacent(adjacent_set.begin(), adjacent_set.end());
        std::map<int, int> facet_index;
        for (size_t i = 0; i < adjacent.size(); ++i) facet_index[adjacent[i]] = static_cast<int>(i);

        std::vector<std::vector<int>> vertices;
        for (int vi : fverts) {
            std::vector<int> w;
            for (int f : p.complex.vertex(vi))
                if (f != facet) w.push_back(facet_index.at(f));
            vertices.push_back(std::move(w));
        }
        std::optional<std::vector<EdgeRec>> edges;
        if (n - 1 == 3) {
            // edges of the sub complex = ridges of the ambient complex through `facet`
            std::map<std::vector<int>, std::vector<int>> ridge_records;
            for (size_t i = 0; i < fverts.size(); ++i) {
                const auto& v = p.complex.vertex(fverts[i]);
                for (size_t drop = 0; drop < v.size(); ++drop) {
                    if (v[drop] == facet) continue;
                    std::vector<int> ridge;
                    for (size_t j = 0; j < v.size(); ++j)
                        if (j != drop) ridge.push_back(v[j]);
                    ridge_records[ridge].push_back(static_cast<int>(i));
                }
            }
            std::vector<EdgeRec> es;
            for (const auto& [ridge, records] : ridge_records) {
                if (records.size() != 2) throw Error("InvalidFacetComplex", "ridge through facet is not shared by two vertices");
                std::vector<int> pair;
                for (int f : ridge)
                    if (f != facet) pair.push_back(facet_index.at(f));
                es.push_back(EdgeRec::segment(pair[0], pair[1], records[0], records[1]));
            }
            edges = std::move(es);
        }
        OrbitComplex sub = make_complex(n - 1, static_cast<int>(adjacent.size()), std::move(vertices),
                                        std::move(edges));
        IntMatrix lambda(static_cast<int>(adjacent.size()), n - 1);
        for (size_t i = 0; i < adjacent.size(); ++i) lambda.set_row(static_cast<int>(i), quotient_row(adjacent[i]));
        return {make_pair(std::move(sub), std::move(lambda)), std::move(adjacent)};
    } catch (const Error& e) {
        throw Error("InvalidFacetComplex",
                    "facet " + std::to_string(facet) + " does not restrict to a valid pair: " + e.what());
    }
}

CharacteristicPair polygon_sum_pair(int k) {
    if (k < 1) throw Error("BadInput", "k must be at least 1");
    // Repeated vertex connected sum with the triangle pair.  Each step cuts
    // the seam vertex between the last and first facet and inserts the new
    // triangle's middle facet; the sign of the second row matching follows
    // the seam orientation so the summands add up instead of cancelling.
    std::vector<std::vector<Int>> rows{{1, 0}, {0, 1}, {-1, -1}};
    auto det2 = [](const std::vector<Int>& a, const std::vector<Int>& b) {
        return a[0] * b[1] - a[1] * b[0];
    };
    for (int j = 1; j < k; ++j) {
        const std::vector<Int>& last = rows.back();
        const std::vector<Int>& first = rows.front();
        Int orient = det2(last, first);
        rows.push_back({-last[0] + orient * first[0], -last[1] + orient * first[1]});
    }
    return make_pair(polygon_complex(k + 2), IntMatrix::from_rows(rows));
}

CharacteristicPair transformed_pair(const CharacteristicPair& p, const std::vector<int>& perm,
                                    const IntMatrix& u, const std::vector<int>& signs) {
    int m = p.facet_count();
    if (static_cast<int>(perm.size()) != m || static_cast<int>(signs.size()) != m)
        throw Error("BadInput", "permutation/sign length mismatch");
    OrbitComplex c = relabel_facets(p.complex, perm);
    IntMatrix lambda(m, p.rank());
    for (int i = 0; i < m; ++i) {
        std::vector<Int> r = u.apply(p.lambda.row(i));
        for (auto& e : r) e *= signs[static_cast<size_t>(i)];
        lambda.set_row(perm[static_cast<size_t>(i)], r);
    }
    return make_pair(std::move(c), std::move(lambda));
}

} // namespace qtoric
