#include "qtoric/equivalence.hpp"

#include <algorithm>
#include <sstream>

#include "qtoric/smith.hpp"

namespace qtoric {

namespace {

// sign s with u = s * v, or 0
int sign_match(const std::vector<Int>& u, const std::vector<Int>& v) {
    if (u == v) return 1;
    if (u == negated(v)) return -1;
    return 0;
}

IntMatrix vertex_basis(const CharacteristicPair& p, const std::vector<int>& facets) {
    IntMatrix a(static_cast<int>(facets.size()), p.rank());
    for (size_t i = 0; i < facets.size(); ++i) a.set_row(static_cast<int>(i), p.lambda.row(facets[i]));
    return a;
}

std::optional<EquivalenceWitness> complete_witness(const CharacteristicPair& p1,
                                                   const CharacteristicPair& p2,
                                                   const std::vector<int>& phi, const IntMatrix& u) {
    int m = p1.facet_count();
    EquivalenceWitness w;
    w.facet_bijection = phi;
    w.unimodular = u;
    w.signs.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int s = sign_match(u.apply(p1.lambda.row(i)), p2.lambda.row(phi[static_cast<size_t>(i)]));
        if (s == 0) return std::nullopt;
        w.signs[static_cast<size_t>(i)] = s;
    }
    return w;
}

} // namespace

std::optional<EquivalenceWitness> are_equivalent(const CharacteristicPair& p1,
                                                 const CharacteristicPair& p2,
                                                 const EquivOptions& opts) {
    if (p1.rank() != p2.rank()) throw Error("RankMismatch", "pairs have different torus ranks");
    int n = p1.rank();
    if (p1.complex.vertex_count() == 0 || p2.complex.vertex_count() == 0)
        throw Error("BadInput", "equivalence decisions need at least one vertex record");

    // base vertex of p1: lexicographically least facet-set
    const auto& verts = p1.complex.vertices();
    std::vector<int> base = *std::min_element(verts.begin(), verts.end());
    IntMatrix a_t = vertex_basis(p1, base).transposed();
    IntMatrix a_t_inv = unimodular_inverse(a_t);

    std::optional<EquivalenceWitness> found;
    for_each_isomorphism(p1.complex, p2.complex, [&](const std::vector<int>& phi) {
        if (opts.strict) {
            auto w = complete_witness(p1, p2, phi, IntMatrix::identity(n));
            if (w) {
                found = std::move(w);
                return false;
            }
            return true;
        }
        std::vector<int> image;
        for (int f : base) image.push_back(phi[static_cast<size_t>(f)]);
        IntMatrix b_t = vertex_basis(p2, image).transposed();
        // u * a = b * diag(eps) row-wise, i.e. u = b^T diag(eps) (a^T)^-1
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            IntMatrix be = b_t;
            for (int k = 0; k < n; ++k)
                if (mask & (1u << k)) be.scale_col(k, -1);
            auto w = complete_witness(p1, p2, phi, be * a_t_inv);
            if (w) {
                found = std::move(w);
                return false;
            }
        }
        return true;
    });
    if (found && !verify_witness(p1, p2, *found))
        throw Error("WitnessUnsound", "internal witness failed verification");
    return found;
}

bool verify_witness(const CharacteristicPair& p1, const CharacteristicPair& p2,
                    const EquivalenceWitness& w) {
    int m = p1.facet_count();
    int n = p1.rank();
    if (p2.facet_count() != m || p2.rank() != n) return false;
    if (static_cast<int>(w.facet_bijection.size()) != m ||
        static_cast<int>(w.signs.size()) != m || w.unimodular.rows() != n ||
        w.unimodular.cols() != n)
        return false;
    Int d = det(w.unimodular);
    if (d != 1 && d != -1) return false;
    for (int s : w.signs)
        if (s != 1 && s != -1) return false;
    if (!is_isomorphism(p1.complex, p2.complex, w.facet_bijection)) return false;
    for (int i = 0; i < m; ++i) {
        std::vector<Int> lhs = w.unimodular.apply(p1.lambda.row(i));
        std::vector<Int> rhs = p2.lambda.row(w.facet_bijection[static_cast<size_t>(i)]);
        for (auto& e : rhs) e *= w.signs[static_cast<size_t>(i)];
        if (lhs != rhs) return false;
    }
    return true;
}

std::string fingerprint(const CharacteristicPair& p) {
    std::ostringstream os;
    os << "rank=" << p.rank() << ";f=";
    std::vector<Int> f = f_vector(p.complex);
    for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << ";circles=" << p.complex.circle_edge_count();

    std::vector<FacetProfile> profiles;
    for (int i = 0; i < p.facet_count(); ++i) profiles.push_back(p.complex.facet_profile(i));
    std::sort(profiles.begin(), profiles.end());
    os << ";facets=";
    for (const auto& pr : profiles)
        os << "(" << pr.vertex_count << "," << pr.segment_edges << "," << pr.circle_edges << ")";

    // For each ordered pair of vertex records, the multiset of |det| of the
    // first vertex's basis with one row swapped for a row of the second.
    // Sign flips, torus automorphisms and relabelings all preserve it.
    int n = p.rank();
    std::vector<std::vector<Int>> pair_tables;
    for (int v = 0; v < p.complex.vertex_count(); ++v) {
        for (int w = 0; w < p.complex.vertex_count(); ++w) {
            if (v == w) continue;
            IntMatrix a = vertex_basis(p, p.complex.vertex(v));
            std::vector<Int> dets;
            for (int r = 0; r < n; ++r) {
                std::vector<Int> saved = a.row(r);
                for (int j = 0; j < n; ++j) {
                    a.set_row(r, p.lambda.row(p.complex.vertex(w)[static_cast<size_t>(j)]));
                    dets.push_back(std::llabs(det(a)));
                }
                a.set_row(r, saved);
            }
            std::sort(dets.begin(), dets.end());
            pair_tables.push_back(std::move(dets));
        }
    }
    std::sort(pair_tables.begin(), pair_tables.end());
    os << ";pairdets=";
    for (const auto& table : pair_tables) {
        os << "[";
        for (size_t i = 0; i < table.size(); ++i) os << (i ? "," : "") << table[i];
        os << "]";
    }
    return os.str();
}

std::vector<CharacteristicPair> enumerate_pairs(const OrbitComplex& c, Int bound) {
    if (bound < 1) throw Error("BadInput", "bound must be at least 1");
    if (c.vertex_count() == 0) throw Error("BadInput", "enumeration needs at least one vertex record");
    int n = c.rank();
    int m = c.facet_count();

    const auto& verts = c.vertices();
    std::vector<int> base = *std::min_element(verts.begin(), verts.end());
    std::vector<int> free_facets;
    for (int f = 0; f < m; ++f)
        if (!std::binary_search(base.begin(), base.end(), f)) free_facets.push_back(f);

    // candidate rows in lexicographic order
    std::vector<std::vector<Int>> candidates;
    std::vector<Int> row(static_cast<size_t>(n), -bound);
    while (true) {
        if (is_primitive(row)) candidates.push_back(row);
        int pos = n - 1;
        while (pos >= 0 && row[static_cast<size_t>(pos)] == bound) row[static_cast<size_t>(pos--)] = -bound;
        if (pos < 0) break;
        ++row[static_cast<size_t>(pos)];
    }

    IntMatrix lambda(m, n);
    for (size_t k = 0; k < base.size(); ++k) lambda.at(base[k], static_cast<int>(k)) = 1;

    // vertex completion index: a vertex is checkable once its last free facet
    // (in assignment order) is placed
    std::vector<int> order_of(static_cast<size_t>(m), -1);
    for (size_t i = 0; i < free_facets.size(); ++i) order_of[static_cast<size_t>(free_facets[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> complete_at(free_facets.size());
    for (int vi = 0; vi < c.vertex_count(); ++vi) {
        int last = -1;
        for (int f : c.vertex(vi)) last = std::max(last, order_of[static_cast<size_t>(f)]);
        if (last >= 0) complete_at[static_cast<size_t>(last)].push_back(vi);
    }

    std::vector<CharacteristicPair> candidates_out;
    std::function<void(size_t)> assign = [&](size_t slot) {
        if (slot == free_facets.size()) {
            candidates_out.push_back(CharacteristicPair{c, lambda});
            return;
        }
        for (const auto& r : candidates) {
            lambda.set_row(free_facets[slot], r);
            bool ok = true;
            for (int vi : complete_at[slot]) {
                IntMatrix a(n, n);
                for (size_t i = 0; i < static_cast<size_t>(n); ++i)
                    a.set_row(static_cast<int>(i), lambda.row(c.vertex(vi)[i]));
                Int d = det(a);
                if (d != 1 && d != -1) {
                    ok = false;
                    break;
                }
            }
            if (ok) assign(slot + 1);
        }
        for (int j = 0; j < n; ++j) lambda.at(free_facets[slot], j) = 0;
    };
    assign(0);

    // base-vertex-only complexes (all facets in the base vertex) still yield
    // one candidate: the identity assignment
    std::vector<CharacteristicPair> reps;
    for (const auto& cand : candidates_out) {
        if (!validate_pair(cand).ok()) continue;
        bool fresh = true;
        for (const auto& rep : reps) {
            if (are_equivalent(rep, cand)) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(cand);
    }
    return reps;
}

} // namespace qtoric
