#include "qtoric/cohomology.hpp"

#include <algorithm>
#include <set>

namespace qtoric {

namespace {

// integer vector y with row . y = 1; exists since row is primitive
std::vector<Int> dual_vector(const std::vector<Int>& row) {
    int n = static_cast<int>(row.size());
    // running extended gcd across the entries
    std::vector<Int> y(static_cast<size_t>(n), 0);
    Int g = 0;
    for (int i = 0; i < n; ++i) {
        if (row[static_cast<size_t>(i)] == 0) continue;
        if (g == 0) {
            g = std::llabs(row[static_cast<size_t>(i)]);
            y[static_cast<size_t>(i)] = row[static_cast<size_t>(i)] > 0 ? 1 : -1;
            continue;
        }
        Int x, z;
        Int g2 = extended_gcd(g, row[static_cast<size_t>(i)], x, z);
        for (int j = 0; j < i; ++j) y[static_cast<size_t>(j)] *= x;
        y[static_cast<size_t>(i)] = z;
        g = g2;
    }
    if (g != 1) throw Error("NonPrimitiveRow", "row has content " + std::to_string(g));
    return y;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

FaceRing::FaceRing(const CharacteristicPair& p) : pair_(p) {
    if (!pair_.complex.is_polytopal())
        throw Error("NotPolytopal", "face rings are defined for polytopal pairs");
    Validation v = validate_pair(pair_);
    if (!v.ok()) throw Error(v.issues.front().code, v.summary());

    int n = pair_.rank();
    int m = pair_.facet_count();

    // faces of the dual complex: subsets of vertex facet-sets
    std::set<std::vector<int>> faces;
    faces.insert({});
    for (const auto& vs : pair_.complex.vertices()) {
        int size = static_cast<int>(vs.size());
        for (int mask = 1; mask < (1 << size); ++mask) {
            std::vector<int> face;
            for (int b = 0; b < size; ++b)
                if (mask & (1 << b)) face.push_back(vs[static_cast<size_t>(b)]);
            faces.insert(std::move(face));
        }
    }
    auto is_face = [&](const std::vector<int>& support) { return faces.count(support) > 0; };
    auto support_of = [](const std::vector<int>& mono) {
        std::vector<int> s = mono;
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    };

    pieces_.resize(static_cast<size_t>(n + 1));
    hermite_.resize(static_cast<size_t>(n + 1));
    quotients_.resize(static_cast<size_t>(n + 1));
    index_.resize(static_cast<size_t>(n + 1));

    for (int d = 0; d <= n; ++d) {
        GradedPiece& piece = pieces_[static_cast<size_t>(d)];
        piece.degree = 2 * d;
        // monomials in lexicographic order, pruned to faces
        std::vector<int> mono;
        auto emit = [&](auto&& self, int min_facet) -> void {
            if (static_cast<int>(mono.size()) == d) {
                piece.basis.push_back(mono);
                return;
            }
            for (int f = min_facet; f < m; ++f) {
                mono.push_back(f);
                if (is_face(support_of(mono)))
                    self(self, f);
                mono.pop_back();
            }
        };
        emit(emit, 0);
        for (size_t i = 0; i < piece.basis.size(); ++i)
            index_[static_cast<size_t>(d)][piece.basis[i]] = static_cast<int>(i);

        int b = static_cast<int>(piece.basis.size());
        piece.relations = IntMatrix(0, b);
        if (d >= 1) {
            const GradedPiece& lower = pieces_[static_cast<size_t>(d - 1)];
            for (const auto& beta : lower.basis) {
                for (int col = 0; col < n; ++col) {
                    std::vector<Int> row(static_cast<size_t>(b), 0);
                    bool nonzero = false;
                    for (int f = 0; f < m; ++f) {
                        Int coeff = pair_.lambda.at(f, col);
                        if (coeff == 0) continue;
                        std::vector<int> ext = beta;
                        ext.insert(std::upper_bound(ext.begin(), ext.end(), f), f);
                        if (!is_face(support_of(ext))) continue;
                        row[static_cast<size_t>(index_[static_cast<size_t>(d)].at(ext))] += coeff;
                        nonzero = true;
                    }
                    if (nonzero) piece.relations.append_row(row);
                }
            }
        }
        hermite_[static_cast<size_t>(d)] = hermite_row_basis(piece.relations);
        quotients_[static_cast<size_t>(d)] = quotient_presentation(piece.relations, b);
        piece.rank = quotients_[static_cast<size_t>(d)].free_rank;
        piece.torsion = quotients_[static_cast<size_t>(d)].torsion;
    }

    // orientation: the generators meeting at the least vertex pair to +1
    const GradedPiece& top = pieces_[static_cast<size_t>(n)];
    if (top.rank != 1 || !top.torsion.empty())
        throw Error("TopDegenerate", "top graded piece is not infinite cyclic");
    std::vector<int> least = *std::min_element(pair_.complex.vertices().begin(),
                                               pair_.complex.vertices().end());
    std::vector<Int> coeffs(top.basis.size(), 0);
    coeffs[static_cast<size_t>(index_[static_cast<size_t>(n)].at(least))] = 1;
    std::vector<Int> coords = quotients_[static_cast<size_t>(n)].proj.apply(coeffs);
    if (coords.size() != 1 || (coords[0] != 1 && coords[0] != -1))
        throw Error("TopDegenerate", "vertex monomial does not generate the top piece");
    orientation_ = coords[0];
}

int FaceRing::half(int degree) const {
    if (degree < 0 || degree % 2 != 0) throw Error("DegreeMismatch", "degree must be even and nonnegative");
    if (degree > top_degree()) throw Error("DegreeOverflow", "degree exceeds twice the rank");
    return degree / 2;
}

const GradedPiece& FaceRing::piece(int degree) const { return pieces_[static_cast<size_t>(half(degree))]; }

const QuotientPresentation& FaceRing::quotient(int degree) const {
    return quotients_[static_cast<size_t>(half(degree))];
}

int FaceRing::monomial_index(int halfdeg, const std::vector<int>& mono) const {
    auto it = index_[static_cast<size_t>(halfdeg)].find(mono);
    return it == index_[static_cast<size_t>(halfdeg)].end() ? -1 : it->second;
}

RingClass FaceRing::zero(int degree) const {
    return RingClass{degree, std::vector<Int>(pieces_[static_cast<size_t>(half(degree))].basis.size(), 0)};
}

std::vector<Int> FaceRing::generator_coeffs(int facet) const {
    std::vector<Int> c(pieces_[1].basis.size(), 0);
    int i = monomial_index(1, {facet});
    if (i < 0) throw Error("BadIndex", "facet is not a face");
    c[static_cast<size_t>(i)] = 1;
    return c;
}

RingClass FaceRing::generator(int facet) const { return reduce(RingClass{2, generator_coeffs(facet)}); }

RingClass FaceRing::monomial_class(const std::vector<int>& mono) const {
    int d = static_cast<int>(mono.size());
    RingClass c = zero(2 * d);
    std::vector<int> sorted = mono;
    std::sort(sorted.begin(), sorted.end());
    int i = monomial_index(d, sorted);
    if (i >= 0) c.coeffs[static_cast<size_t>(i)] = 1;
    return reduce(std::move(c));
}

RingClass FaceRing::reduce(RingClass c) const {
    int d = half(c.degree);
    if (c.coeffs.size() != pieces_[static_cast<size_t>(d)].basis.size())
        throw Error("BadShape", "coefficient length does not match the basis");
    c.coeffs = reduce_mod_hermite(std::move(c.coeffs), hermite_[static_cast<size_t>(d)]);
    return c;
}

bool FaceRing::is_zero(const RingClass& c) const {
    RingClass r = reduce(c);
    return std::all_of(r.coeffs.begin(), r.coeffs.end(), [](Int e) { return e == 0; });
}

RingClass FaceRing::add(const RingClass& a, const RingClass& b) const {
    if (a.degree != b.degree) throw Error("DegreeMismatch", "sum of classes in different degrees");
    RingClass out = a;
    for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return reduce(std::move(out));
}

RingClass FaceRing::scaled(const RingClass& a, Int s) const {
    RingClass out = a;
    for (auto& e : out.coeffs) e *= s;
    return reduce(std::move(out));
}

RingClass FaceRing::multiply(const RingClass& a, const RingClass& b) const {
    int da = half(a.degree), db = half(b.degree);
    if (a.degree + b.degree > top_degree())
        throw Error("DegreeOverflow", "product degree exceeds twice the rank");
    int d = da + db;
    RingClass out = zero(2 * d);
    const auto& basis_a = pieces_[static_cast<size_t>(da)].basis;
    const auto& basis_b = pieces_[static_cast<size_t>(db)].basis;
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j] == 0) continue;
            std::vector<int> mono(basis_a[i]);
            mono.insert(mono.end(), basis_b[j].begin(), basis_b[j].end());
            std::sort(mono.begin(), mono.end());
            int idx = monomial_index(d, mono);
            if (idx < 0) continue; // killed by the Stanley-Reisner ideal
            out.coeffs[static_cast<size_t>(idx)] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return reduce(std::move(out));
}

Int FaceRing::evaluate_top(const RingClass& c) const {
    if (c.degree != top_degree()) throw Error("DegreeMismatch", "class is not of top degree");
    std::vector<Int> coords = quotients_[static_cast<size_t>(pair_.rank())].proj.apply(c.coeffs);
    return coords[0] * orientation_;
}

std::vector<Int> FaceRing::betti() const {
    std::vector<Int> b(static_cast<size_t>(top_degree() + 1), 0);
    for (int d = 0; d <= pair_.rank(); ++d)
        b[static_cast<size_t>(2 * d)] = pieces_[static_cast<size_t>(d)].rank;
    return b;
}

Int FaceRing::euler_characteristic() const {
    Int chi = 0;
    for (Int e : betti()) chi += e;
    return chi;
}

bool FaceRing::generated_in_degree_two() const {
    int n = pair_.rank();
    for (int d = 2; d <= n; ++d) {
        const GradedPiece& target = pieces_[static_cast<size_t>(d)];
        int b = static_cast<int>(target.basis.size());
        IntMatrix stacked = target.relations;
        const GradedPiece& lower = pieces_[static_cast<size_t>(d - 1)];
        for (int f = 0; f < pair_.facet_count(); ++f) {
            for (const auto& beta : lower.basis) {
                std::vector<int> mono = beta;
                mono.insert(std::upper_bound(mono.begin(), mono.end(), f), f);
                int idx = monomial_index(d, mono);
                if (idx < 0) continue;
                std::vector<Int> row(static_cast<size_t>(b), 0);
                row[static_cast<size_t>(idx)] = 1;
                stacked.append_row(row);
            }
        }
        SmithResult s = smith_normal_form(stacked);
        if (s.rank != b || !s.torsion.empty()) return false;
    }
    return true;
}

std::vector<Int> FaceRing::quotient_coords(const RingClass& c) const {
    return quotients_[static_cast<size_t>(half(c.degree))].proj.apply(c.coeffs);
}

GradedPiece graded_piece(const CharacteristicPair& p, int degree) { return FaceRing(p).piece(degree); }

std::vector<Int> betti(const CharacteristicPair& p) { return FaceRing(p).betti(); }

Int euler_char(const CharacteristicPair& p) { return FaceRing(p).euler_characteristic(); }

bool generated_in_degree_two(const CharacteristicPair& p) {
    return FaceRing(p).generated_in_degree_two();
}

bool RestrictionDeg2::kernel_contains(const std::vector<Int>& ambient_gen_coeffs) const {
    return row_lattice_contains(sub_relation_hermite, generator_map.apply(ambient_gen_coeffs));
}

RestrictionDeg2 restriction_deg2(const CharacteristicPair& p, int facet) {
    if (!p.complex.is_polytopal()) throw Error("NotPolytopal", "ambient pair is not polytopal");
    FacetRestrictionData data = facet_subpair_detailed(p, facet);
    if (!data.sub.complex.is_polytopal())
        throw Error("NotPolytopal", "facet subpair is not polytopal");

    int m = p.facet_count();
    int msub = data.sub.facet_count();
    RestrictionDeg2 out;
    out.generator_map = IntMatrix(msub, m);
    for (int k = 0; k < msub; ++k) out.generator_map.at(k, data.source[static_cast<size_t>(k)]) = 1;

    // v_facet restricts through the linear relations: pick y with
    // lambda_facet . y = 1, then the image is -sum_j (lambda_j . y) u_j over
    // the sub facets.
    std::vector<Int> y = dual_vector(p.lambda.row(facet));
    for (int k = 0; k < msub; ++k)
        out.generator_map.at(k, facet) = -dot(p.lambda.row(data.source[static_cast<size_t>(k)]), y);

    // degree-2 relation lattices on both sides
    auto deg2_relations = [](const CharacteristicPair& q) {
        IntMatrix rel(q.rank(), q.facet_count());
        for (int col = 0; col < q.rank(); ++col)
            for (int f = 0; f < q.facet_count(); ++f) rel.at(col, f) = q.lambda.at(f, col);
        return rel;
    };
    IntMatrix amb_rel = deg2_relations(p);
    IntMatrix sub_rel = deg2_relations(data.sub);
    out.sub_relation_hermite = hermite_row_basis(sub_rel);

    // relations must map into relations, otherwise the matrix would not be a
    // map on cohomology at all
    for (int i = 0; i < amb_rel.rows(); ++i) {
        if (!row_lattice_contains(out.sub_relation_hermite, out.generator_map.apply(amb_rel.row(i))))
            throw Error("RestrictionInconsistent", "generator map does not respect the relation lattice");
    }

    QuotientPresentation amb_q = quotient_presentation(amb_rel, m);
    QuotientPresentation sub_q = quotient_presentation(sub_rel, msub);
    out.induced = sub_q.proj * out.generator_map * amb_q.lift;
    out.kernel_rank = amb_q.free_rank - lattice_rank(out.induced);
    out.kernel_basis = integral_kernel(out.induced);
    out.sub = std::move(data.sub);
    out.source = std::move(data.source);
    return out;
}

FacetCensus facet_type_census(const CharacteristicPair& p, int k) {
    if (p.rank() != 3) throw Error("BadInput", "census requires a rank-3 pair");
    if (k < 2) throw Error("BadInput", "census requires k >= 2");
    FaceRing ring(p);

    FacetCensus census;
    for (int f = 0; f < p.facet_count(); ++f) {
        FacetCensusRecord rec;
        rec.facet = f;
        rec.vertex_count = static_cast<Int>(p.complex.facet_vertex_ids(f).size());
        rec.kernel_rank = restriction_deg2(p, f).kernel_rank;
        if (rec.vertex_count == k + 3) {
            rec.bin = k + 3;
            ++census.counts.dk3;
        } else if (rec.vertex_count == 4 && k == 2) {
            // vertex counts cannot separate the bins here; caps are the
            // facets whose dual class squares to zero
            RingClass v = ring.generator(f);
            bool square_zero = ring.is_zero(ring.multiply(v, v));
            rec.bin = square_zero ? k + 2 : 4;
            (square_zero ? census.counts.dk2 : census.counts.d4) += 1;
        } else if (rec.vertex_count == k + 2) {
            rec.bin = k + 2;
            ++census.counts.dk2;
        } else if (rec.vertex_count == 4) {
            rec.bin = 4;
            ++census.counts.d4;
        } else {
            throw Error("UnexpectedVertexCount",
                        "facet " + std::to_string(f) + " has " + std::to_string(rec.vertex_count) +
                            " vertices; expected 4, " + std::to_string(k + 2) + " or " +
                            std::to_string(k + 3));
        }
        census.facets.push_back(rec);
    }
    return census;
}

std::vector<FacetTypeCount> facet_count_solutions(int k) {
    if (k < 2) throw Error("BadInput", "k must be at least 2");
    std::vector<FacetTypeCount> out;
    Int facets = k + 4;
    Int vertex_slots = 6 * k + 12;
    for (Int d4 = 0; d4 <= facets; ++d4)
        for (Int dk2 = 0; d4 + dk2 <= facets; ++dk2) {
            Int dk3 = facets - d4 - dk2;
            if (4 * d4 + (k + 2) * dk2 + (k + 3) * dk3 == vertex_slots)
                out.push_back(FacetTypeCount{d4, dk2, dk3});
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qtoric
