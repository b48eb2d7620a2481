#pragma once

#include <map>
#include <vector>

#include "qtoric/char_pair.hpp"
#include "qtoric/smith.hpp"

namespace qtoric {

// One even degree of the face-ring presentation: the surviving monomial
// basis, the linear-relation multiples expressed over it, and the resulting
// rank/torsion of the quotient.
struct GradedPiece {
    int degree = 0;                       // cohomological degree 2d
    std::vector<std::vector<int>> basis;  // degree-d monomials, sorted index lists
    IntMatrix relations;                  // rows over `basis`
    long long rank = 0;
    std::vector<Int> torsion;
};

// Element of one graded piece: integer coefficients over that piece's
// monomial basis.
struct RingClass {
    int degree = 0;
    std::vector<Int> coeffs;
    bool operator==(const RingClass&) const = default;
};

// Integral cohomology of a polytopal pair presented by facet generators
// modulo the Stanley-Reisner ideal and the n linear relations read off the
// characteristic matrix columns.  All pieces are computed at construction;
// instances are immutable and safe to share.
class FaceRing {
public:
    explicit FaceRing(const CharacteristicPair& p); // throws Error("NotPolytopal")

    const CharacteristicPair& pair() const { return pair_; }
    int torus_rank() const { return pair_.rank(); }
    int top_degree() const { return 2 * pair_.rank(); }

    const GradedPiece& piece(int degree) const;

    RingClass zero(int degree) const;
    RingClass generator(int facet) const;                      // degree 2, reduced
    RingClass monomial_class(const std::vector<int>& mono) const;
    std::vector<Int> generator_coeffs(int facet) const;        // unreduced e_facet

    RingClass reduce(RingClass c) const;                       // canonical representative
    bool is_zero(const RingClass& c) const;
    RingClass add(const RingClass& a, const RingClass& b) const;
    RingClass scaled(const RingClass& a, Int s) const;
    RingClass multiply(const RingClass& a, const RingClass& b) const;

    // Pairing of a top-degree class with the fundamental class, normalized so
    // the product of the generators at the lexicographically least vertex
    // gives +1.
    Int evaluate_top(const RingClass& c) const;

    std::vector<Int> betti() const; // degrees 0..2n, odd entries zero
    Int euler_characteristic() const;

    bool generated_in_degree_two() const;

    const QuotientPresentation& quotient(int degree) const;
    std::vector<Int> quotient_coords(const RingClass& c) const;

private:
    int half(int degree) const;
    int monomial_index(int halfdeg, const std::vector<int>& mono) const;

    CharacteristicPair pair_;
    std::vector<GradedPiece> pieces_;                 // index = half degree
    std::vector<IntMatrix> hermite_;                  // relation HNF per half degree
    std::vector<QuotientPresentation> quotients_;
    std::vector<std::map<std::vector<int>, int>> index_;
    Int orientation_ = 1;
};

GradedPiece graded_piece(const CharacteristicPair& p, int degree);
std::vector<Int> betti(const CharacteristicPair& p);
Int euler_char(const CharacteristicPair& p);
bool generated_in_degree_two(const CharacteristicPair& p);

// Degree-2 restriction to the characteristic submanifold over `facet`.
struct RestrictionDeg2 {
    CharacteristicPair sub;
    std::vector<int> source;      // ambient facet inducing each sub facet
    IntMatrix generator_map;      // m_sub x m on facet generators
    IntMatrix induced;            // free coordinates of H^2(sub) x H^2(p)
    long long kernel_rank = 0;
    std::vector<std::vector<Int>> kernel_basis; // in ambient free H^2 coordinates
    IntMatrix sub_relation_hermite;

    // membership of a generator-level class (length-m coefficient vector)
    bool kernel_contains(const std::vector<Int>& ambient_gen_coeffs) const;
};

RestrictionDeg2 restriction_deg2(const CharacteristicPair& p, int facet);

struct FacetTypeCount {
    Int d4 = 0;
    Int dk2 = 0;
    Int dk3 = 0;
    auto operator<=>(const FacetTypeCount&) const = default;
};

struct FacetCensusRecord {
    int facet = 0;
    Int vertex_count = 0;
    long long kernel_rank = 0;
    Int bin = 0; // 4, k+2 or k+3
};

struct FacetCensus {
    FacetTypeCount counts;
    std::vector<FacetCensusRecord> facets;
};

// Sorts the facets of a rank-3 polytopal pair into the three vertex-count
// bins 4, k+2 and k+3; for k = 2 the tie between 4 and k+2 is broken by
// whether the facet's dual class squares to zero.  Throws
// Error("UnexpectedVertexCount") on any other count.
FacetCensus facet_type_census(const CharacteristicPair& p, int k);

// All nonnegative solutions of 4*d4 + (k+2)*dk2 + (k+3)*dk3 = 6k+12,
// d4 + dk2 + dk3 = k+4.
std::vector<FacetTypeCount> facet_count_solutions(int k);

} // namespace qtoric
