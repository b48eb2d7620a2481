#pragma once

#include "qtoric/intmat.hpp"
#include "qtoric/orbit_complex.hpp"

namespace qtoric {

// Orbit complex plus, for every facet, a primitive integer vector spanning
// the Lie algebra of the circle subgroup fixing the facet's preimage.  Rows
// are meaningful only up to sign.
struct CharacteristicPair {
    OrbitComplex complex;
    IntMatrix lambda; // facet_count x rank

    int rank() const { return complex.rank(); }
    int facet_count() const { return complex.facet_count(); }
    std::vector<Int> row(int i) const { return lambda.row(i); }

    bool operator==(const CharacteristicPair&) const = default;
};

// Reports every non-primitive row ("NonPrimitiveRow") and every vertex whose
// incident rows fail |det| = 1 ("SingularVertex", message lists the value).
Validation validate_pair(const CharacteristicPair& p);

// Throws Error with the first issue code if validation fails.
CharacteristicPair make_pair(OrbitComplex complex, IntMatrix lambda);

// Determinant of the n rows meeting at vertex record `v`.
Int vertex_determinant(const CharacteristicPair& p, int v);

// The standard action on complex projective space: boundary-of-simplex
// complex with rows e_1..e_n, -(1,..,1).
CharacteristicPair simplex_pair(int n);

// Rank-2 pairs over the square, cyclic facets 0,1,2,3.  Type a has one pair
// of opposite facets with equal rows (two pairs when p = 0); type b has none.
CharacteristicPair square_pair_a(Int p);
CharacteristicPair square_pair_b();

// Sphere-bundle family over bigon x interval (facets s1, s2, bottom, top);
// members with different parameters are inequivalent.
CharacteristicPair lens_family_pair(Int a);

// Projectivized-bundle family over triangle x interval.
CharacteristicPair prism_family_pair(Int a);

// Multiply by a rotation sphere: complex x interval with two new cap facets
// carrying (0,..,0,1); old rows are extended by a zero coordinate.
CharacteristicPair product_with_s2(const CharacteristicPair& p);

// Characteristic pair of the submanifold over facet i: the intrinsic face
// structure of the facet with rows taken in the quotient lattice modulo
// row i.  Throws Error("InvalidFacetComplex") when the facet's boundary does
// not form a valid complex of rank n-1.
CharacteristicPair facet_subpair(const CharacteristicPair& p, int facet);

// facet_subpair plus the ambient facet each sub facet sits on (an ambient
// facet may induce several sub facets when it meets the facet in more than
// one edge).
struct FacetRestrictionData {
    CharacteristicPair sub;
    std::vector<int> source;
};
FacetRestrictionData facet_subpair_detailed(const CharacteristicPair& p, int facet);

// Iterated equivariant connected sum of k copies of the projective plane
// pair; complex is the (k+2)-gon, Betti numbers come out (1, k, 1).
CharacteristicPair polygon_sum_pair(int k);

// Relabel facets by perm, twist rows by the unimodular matrix u and flip by
// signs: the result is equivalent to p by construction.
CharacteristicPair transformed_pair(const CharacteristicPair& p, const std::vector<int>& perm,
                                    const IntMatrix& u, const std::vector<int>& signs);

} // namespace qtoric
