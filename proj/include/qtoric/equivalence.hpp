#pragma once

#include <optional>
#include <string>

#include "qtoric/char_pair.hpp"

namespace qtoric {

// Certificate of weak equivariant equivalence: a facet bijection realizing a
// complex isomorphism, a torus automorphism as a unimodular matrix, and one
// sign per facet absorbing the subtorus-direction ambiguity.  The defining
// equations are  unimodular * row(i) = signs[i] * row'(facet_bijection[i]).
struct EquivalenceWitness {
    std::vector<int> facet_bijection;
    IntMatrix unimodular;
    std::vector<int> signs;
};

struct EquivOptions {
    // restrict to the identity torus automorphism (equivariant rather than
    // weakly equivariant comparison)
    bool strict = false;
};

// First witness in deterministic order (complex isomorphisms in lexicographic
// order, then base-vertex sign assignments in binary order), or nullopt.
// Throws Error("RankMismatch") when the ranks differ.
std::optional<EquivalenceWitness> are_equivalent(const CharacteristicPair& p1,
                                                 const CharacteristicPair& p2,
                                                 const EquivOptions& opts = {});

bool verify_witness(const CharacteristicPair& p1, const CharacteristicPair& p2,
                    const EquivalenceWitness& w);

// Equivalence-invariant summary string: equivalent pairs get equal
// fingerprints (no converse claimed).
std::string fingerprint(const CharacteristicPair& p);

// All valid characteristic matrices over `c` with entries in [-bound, bound]
// after normalizing the least vertex's rows to the identity, deduplicated by
// are_equivalent.  Deterministic output order.
std::vector<CharacteristicPair> enumerate_pairs(const OrbitComplex& c, Int bound);

} // namespace qtoric
