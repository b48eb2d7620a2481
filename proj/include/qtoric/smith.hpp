#pragma once

#include <vector>

#include "qtoric/intmat.hpp"

namespace qtoric {

// U * A * V = D with U, V unimodular and D diagonal, each diagonal entry
// dividing the next.  Diagonal entries are normalized to be >= 0.
struct SmithResult {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    std::vector<Int> diagonal;         // min(rows, cols) entries of d
    std::vector<Int> invariant_factors; // nonzero diagonal entries
    long long rank = 0;
    std::vector<Int> torsion;          // invariant factors > 1
};

SmithResult smith_normal_form(const IntMatrix& a);

long long lattice_rank(const IntMatrix& a);

// Row-style Hermite normal form of the row lattice of `a`: zero rows dropped,
// pivots positive, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_row_basis(const IntMatrix& a);

// Canonical representative of v modulo the row lattice with Hermite basis h.
std::vector<Int> reduce_mod_hermite(std::vector<Int> v, const IntMatrix& h);

bool row_lattice_contains(const IntMatrix& h, const std::vector<Int>& v);

// Basis of { x : a * x = 0 } as columns-of-V, returned as a list of vectors.
std::vector<std::vector<Int>> integral_kernel(const IntMatrix& a);

// Quotient of Z^dim (column vectors) by the lattice spanned by the rows of
// `relations`.  `proj` maps a vector to its free coordinates, `lift` is a
// section of `proj`.
struct QuotientPresentation {
    int dim = 0;
    long long free_rank = 0;
    std::vector<Int> torsion;
    IntMatrix proj; // free_rank x dim
    IntMatrix lift; // dim x free_rank
};

QuotientPresentation quotient_presentation(const IntMatrix& relations, int dim);

} // namespace qtoric
