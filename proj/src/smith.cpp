#include "qtoric/smith.hpp"

#include <cstdlib>

#include "qtoric/diagnostics.hpp"

namespace qtoric {

namespace {

// Position of the entry with smallest nonzero absolute value in the
// submatrix a(t.., t..); returns false if that submatrix is zero.
bool find_pivot(const IntMatrix& a, int t, int& pr, int& pc) {
    Int best = 0;
    bool found = false;
    for (int i = t; i < a.rows(); ++i) {
        for (int j = t; j < a.cols(); ++j) {
            Int v = std::llabs(a.at(i, j));
            if (v != 0 && (!found || v < best)) {
                best = v;
                pr = i;
                pc = j;
                found = true;
            }
        }
    }
    return found;
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
    SmithResult res;
    res.d = a;
    res.u = IntMatrix::identity(a.rows());
    res.v = IntMatrix::identity(a.cols());
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    int n = std::min(a.rows(), a.cols());
    for (int t = 0; t < n; ++t) {
        int pr, pc;
        if (!find_pivot(d, t, pr, pc)) break;
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = floor_div(d.at(i, t), d.at(t, t));
                d.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (d.at(i, t) != 0) {
                    // remainder became the smaller pivot
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = floor_div(d.at(t, j), d.at(t, t));
                d.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (d.at(t, j) != 0) {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
        }

        // divisibility: pivot must divide the remaining submatrix
        bool restart = false;
        for (int i = t + 1; i < d.rows() && !restart; ++i) {
            for (int j = t + 1; j < d.cols() && !restart; ++j) {
                if (d.at(i, j) % d.at(t, t) != 0) {
                    d.add_row(t, i, 1);
                    u.add_row(t, i, 1);
                    restart = true;
                }
            }
        }
        if (restart) {
            --t;
            continue;
        }
        if (d.at(t, t) < 0) {
            d.scale_row(t, -1);
            u.scale_row(t, -1);
        }
    }

    for (int i = 0; i < n; ++i) {
        res.diagonal.push_back(d.at(i, i));
        if (d.at(i, i) != 0) {
            res.invariant_factors.push_back(d.at(i, i));
            ++res.rank;
            if (d.at(i, i) > 1) res.torsion.push_back(d.at(i, i));
        }
    }
    return res;
}

long long lattice_rank(const IntMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return smith_normal_form(a).rank;
}

IntMatrix hermite_row_basis(const IntMatrix& a) {
    IntMatrix h = a;
    int rows = h.rows();
    int cols = h.cols();
    int pivot_row = 0;
    std::vector<int> pivot_cols;
    for (int c = 0; c < cols && pivot_row < rows; ++c) {
        // gcd the column below pivot_row into one row
        int nz = -1;
        for (int i = pivot_row; i < rows; ++i) {
            if (h.at(i, c) != 0) {
                nz = i;
                break;
            }
        }
        if (nz < 0) continue;
        h.swap_rows(pivot_row, nz);
        for (int i = pivot_row + 1; i < rows; ++i) {
            while (h.at(i, c) != 0) {
                Int q = floor_div(h.at(i, c), h.at(pivot_row, c));
                h.add_row(i, pivot_row, -q);
                if (h.at(i, c) != 0) h.swap_rows(pivot_row, i);
            }
        }
        if (h.at(pivot_row, c) < 0) h.scale_row(pivot_row, -1);
        // reduce entries above the pivot
        for (int i = 0; i < pivot_row; ++i) {
            Int q = floor_div(h.at(i, c), h.at(pivot_row, c));
            if (q != 0) h.add_row(i, pivot_row, -q);
        }
        pivot_cols.push_back(c);
        ++pivot_row;
    }
    IntMatrix out(pivot_row, cols);
    for (int i = 0; i < pivot_row; ++i) out.set_row(i, h.row(i));
    return out;
}

std::vector<Int> reduce_mod_hermite(std::vector<Int> v, const IntMatrix& h) {
    for (int i = 0; i < h.rows(); ++i) {
        int c = 0;
        while (c < h.cols() && h.at(i, c) == 0) ++c;
        if (c == h.cols()) continue;
        Int p = h.at(i, c);
        Int q = [&] {
            Int a = v[static_cast<size_t>(c)];
            Int d = a / p;
            if ((a % p != 0) && ((a < 0) != (p < 0))) --d;
            return d;
        }();
        if (q != 0) {
            for (int j = 0; j < h.cols(); ++j) v[static_cast<size_t>(j)] -= q * h.at(i, j);
        }
    }
    return v;
}

bool row_lattice_contains(const IntMatrix& h, const std::vector<Int>& v) {
    std::vector<Int> r = reduce_mod_hermite(v, h);
    for (Int e : r)
        if (e != 0) return false;
    return true;
}

std::vector<std::vector<Int>> integral_kernel(const IntMatrix& a) {
    SmithResult s = smith_normal_form(a);
    std::vector<std::vector<Int>> out;
    for (int j = static_cast<int>(s.rank); j < a.cols(); ++j) {
        std::vector<Int> col(static_cast<size_t>(a.cols()));
        for (int i = 0; i < a.cols(); ++i) col[static_cast<size_t>(i)] = s.v.at(i, j);
        out.push_back(std::move(col));
    }
    return out;
}

QuotientPresentation quotient_presentation(const IntMatrix& relations, int dim) {
    QuotientPresentation q;
    q.dim = dim;
    IntMatrix a = relations.rows() > 0 ? relations.transposed() : IntMatrix(dim, 0);
    if (a.rows() != dim) throw Error("BadShape", "relation width does not match dimension");
    SmithResult s = smith_normal_form(a);
    long long r = s.rank;
    q.free_rank = dim - r;
    q.torsion = s.torsion;
    // In coordinates w'' = U * w the lattice is spanned by d_i * e_i, so the
    // last dim - r coordinates of U * w are the free part.
    IntMatrix uinv = unimodular_inverse(s.u);
    q.proj = IntMatrix(static_cast<int>(q.free_rank), dim);
    q.lift = IntMatrix(dim, static_cast<int>(q.free_rank));
    for (int i = 0; i < q.free_rank; ++i)
        for (int j = 0; j < dim; ++j) q.proj.at(i, j) = s.u.at(static_cast<int>(r) + i, j);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < q.free_rank; ++j) q.lift.at(i, j) = uinv.at(i, static_cast<int>(r) + j);
    return q;
}

} // namespace qtoric
