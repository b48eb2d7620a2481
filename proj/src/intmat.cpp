#include "qtoric/intmat.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "qtoric/diagnostics.hpp"

namespace qtoric {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ > 0 ? static_cast<int>(init.begin()->size()) : 0;
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : init) {
        if (static_cast<int>(r.size()) != cols_) throw Error("BadShape", "ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m;
    m.rows_ = static_cast<int>(rows.size());
    m.cols_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    m.data_.reserve(static_cast<size_t>(m.rows_) * m.cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != m.cols_) throw Error("BadShape", "ragged row list");
        m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
}

std::vector<Int> IntMatrix::row(int r) const {
    return std::vector<Int>(data_.begin() + static_cast<size_t>(r) * cols_,
                            data_.begin() + static_cast<size_t>(r + 1) * cols_);
}

void IntMatrix::set_row(int r, const std::vector<Int>& values) {
    for (int c = 0; c < cols_; ++c) at(r, c) = values[static_cast<size_t>(c)];
}

void IntMatrix::append_row(const std::vector<Int>& values) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(values.size());
    if (static_cast<int>(values.size()) != cols_) throw Error("BadShape", "row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::scale_row(int r, Int s) {
    for (int c = 0; c < cols_; ++c) at(r, c) *= s;
}

void IntMatrix::scale_col(int c, Int s) {
    for (int r = 0; r < rows_; ++r) at(r, c) *= s;
}

void IntMatrix::add_row(int a, int b, Int s) {
    for (int c = 0; c < cols_; ++c) at(a, c) += s * at(b, c);
}

void IntMatrix::add_col(int a, int b, Int s) {
    for (int r = 0; r < rows_; ++r) at(r, a) += s * at(r, b);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("BadShape", "matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            Int v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
        }
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("BadShape", "vector length mismatch");
    std::vector<Int> out(static_cast<size_t>(rows_), 0);
    for (int r = 0; r < rows_; ++r) {
        Int acc = 0;
        for (int c = 0; c < cols_; ++c) acc += at(r, c) * v[static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = acc;
    }
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << '[';
        for (int c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << at(r, c);
        }
        os << "]";
        if (r + 1 < rows_) os << '\n';
    }
    return os.str();
}

Int gcd_ll(Int a, Int b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int extended_gcd(Int a, Int b, Int& x, Int& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return std::llabs(a);
    }
    Int x1, y1;
    Int g = extended_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

Int content(const std::vector<Int>& v) {
    Int g = 0;
    for (Int e : v) g = gcd_ll(g, e);
    return g;
}

bool is_primitive(const std::vector<Int>& v) { return content(v) == 1; }

Int det(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw Error("BadShape", "determinant of non-square matrix");
    int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return 0;
            m.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // Bareiss: division is exact
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    Int d = det(a);
    if (d != 1 && d != -1) throw Error("NotUnimodular", "matrix has determinant " + std::to_string(d));
    int n = a.rows();
    // adjugate / det, exact for unimodular input
    IntMatrix inv(n, n);
    IntMatrix minor(n - 1, n - 1);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            int mi = 0;
            for (int i = 0; i < n; ++i) {
                if (i == r) continue;
                int mj = 0;
                for (int j = 0; j < n; ++j) {
                    if (j == c) continue;
                    minor.at(mi, mj) = a.at(i, j);
                    ++mj;
                }
                ++mi;
            }
            Int cof = (n == 1) ? 1 : det(minor);
            if ((r + c) % 2 != 0) cof = -cof;
            inv.at(c, r) = cof * d; // 1/d == d for d = +-1
        }
    }
    return inv;
}

std::vector<Int> negated(const std::vector<Int>& v) {
    std::vector<Int> out(v);
    for (Int& e : out) e = -e;
    return out;
}

std::vector<Int> sub(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

} // namespace qtoric
