#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qtoric {

using Int = long long;

// Dense row-major integer matrix.  All lattice data in this project is tiny
// (dimensions < 100, entries far below 2^32), so exact int64 arithmetic is
// enough everywhere.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> init);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    Int at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    Int& operator()(int r, int c) { return at(r, c); }
    Int operator()(int r, int c) const { return at(r, c); }

    std::vector<Int> row(int r) const;
    void set_row(int r, const std::vector<Int>& values);
    void append_row(const std::vector<Int>& values);

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void scale_row(int r, Int s);
    void scale_col(int c, Int s);
    // row[a] += s * row[b]
    void add_row(int a, int b, Int s);
    void add_col(int a, int b, Int s);

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    std::vector<Int> apply(const std::vector<Int>& v) const; // matrix * column vector

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

Int gcd_ll(Int a, Int b);
// g = a*x + b*y
Int extended_gcd(Int a, Int b, Int& x, Int& y);

Int content(const std::vector<Int>& v); // gcd of entries, 0 for the zero vector
bool is_primitive(const std::vector<Int>& v);

// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntMatrix& a);

// Inverse of a matrix with det = +-1; throws Error("NotUnimodular") otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

std::vector<Int> negated(const std::vector<Int>& v);
std::vector<Int> sub(const std::vector<Int>& a, const std::vector<Int>& b);

} // namespace qtoric
