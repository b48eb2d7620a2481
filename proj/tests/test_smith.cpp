#include <doctest.h>

#include <random>

#include "qtoric/intmat.hpp"
#include "qtoric/smith.hpp"
#include "test_support.hpp"

using namespace qtoric;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
    return m;
}

bool is_unimodular(const IntMatrix& m) {
    Int d = det(m);
    return d == 1 || d == -1;
}

} // namespace

TEST_CASE("determinant on known matrices") {
    CHECK(det(IntMatrix::identity(4)) == 1);
    CHECK(det(IntMatrix{{2, 0}, {0, 3}}) == 6);
    CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(det(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}) == 1);
    CHECK(det(IntMatrix{{1, 0, 0}, {0, 0, 1}, {-2, 2, 1}}) == -2);
}

TEST_CASE("unimodular inverse round trip") {
    auto rng = seeded_rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        // build a random unimodular matrix from elementary operations
        IntMatrix m = IntMatrix::identity(n);
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int ops = 0; ops < 12; ++ops) {
            int a = static_cast<int>(rng() % n);
            int b = static_cast<int>(rng() % n);
            if (a == b) continue;
            m.add_row(a, b, coef(rng));
        }
        REQUIRE(is_unimodular(m));
        IntMatrix inv = unimodular_inverse(m);
        CHECK(m * inv == IntMatrix::identity(n));
        CHECK(inv * m == IntMatrix::identity(n));
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    auto rng = seeded_rng(2);
    for (int trial = 0; trial < 120; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 5);
        int cols = 1 + static_cast<int>(rng() % 5);
        IntMatrix a = random_matrix(rng, rows, cols, 6);
        SmithResult s = smith_normal_form(a);

        CHECK(is_unimodular(s.u));
        CHECK(is_unimodular(s.v));
        CHECK(s.u * a * s.v == s.d);

        // diagonal, nonnegative, divisibility chain
        for (int i = 0; i < s.d.rows(); ++i)
            for (int j = 0; j < s.d.cols(); ++j)
                if (i != j) CHECK(s.d.at(i, j) == 0);
        for (size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
            CHECK(s.invariant_factors[i] > 0);
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        }
    }
}

TEST_CASE("smith rank matches known examples") {
    CHECK(smith_normal_form(IntMatrix{{2, 4}, {1, 2}}).rank == 1);
    SmithResult s = smith_normal_form(IntMatrix{{2, 0}, {0, 2}});
    CHECK(s.rank == 2);
    CHECK(s.torsion == std::vector<Int>{2, 2});
}

TEST_CASE("hermite reduction gives canonical representatives") {
    auto rng = seeded_rng(3);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 80; ++trial) {
        int dim = 2 + static_cast<int>(rng() % 4);
        IntMatrix rel = random_matrix(rng, 1 + static_cast<int>(rng() % 4), dim, 4);
        IntMatrix h = hermite_row_basis(rel);

        // every relation row reduces to zero
        for (int i = 0; i < rel.rows(); ++i) CHECK(row_lattice_contains(h, rel.row(i)));

        // v and v + (lattice vector) reduce identically
        std::vector<Int> v(static_cast<size_t>(dim));
        for (auto& e : v) e = d(rng);
        std::vector<Int> w = v;
        for (int i = 0; i < rel.rows(); ++i) {
            Int c = d(rng);
            for (int j = 0; j < dim; ++j) w[static_cast<size_t>(j)] += c * rel.at(i, j);
        }
        CHECK(reduce_mod_hermite(v, h) == reduce_mod_hermite(w, h));
    }
}

TEST_CASE("integral kernel") {
    auto rng = seeded_rng(4);
    for (int trial = 0; trial < 80; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % 5);
        IntMatrix a = random_matrix(rng, rows, cols, 5);
        auto kernel = integral_kernel(a);
        CHECK(static_cast<long long>(kernel.size()) == cols - lattice_rank(a));
        for (const auto& k : kernel) {
            auto img = a.apply(k);
            for (Int e : img) CHECK(e == 0);
        }
    }
}

TEST_CASE("quotient presentation splits free part") {
    // Z^3 / <(1,0,0), (0,2,0)> = Z/2 + Z
    IntMatrix rel{{1, 0, 0}, {0, 2, 0}};
    QuotientPresentation q = quotient_presentation(rel, 3);
    CHECK(q.free_rank == 1);
    CHECK(q.torsion == std::vector<Int>{2});
    CHECK(q.proj * q.lift == IntMatrix::identity(1));
    // lattice vectors project to zero
    for (int i = 0; i < rel.rows(); ++i) {
        auto img = q.proj.apply(rel.row(i));
        for (Int e : img) CHECK(e == 0);
    }
}

TEST_CASE("quotient presentation on random relation lattices") {
    auto rng = seeded_rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int dim = 1 + static_cast<int>(rng() % 5);
        IntMatrix rel = random_matrix(rng, static_cast<int>(rng() % 4), dim, 4);
        QuotientPresentation q = quotient_presentation(rel, dim);
        CHECK(q.free_rank == dim - lattice_rank(rel));
        if (q.free_rank > 0)
            CHECK(q.proj * q.lift == IntMatrix::identity(static_cast<int>(q.free_rank)));
        for (int i = 0; i < rel.rows(); ++i) {
            auto img = q.proj.apply(rel.row(i));
            for (Int e : img) CHECK(e == 0);
        }
    }
}
