#include "doctest.h"

#include <random>

#include "latcode/exactlinear.hpp"

using namespace latcode;

namespace {

IntMatrix im(std::size_t r, std::size_t c, std::initializer_list<long> vals) {
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (long v : vals) m.a[i++] = v;
    return m;
}

// independent determinant oracle: cofactor expansion
Rat det_cofactor(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    if (n == 1) return m.at(0, 0);
    Rat d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        std::vector<Rat> sub;
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) sub.push_back(m.at(r, c));
        Rat minor = det_cofactor(RatMatrix::from_rat(n - 1, n - 1, sub));
        d += (j % 2 ? -minor : minor) * m.at(0, j);
    }
    return d;
}

// row-lattice membership: does v lie in the row span of hnf basis h over Z?
bool in_row_lattice(const IntMatrix& h, const std::vector<Int>& v) {
    std::vector<Int> w = v;
    std::size_t row = 0;
    for (std::size_t col = 0; col < h.cols && row < h.rows; ++col) {
        if (h.at(row, col) == 0) continue;
        Int q = w[col] / h.at(row, col);
        if (w[col] % h.at(row, col) != 0) return false;
        for (std::size_t c = col; c < h.cols; ++c) w[c] -= q * h.at(row, c);
        ++row;
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("hnf: worked example and degenerate inputs") {
    IntMatrix m = im(3, 2, {2, 0, 0, 2, 1, 1});
    IntMatrix h = hnf(m);
    CHECK(h == im(2, 2, {1, 1, 0, 2}));

    CHECK(hnf(IntMatrix::identity(4)) == IntMatrix::identity(4));
    CHECK(hnf(IntMatrix(3, 3)).rows == 0);  // zero rows dropped
}

TEST_CASE("hnf: idempotent, row lattice preserved") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix m(4, 3);
        for (auto& x : m.a) x = d(rng);
        IntMatrix h = hnf(m);
        CHECK(hnf(h) == h);
        // every original row lies in the HNF lattice and vice versa
        for (std::size_t i = 0; i < m.rows; ++i) {
            std::vector<Int> row(m.cols);
            for (std::size_t j = 0; j < m.cols; ++j) row[j] = m.at(i, j);
            CHECK(in_row_lattice(h, row));
        }
        IntMatrix h2 = hnf(m);  // reduce h's rows against a re-derived basis
        for (std::size_t i = 0; i < h.rows; ++i) {
            std::vector<Int> row(h.cols);
            for (std::size_t j = 0; j < h.cols; ++j) row[j] = h.at(i, j);
            CHECK(in_row_lattice(h2, row));
        }
    }
}

TEST_CASE("hnf_with_transform and right_kernel") {
    IntMatrix m = im(2, 3, {2, 4, 6, 1, 2, 3});
    HnfResult r = hnf_with_transform(m);
    CHECK(r.rank == 1);
    IntMatrix um = mul(r.u, m);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(um.at(0, j) == r.h.at(0, j));
        CHECK(um.at(1, j) == 0);
    }

    IntMatrix ker = right_kernel(m);
    CHECK(ker.rows == 2);
    for (std::size_t i = 0; i < ker.rows; ++i)
        for (std::size_t r2 = 0; r2 < m.rows; ++r2) {
            Int s = 0;
            for (std::size_t j = 0; j < 3; ++j) s += m.at(r2, j) * ker.at(i, j);
            CHECK(s == 0);
        }
}

TEST_CASE("det: A2 Gram against cofactor oracle; random cross-check") {
    RatMatrix a2 = to_rat(im(2, 2, {2, -1, -1, 2}));
    CHECK(det(a2) == 3);
    CHECK(det_cofactor(a2) == 3);

    CHECK(det(RatMatrix::identity(5)) == 1);

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m(4, 4);
        for (auto& x : m.a) x = d(rng);
        RatMatrix q(m, 3);
        CHECK(det(q) == det_cofactor(q));
    }
}

TEST_CASE("det multiplicativity on random small matrices") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix a(3, 3), b(3, 3);
        for (auto& x : a.a) x = d(rng);
        for (auto& x : b.a) x = d(rng);
        CHECK(det(mul(a, b)) == det(a) * det(b));
    }
}

TEST_CASE("inverse: exact, worked examples") {
    RatMatrix half = inverse(to_rat(im(1, 1, {2})));
    CHECK(half.at(0, 0) == make_rat(1, 2));

    RatMatrix a2 = to_rat(im(2, 2, {2, -1, -1, 2}));
    RatMatrix inv = inverse(a2);
    CHECK(inv.at(0, 0) == make_rat(2, 3));
    CHECK(inv.at(0, 1) == make_rat(1, 3));
    CHECK(mul(a2, inv) == RatMatrix::identity(2));

    CHECK(inverse(RatMatrix::identity(3)) == RatMatrix::identity(3));
    CHECK_THROWS_AS(inverse(to_rat(im(2, 2, {1, 2, 2, 4}))), std::domain_error);
}

TEST_CASE("RatMatrix normalization keeps the denominator minimal") {
    RatMatrix m(im(2, 2, {2, 4, 6, 8}), 4);
    CHECK(m.den == 2);
    CHECK(m.at(0, 0) == make_rat(1, 2));
    RatMatrix inted(im(1, 1, {-3}), -3);
    CHECK(inted.den == 1);
    CHECK(inted.at(0, 0) == 1);
}

TEST_CASE("lattice dump round-trip") {
    RatMatrix basis(im(2, 2, {1, 1, 0, 2}), 3);
    std::string dump = write_lattice_dump(basis);
    CHECK(dump == "denominator 3\n1 1\n0 2\n");
    CHECK(read_lattice_dump(dump) == basis);
}
