#include "doctest.h"

#include <random>

#include "latcode/rootlattices.hpp"

using namespace latcode;

namespace {

std::vector<RootLatticeSpec> all_specs_up_to(int nmax) {
    std::vector<RootLatticeSpec> specs;
    for (int n = 1; n <= nmax; ++n) specs.push_back(RootLatticeSpec::A(n));
    for (int n = 4; n <= nmax; ++n) {
        if (n % 2 == 1) {
            specs.push_back(RootLatticeSpec::D(n));
        } else {
            for (RingKind r : {RingKind::F2U, RingKind::F4, RingKind::F2xF2})
                specs.push_back(RootLatticeSpec::D(n, r));
        }
    }
    specs.push_back(RootLatticeSpec::E(6));
    specs.push_back(RootLatticeSpec::E(7));
    specs.push_back(RootLatticeSpec::E(8));
    return specs;
}

}  // namespace

TEST_CASE("gram_e worked examples") {
    IntMatrix a2 = gram_e(Family::A, 2);
    CHECK(a2.at(0, 0) == 2);
    CHECK(a2.at(0, 1) == -1);

    IntMatrix d4 = gram_e(Family::D, 4);
    CHECK(d4.at(0, 1) == -1);
    CHECK(d4.at(1, 2) == -1);
    CHECK(d4.at(1, 3) == -1);  // {n-2, n}
    CHECK(d4.at(2, 3) == 0);   // {n-1, n} not joined

    IntMatrix e6 = gram_e(Family::E, 6);
    CHECK(e6.at(2, 5) == -1);  // {n-3, n}
    CHECK(e6.at(4, 5) == 0);

    CHECK_THROWS_AS(gram_e(Family::D, 3), std::invalid_argument);
}

TEST_CASE("duality of bases for every spec with n <= 12") {
    // ambient_basis asserts b(f_i, f*_j) = delta_ij and det(gram_e) = |disc|
    // internally; this exercises every family, parity, and ring choice
    for (const auto& spec : all_specs_up_to(12)) {
        CAPTURE(spec.str());
        AmbientBasis ab = ambient_basis(spec);
        CHECK(mul(ab.Fstar, to_rat(ab.gram_f)) == RatMatrix::identity(spec.n));
        CHECK(det(ab.gram_e) == discriminant_group(spec).order);
        // gram_e positive definite: leading principal minors > 0
        for (int k = 1; k <= spec.n; ++k) {
            IntMatrix lead(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) lead.at(i, j) = ab.gram_e.at(i, j);
            CHECK(det(lead) > 0);
        }
    }
}

TEST_CASE("discriminant groups") {
    CHECK(discriminant_group(RootLatticeSpec::A(4)).ring == RingSpec::zmod(5));
    CHECK(discriminant_group(RootLatticeSpec::A(4)).order == 5);
    CHECK(discriminant_group(RootLatticeSpec::D(5)).ring == RingSpec::zmod(4));
    CHECK(discriminant_group(RootLatticeSpec::D(5)).order == 4);
    auto e8 = discriminant_group(RootLatticeSpec::E(8));
    CHECK(!e8.ring.has_value());
    CHECK(e8.order == 1);
    CHECK(ring_of(RootLatticeSpec::D(6, RingKind::F4)) == RingSpec::f4());
}

TEST_CASE("rho: worked examples") {
    // A_n: rho(f*_1) = 1
    for (int n : {1, 2, 5}) {
        RootLatticeSpec s = RootLatticeSpec::A(n);
        std::vector<Int> x(n, 0);
        x[0] = 1;
        CHECK(rho(s, x, 1) == Word{1});
    }
    // D even / F2U: rho(f*_1) = 1, rho(f*_2) = 1+u
    RootLatticeSpec d4 = RootLatticeSpec::D(4, RingKind::F2U);
    CHECK(rho(d4, std::vector<Int>{1, 0, 0, 0}, 1) == Word{1});
    CHECK(rho(d4, std::vector<Int>{0, 1, 0, 0}, 1) == Word{3});
    // E6: index 4 is in the subtracted block
    RootLatticeSpec e6 = RootLatticeSpec::E(6);
    CHECK(rho(e6, std::vector<Int>{0, 0, 0, 1, 0, 0}, 1) == Word{2});
}

TEST_CASE("rho is additive, kernel contains the f-basis, lift is a section") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-6, 6);
    for (const auto& spec : all_specs_up_to(8)) {
        if (spec.family == Family::E && spec.n == 8) continue;
        CAPTURE(spec.str());
        AmbientBasis ab = ambient_basis(spec);
        RingSpec ring = *ring_of(spec);
        const int n = spec.n;

        // rho(f_j) = 0: rows of gram_f are the f-basis in f*-coordinates
        for (int j = 0; j < n; ++j) {
            std::vector<Int> row(n);
            for (int c = 0; c < n; ++c) row[c] = ab.gram_f.at(j, c);
            CHECK(rho(spec, row, 1) == Word{0});
        }

        // rho(lift(c)) = c and lift(0) = 0
        for (Elem c = 0; c < ring.size(); ++c) {
            auto l = lift(spec, c);
            CHECK(rho(spec, l, 1) == Word{c});
        }
        CHECK(lift(spec, 0) == std::vector<Int>(n, 0));

        // additivity and invariance under Lambda^m shifts, m = 2
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Int> x(2 * n), y(2 * n);
            for (auto& v : x) v = d(rng);
            for (auto& v : y) v = d(rng);
            std::vector<Int> xy(2 * n);
            for (int i = 0; i < 2 * n; ++i) xy[i] = x[i] + y[i];
            Word rx = rho(spec, x, 2), ry = rho(spec, y, 2), rxy = rho(spec, xy, 2);
            for (int i = 0; i < 2; ++i) CHECK(rxy[i] == add(ring, rx[i], ry[i]));

            // shift block 0 by a random f-basis combination
            std::vector<Int> shifted = x;
            for (int j = 0; j < n; ++j) {
                int c = d(rng);
                for (int t = 0; t < n; ++t) shifted[t] += c * ab.gram_f.at(j, t);
            }
            CHECK(rho(spec, shifted, 2) == rx);
        }
    }
}

TEST_CASE("lift tables for the order-4 rings") {
    RootLatticeSpec f2u = RootLatticeSpec::D(4, RingKind::F2U);
    CHECK(lift(f2u, 2) == std::vector<Int>{1, 1, 0, 0});  // u -> f*_1 + f*_2
    RootLatticeSpec f4 = RootLatticeSpec::D(4, RingKind::F4);
    CHECK(lift(f4, 3) == std::vector<Int>{0, 1, 0, 0});  // w2 -> f*_2
    RootLatticeSpec ff = RootLatticeSpec::D(4, RingKind::F2xF2);
    CHECK(lift(ff, 1) == std::vector<Int>{1, 0, 0, 0});
    RootLatticeSpec a2 = RootLatticeSpec::A(2);
    CHECK(lift(a2, 2) == std::vector<Int>{2, 0});
}

TEST_CASE("invalid specs rejected") {
    CHECK(!RootLatticeSpec::D(3).valid());
    CHECK(!RootLatticeSpec::E(5).valid());
    CHECK(!RootLatticeSpec::A(0).valid());
    CHECK_THROWS_AS(ambient_basis(RootLatticeSpec::E(9)), std::invalid_argument);
}
