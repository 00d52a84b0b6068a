#include "doctest.h"

#include <stdexcept>

#include "latcode/rings.hpp"

using namespace latcode;

namespace {
const RingSpec kF2U = RingSpec::f2u();
const RingSpec kF4 = RingSpec::f4();
const RingSpec kFF = RingSpec::f2xf2();
// encodings: F2U {0,1,u,1+u} = {0,1,2,3}; F4 {0,1,w,w2} = {0,1,2,3};
// F2xF2 {(0,0),(1,0),(0,1),(1,1)} = {0,1,2,3}
}  // namespace

TEST_CASE("paper multiplication facts") {
    CHECK(mul(kF2U, 2, 2) == 0);       // u*u = 0
    CHECK(mul(kF4, 2, 2) == 3);        // w*w = w+1
    CHECK(add(RingSpec::zmod(5), 3, 4) == 2);
}

TEST_CASE("exhaustive ring axioms for the order-4 rings") {
    for (const RingSpec& r : {kF2U, kF4, kFF}) {
        CAPTURE(r.name());
        for (Elem a = 0; a < 4; ++a) {
            CHECK(add(r, a, 0) == a);
            CHECK(mul(r, a, 1) == a);
            CHECK(add(r, a, neg(r, a)) == 0);
            for (Elem b = 0; b < 4; ++b) {
                CHECK(add(r, a, b) == add(r, b, a));
                CHECK(mul(r, a, b) == mul(r, b, a));
                for (Elem c = 0; c < 4; ++c) {
                    CHECK(add(r, add(r, a, b), c) == add(r, a, add(r, b, c)));
                    CHECK(mul(r, mul(r, a, b), c) == mul(r, a, mul(r, b, c)));
                    CHECK(mul(r, a, add(r, b, c)) == add(r, mul(r, a, b), mul(r, a, c)));
                }
            }
        }
    }
}

TEST_CASE("conjugation is a ring involution fixing 0 and 1") {
    for (const RingSpec& r : {kF2U, kF4, kFF, RingSpec::zmod(7)}) {
        for (Elem a = 0; a < r.size(); ++a) {
            CHECK(conjugate(r, conjugate(r, a)) == a);
            for (Elem b = 0; b < r.size(); ++b) {
                CHECK(conjugate(r, add(r, a, b)) == add(r, conjugate(r, a), conjugate(r, b)));
                CHECK(conjugate(r, mul(r, a, b)) == mul(r, conjugate(r, a), conjugate(r, b)));
            }
        }
        CHECK(conjugate(r, 0) == 0);
        CHECK(conjugate(r, 1) == 1);
    }
    CHECK(conjugate(kF4, 2) == 3);  // w -> w+1 = w^2
    CHECK(conjugate(kFF, 1) == 2);  // (1,0) -> (0,1)
}

TEST_CASE("inner products") {
    Word x{1, 2}, y{2, 2};
    CHECK(inner_product(RingSpec::zmod(3), x, y) == 0);
    Word a{1, 2}, b{1, 2};  // (1, u) over F2+uF2
    CHECK(inner_product(kF2U, a, b) == 1);
    Word h{1}, g{1};  // (1,0); hermitian pairing conjugates the right side
    CHECK(inner_product(kFF, h, g, true) == 0);
    CHECK_THROWS_AS(inner_product(kF4, Word{1}, Word{1, 2}), std::invalid_argument);
}

TEST_CASE("euclidean weight") {
    CHECK(euclidean_weight(4, Word{1, 2, 3}) == 14);
    CHECK(euclidean_weight(2, Word{1, 1, 1, 1}) == 4);
    CHECK(euclidean_weight(3, Word{0, 0}) == 0);
}

TEST_CASE("euclidean weight is x.x mod k") {
    for (unsigned k = 2; k <= 9; ++k) {
        RingSpec r = RingSpec::zmod(k);
        for (unsigned len = 1; len <= 3; ++len) {
            std::vector<Elem> w(len, 0);
            for (;;) {
                Elem ip = inner_product(r, w, w);
                CHECK(euclidean_weight(k, w) % k == ip);
                std::size_t i = 0;
                for (; i < len; ++i) {
                    if (++w[i] < k) break;
                    w[i] = 0;
                }
                if (i == len) break;
            }
        }
    }
}

TEST_CASE("Type II criterion is representative-independent: i^2 = (2k-i)^2 mod 4k") {
    for (unsigned k = 1; k <= 13; ++k)
        for (unsigned i = 0; i < 2 * k; ++i)
            CHECK((i * i) % (4 * k) == ((2 * k - i) * (2 * k - i)) % (4 * k));
}

TEST_CASE("Lee composition and weights") {
    Word x{1, 2, 0, 3};  // (1, u, 0, 1+u)
    LeeComposition c = lee_composition(kF2U, x);
    CHECK(c.n0 == 1);
    CHECK(c.n1 == 2);
    CHECK(c.n2 == 1);
    RingWeights w = weights_from_composition(c);
    CHECK(w.hamming == 3);
    CHECK(w.lee == 4);
    CHECK(w.bachoc == 5);

    Word f4w{2, 3, 1};  // (w, w2, 1): N2 counts x = 1
    LeeComposition c4 = lee_composition(kF4, f4w);
    CHECK(c4.n0 == 0);
    CHECK(c4.n1 == 2);
    CHECK(c4.n2 == 1);

    LeeComposition z = lee_composition(kFF, Word{0});
    CHECK(z.n0 == 1);

    CHECK_THROWS_AS(lee_composition(RingSpec::zmod(4), Word{1}), std::invalid_argument);

    // wt_L = wt_H + N2 and wt_B = wt_H + N1 for every composition
    for (std::size_t n0 = 0; n0 <= 3; ++n0)
        for (std::size_t n1 = 0; n1 <= 3; ++n1)
            for (std::size_t n2 = 0; n2 <= 3; ++n2) {
                RingWeights ww = weights_from_composition({n0, n1, n2});
                CHECK(ww.lee == ww.hamming + n2);
                CHECK(ww.bachoc == ww.hamming + n1);
            }
}

TEST_CASE("element token grammar round-trips") {
    for (const RingSpec& r :
         {kF2U, kF4, kFF, RingSpec::zmod(2), RingSpec::zmod(25)}) {
        for (Elem x = 0; x < r.size(); ++x) {
            auto back = parse_elem_token(r, elem_token(r, x));
            REQUIRE(back.has_value());
            CHECK(*back == x);
        }
    }
    CHECK(elem_token(kF2U, 3) == "1+u");
    CHECK(elem_token(kF4, 3) == "w2");
    CHECK(elem_token(kFF, 1) == "10");
    CHECK(!parse_elem_token(kF4, "q").has_value());
}

TEST_CASE("ring spec parsing") {
    CHECK(RingSpec::parse("Z4") == RingSpec::zmod(4));
    CHECK(RingSpec::parse("F2u") == kF2U);
    CHECK(RingSpec::parse("F4") == kF4);
    CHECK(RingSpec::parse("F2xF2") == kFF);
    CHECK(!RingSpec::parse("Z1").has_value());
    CHECK(!RingSpec::parse("GF9").has_value());
}
