#include "doctest.h"

#include <sstream>

#include "latcode/codes.hpp"
#include "latcode/fixtures.hpp"

using namespace latcode;

TEST_CASE("enumerate_codewords: small spans") {
    Code rep{RingSpec::zmod(2), 2, {{1, 1}}};
    auto w = enumerate_codewords(rep);
    CHECK(w == std::vector<Word>{{0, 0}, {1, 1}});

    Code cu{RingSpec::f2u(), 1, {{2}}};  // span{u}: u*u = 0 closes the span
    CHECK(enumerate_codewords(cu).size() == 2);

    Code c2{RingSpec::zmod(4), 1, {{2}}};
    CHECK(enumerate_codewords(c2).size() == 2);
}

TEST_CASE("dual_code: brute force and kernel path agree") {
    Code rep{RingSpec::zmod(2), 2, {{1, 1}}};
    Code d = dual_code(rep);
    CHECK(same_codeword_set(rep, d));

    Code cu{RingSpec::f2u(), 1, {{2}}};
    CHECK(same_codeword_set(cu, dual_code(cu)));

    // derived by brute force over 27 vectors: dual of span{(1,1,1)} over Z/3
    Code r3{RingSpec::zmod(3), 3, {{1, 1, 1}}};
    Code d3 = dual_code(r3);
    Code expect{RingSpec::zmod(3), 3, {{1, 2, 0}, {0, 1, 2}}};
    CHECK(same_codeword_set(d3, expect));
    CHECK(enumerate_codewords(d3).size() == 9);

    // large-m kernel path against small-m brute force on a padded instance
    Code ham = fixture_code("hamming8");
    Code dual_small = dual_code(ham);  // 2^8 brute force
    CHECK(same_codeword_set(ham, dual_small));
}

TEST_CASE("dual of the Golay code (kernel path) is the code itself") {
    Code g = fixture_code("golay24");
    Code d = dual_code(g);
    CHECK(enumerate_codewords(d).size() == 4096);
    CHECK(same_codeword_set(g, d));
}

TEST_CASE("(C-dual)-dual = C; |C| |C-dual| = |R|^m") {
    for (const char* name : {"tetracode", "octacode", "hexacode", "k2_f2u"}) {
        Code c = fixture_code(name);
        Code dd = dual_code(dual_code(c));
        CHECK(same_codeword_set(c, dd));
        std::uint64_t space = 1;
        for (std::size_t i = 0; i < c.length; ++i) space *= c.ring.size();
        CHECK(enumerate_codewords(c).size() * enumerate_codewords(dual_code(c)).size() == space);
    }
}

TEST_CASE("self_duality flags") {
    CHECK(self_duality(Code{RingSpec::zmod(2), 2, {{1, 1}}}).self_dual_euclidean);

    // conj((1,1)) = (1,1), so span{(1,1)} over F2xF2 is hermitian self-dual
    SelfDuality sd = self_duality(Code{RingSpec::f2xf2(), 1, {{3}}});
    CHECK(sd.self_dual_hermitian);

    // <5> over Z/25
    CHECK(self_duality(fixture_code("z25_gen5")).self_dual_euclidean);

    // hexacode: hermitian self-dual but not euclidean self-dual
    SelfDuality hx = self_duality(fixture_code("hexacode"));
    CHECK(hx.self_dual_hermitian);
    CHECK(!hx.self_dual_euclidean);
}

TEST_CASE("type II") {
    CHECK(type_II(fixture_code("hamming8")));
    CHECK(!type_II(Code{RingSpec::zmod(2), 2, {{1, 1}}}));  // wt_E = 2 not in 4Z
    CHECK(type_II(fixture_code("octacode")));
    CHECK(type_II(fixture_code("golay24")));
}

TEST_CASE("type IV") {
    CHECK(!type_IV(Code{RingSpec::f2u(), 1, {{2}}}));    // wt_H(u) = 1
    CHECK(!type_IV(Code{RingSpec::f2xf2(), 1, {{3}}}));  // wt_H((1,1)) = 1
    Code crt = crt_combine(fixture_code("c6_1"), dual_code(fixture_code("c6_1")));
    CHECK(type_IV(crt));
    CHECK(type_IV(fixture_code("k2_f2u")));
}

TEST_CASE("type implications on the fixture corpus") {
    for (const char* name : {"golay24", "hamming8", "octacode", "tetracode", "golay12",
                             "k2_f2u", "3c2_f4", "z25_gen5"}) {
        Code c = fixture_code(name);
        if (type_II(c)) CHECK(self_duality(c).self_dual_euclidean);
        if ((c.ring.kind == RingKind::F2U || c.ring.kind == RingKind::F2xF2) && type_IV(c)) {
            SelfDuality sd = self_duality(c);
            CHECK((c.ring.kind == RingKind::F2U ? sd.self_dual_euclidean
                                                : sd.self_dual_hermitian));
        }
    }
}

TEST_CASE("corollary: mn = 0 mod 8 for Type II (n odd) / self-dual (n even) Z/(n+1) codes") {
    for (const char* name :
         {"golay24", "hamming8", "3e8", "octacode", "tetracode", "golay12", "z25_gen5", "rep2",
          "d5_two"}) {
        Code c = fixture_code(name);
        if (c.ring.kind != RingKind::ZMod) continue;
        unsigned n = c.ring.modulus - 1;
        bool applicable = (n % 2 == 1) ? type_II(c) : self_duality(c).self_dual_euclidean;
        if (applicable) CHECK((c.length * n) % 8 == 0);
    }
}

TEST_CASE("weight enumerators") {
    // {0, u}: X0 + X2
    WeightEnumerator we = weight_enumerator(Code{RingSpec::f2u(), 1, {{2}}},
                                            EnumeratorKind::LeeComposition3);
    CHECK(we.coeff.size() == 2);
    CHECK(we.coeff.at({1, 0, 0}) == 1);
    CHECK(we.coeff.at({0, 0, 1}) == 1);

    WeightEnumerator z = weight_enumerator(Code{RingSpec::zmod(3), 2, {}},
                                           EnumeratorKind::Ternary2);
    CHECK(z.coeff.size() == 1);
    CHECK(z.coeff.at({2, 0, 0}) == 1);

    // tetracode: X0^4 + 8 X0 X1^3, evaluated at X_i = 1 equals |C|
    WeightEnumerator t = weight_enumerator(fixture_code("tetracode"), EnumeratorKind::Ternary2);
    CHECK(t.coeff.at({4, 0, 0}) == 1);
    CHECK(t.coeff.at({1, 3, 0}) == 8);
    CHECK(t.total() == 9);

    // total degree of every monomial is m
    for (const auto& [e, c] : weight_enumerator(fixture_code("k2_f2u"),
                                                EnumeratorKind::LeeComposition3)
                                  .coeff)
        CHECK(e[0] + e[1] + e[2] == 2);

    CHECK_THROWS_AS(weight_enumerator(fixture_code("tetracode"),
                                      EnumeratorKind::LeeComposition3),
                    std::invalid_argument);
}

TEST_CASE("crt_combine") {
    Code zero{RingSpec::zmod(2), 1, {{0}}};
    CHECK(enumerate_codewords(crt_combine(zero, zero)).size() == 1);

    Code rep{RingSpec::zmod(2), 2, {{1, 1}}};
    Code c = crt_combine(rep, rep);
    CHECK(enumerate_codewords(c).size() == 4);

    Code c61 = fixture_code("c6_1");
    Code crt = crt_combine(c61, dual_code(c61));
    CHECK(enumerate_codewords(crt).size() == 64);
    CHECK(self_duality(crt).self_dual_hermitian);

    CHECK_THROWS_AS(crt_combine(zero, rep), std::invalid_argument);
}

TEST_CASE("code file format round-trips bit-exactly") {
    for (const char* name : {"golay24", "tetracode", "octacode", "hexacode", "k2_f2u"}) {
        Code c = fixture_code(name);
        std::string text = write_code_str(c);
        std::istringstream is(text);
        Code back = read_code(is);
        CHECK(back.ring == c.ring);
        CHECK(back.length == c.length);
        CHECK(back.generators == c.generators);
        CHECK(write_code_str(back) == text);
    }
    std::istringstream bad("ring Z4\nlength 0\ngenerators\n");
    CHECK_THROWS_AS(read_code(bad), std::invalid_argument);
}

TEST_CASE("enumeration guard") {
    Code big{RingSpec::zmod(2), 40, {}};
    big.generators.assign(30, Word(40, 1));
    CHECK_THROWS_AS(enumerate_codewords(big, 1 << 10), GuardExceeded);
}
