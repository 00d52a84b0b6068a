#include "latcode/rings.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace latcode {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// 4x4 multiplication tables for the order-4 rings, indexed by the two-bit
// encodings. Verified exhaustively against the ring axioms in the tests.
constexpr std::array<std::array<Elem, 4>, 4> kMulF2U = {{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 0, 2},  // u*u = 0
    {0, 3, 2, 1},
}};
constexpr std::array<std::array<Elem, 4>, 4> kMulF4 = {{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},  // w*w = w+1
    {0, 3, 1, 2},
}};
constexpr std::array<std::array<Elem, 4>, 4> kMulF2xF2 = {{
    {0, 0, 0, 0},
    {0, 1, 0, 1},
    {0, 0, 2, 2},
    {0, 1, 2, 3},
}};

}  // namespace

RingSpec RingSpec::zmod(unsigned k) {
    if (k < 2) throw std::invalid_argument("ZMod: modulus must be >= 2");
    return {RingKind::ZMod, k};
}

std::string RingSpec::name() const {
    switch (kind) {
        case RingKind::ZMod: return "Z" + std::to_string(modulus);
        case RingKind::F2U: return "F2u";
        case RingKind::F4: return "F4";
        case RingKind::F2xF2: return "F2xF2";
    }
    return "?";
}

std::optional<RingSpec> RingSpec::parse(std::string_view s) {
    if (s == "F2u") return f2u();
    if (s == "F4") return f4();
    if (s == "F2xF2") return f2xf2();
    if (s.size() >= 2 && s[0] == 'Z') {
        unsigned k = 0;
        auto [p, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), k);
        if (ec == std::errc() && p == s.data() + s.size() && k >= 2) return zmod(k);
    }
    return std::nullopt;
}

bool elem_valid(const RingSpec& r, Elem x) { return x < r.size(); }

Elem add(const RingSpec& r, Elem x, Elem y) {
    require(elem_valid(r, x) && elem_valid(r, y), "ring add: invalid encoding");
    if (r.kind == RingKind::ZMod) return (x + y) % r.modulus;
    return x ^ y;  // all order-4 rings are (F2)^2 additively
}

Elem mul(const RingSpec& r, Elem x, Elem y) {
    require(elem_valid(r, x) && elem_valid(r, y), "ring mul: invalid encoding");
    switch (r.kind) {
        case RingKind::ZMod:
            return static_cast<Elem>((static_cast<std::uint64_t>(x) * y) % r.modulus);
        case RingKind::F2U: return kMulF2U[x][y];
        case RingKind::F4: return kMulF4[x][y];
        case RingKind::F2xF2: return kMulF2xF2[x][y];
    }
    return 0;
}

Elem neg(const RingSpec& r, Elem x) {
    require(elem_valid(r, x), "ring neg: invalid encoding");
    if (r.kind == RingKind::ZMod) return x == 0 ? 0 : r.modulus - x;
    return x;  // characteristic 2
}

Elem conjugate(const RingSpec& r, Elem x) {
    require(elem_valid(r, x), "conjugate: invalid encoding");
    switch (r.kind) {
        case RingKind::F4: return x < 2 ? x : (x ^ 1u);    // w <-> w+1
        case RingKind::F2xF2: return ((x & 1u) << 1) | (x >> 1);
        default: return x;
    }
}

Elem inner_product(const RingSpec& r, std::span<const Elem> x, std::span<const Elem> y,
                   bool hermitian) {
    require(x.size() == y.size(), "inner_product: length mismatch");
    Elem acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Elem yi = hermitian ? conjugate(r, y[i]) : y[i];
        acc = add(r, acc, mul(r, x[i], yi));
    }
    return acc;
}

unsigned long long euclidean_weight(unsigned k, std::span<const Elem> x) {
    RingSpec r = RingSpec::zmod(k);
    unsigned long long w = 0;
    for (Elem a : x) {
        require(elem_valid(r, a), "euclidean_weight: invalid encoding");
        w += static_cast<unsigned long long>(a) * a;
    }
    return w;
}

LeeComposition lee_composition(const RingSpec& r, std::span<const Elem> x) {
    require(r.order4(), "lee_composition: requires an order-4 ring");
    // the N2 element: u over F2+uF2, 1 over F4, (1,1) over F2xF2
    Elem two = r.kind == RingKind::F2U ? 2u : (r.kind == RingKind::F4 ? 1u : 3u);
    LeeComposition c;
    for (Elem a : x) {
        require(elem_valid(r, a), "lee_composition: invalid encoding");
        if (a == 0)
            ++c.n0;
        else if (a == two)
            ++c.n2;
        else
            ++c.n1;
    }
    return c;
}

RingWeights weights_from_composition(const LeeComposition& c) {
    return {c.n1 + c.n2, c.n1 + 2 * c.n2, 2 * c.n1 + c.n2};
}

std::string elem_token(const RingSpec& r, Elem x) {
    require(elem_valid(r, x), "elem_token: invalid encoding");
    switch (r.kind) {
        case RingKind::ZMod: return std::to_string(x);
        case RingKind::F2U: {
            static const char* toks[] = {"0", "1", "u", "1+u"};
            return toks[x];
        }
        case RingKind::F4: {
            static const char* toks[] = {"0", "1", "w", "w2"};
            return toks[x];
        }
        case RingKind::F2xF2: {
            static const char* toks[] = {"00", "10", "01", "11"};
            return toks[x];
        }
    }
    return "?";
}

std::optional<Elem> parse_elem_token(const RingSpec& r, std::string_view tok) {
    for (Elem x = 0; x < r.size(); ++x)
        if (elem_token(r, x) == tok) return x;
    return std::nullopt;
}

std::string word_str(const RingSpec& r, std::span<const Elem> w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << elem_token(r, w[i]);
    }
    return os.str();
}

}  // namespace latcode
