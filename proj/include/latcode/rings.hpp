#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace latcode {

/// Coefficient rings: Z/kZ, F2+uF2 (u^2=0), F4 (w^2=w+1), F2xF2.
enum class RingKind { ZMod, F2U, F4, F2xF2 };

struct RingSpec {
    RingKind kind = RingKind::ZMod;
    unsigned modulus = 2;  // only meaningful for ZMod

    static RingSpec zmod(unsigned k);
    static RingSpec f2u() { return {RingKind::F2U, 0}; }
    static RingSpec f4() { return {RingKind::F4, 0}; }
    static RingSpec f2xf2() { return {RingKind::F2xF2, 0}; }

    unsigned size() const { return kind == RingKind::ZMod ? modulus : 4; }
    bool order4() const { return kind != RingKind::ZMod; }
    /// Ring name as used in code files: Z<k>, F2u, F4, F2xF2.
    std::string name() const;
    static std::optional<RingSpec> parse(std::string_view s);

    bool operator==(const RingSpec&) const = default;
};

/// Canonical element encoding. ZMod: residue in [0,k). Order-4 rings: a
/// two-bit pair (lo,hi) read as lo + hi*u / lo + hi*w / (lo,hi).
using Elem = std::uint32_t;
using Word = std::vector<Elem>;

bool elem_valid(const RingSpec& r, Elem x);

Elem add(const RingSpec& r, Elem x, Elem y);
Elem mul(const RingSpec& r, Elem x, Elem y);
Elem neg(const RingSpec& r, Elem x);

/// Involution fixing 0 and 1: x -> x^2 on F4, coordinate swap on F2xF2,
/// identity on Z/kZ and F2+uF2.
Elem conjugate(const RingSpec& r, Elem x);

/// Sum of x_i * y_i (y conjugated first when hermitian is set).
Elem inner_product(const RingSpec& r, std::span<const Elem> x, std::span<const Elem> y,
                   bool hermitian = false);

/// wt_E over Z/kZ: residue i contributes i^2.
unsigned long long euclidean_weight(unsigned k, std::span<const Elem> x);

struct LeeComposition {
    std::size_t n0 = 0, n1 = 0, n2 = 0;
};

/// Counts (N0,N1,N2): N0 zeros, N2 the distinguished element (u / 1 / (1,1)),
/// N1 the rest. Order-4 rings only.
LeeComposition lee_composition(const RingSpec& r, std::span<const Elem> x);

struct RingWeights {
    std::size_t hamming = 0;  // N1 + N2
    std::size_t lee = 0;      // N1 + 2 N2
    std::size_t bachoc = 0;   // 2 N1 + N2
};
RingWeights weights_from_composition(const LeeComposition& c);

/// Element tokens. ZMod: decimal; F2U: 0|1|u|1+u; F4: 0|1|w|w2; F2xF2: 00|01|10|11.
std::string elem_token(const RingSpec& r, Elem x);
std::optional<Elem> parse_elem_token(const RingSpec& r, std::string_view tok);

std::string word_str(const RingSpec& r, std::span<const Elem> w);

}  // namespace latcode
