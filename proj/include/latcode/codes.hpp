#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <vector>

#include "latcode/rings.hpp"

namespace latcode {

/// Enumeration guard: |R|^g span combinations / |R|^m brute-force vectors.
inline constexpr std::uint64_t kDefaultEnumGuard = std::uint64_t(1) << 26;

struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A code is the R-module generated by `generators` inside R^length.
struct Code {
    RingSpec ring;
    std::size_t length = 0;
    std::vector<Word> generators;
};

/// All codewords, sorted, each exactly once. Checks that the cardinality is
/// a prime power matching the ring (power of p for Z/pZ and Z/p^2Z, power of
/// 2 for the order-4 rings); for other moduli it must divide |R|^m.
std::vector<Word> enumerate_codewords(const Code& c, std::uint64_t guard = kDefaultEnumGuard);

/// Generators of { x : x.y = 0 for all y in C } (y conjugated when hermitian).
/// Small codes go through brute force; larger Z/kZ codes through an integer
/// kernel computation. Verifies |C| * |dual| = |R|^m.
Code dual_code(const Code& c, bool hermitian = false, std::uint64_t guard = kDefaultEnumGuard);

struct SelfDuality {
    bool self_orthogonal_euclidean = false;
    bool self_dual_euclidean = false;
    bool self_orthogonal_hermitian = false;
    bool self_dual_hermitian = false;
};
SelfDuality self_duality(const Code& c, std::uint64_t guard = kDefaultEnumGuard);

/// Type II: Euclidean self-dual plus wt_E in 2kZ (Z/kZ) or wt_L in 4Z
/// (order-4 rings), for every codeword.
bool type_II(const Code& c, std::uint64_t guard = kDefaultEnumGuard);

/// Type IV: self-dual (Euclidean for F2+uF2, Hermitian for F2xF2) plus even
/// Hamming weight for every codeword.
bool type_IV(const Code& c, std::uint64_t guard = kDefaultEnumGuard);

enum class EnumeratorKind { LeeComposition3, Ternary2 };

struct WeightEnumerator {
    EnumeratorKind kind;
    std::size_t length = 0;
    /// LeeComposition3: (N0,N1,N2) -> count. Ternary2: (l0,l1,0) -> count.
    std::map<std::array<std::size_t, 3>, std::uint64_t> coeff;

    std::uint64_t total() const;
};
WeightEnumerator weight_enumerator(const Code& c, EnumeratorKind kind,
                                   std::uint64_t guard = kDefaultEnumGuard);

/// Coordinatewise pairing of two binary codes into an F2xF2 code:
/// codewords { ((a_i, b_i))_i : a in c1, b in c2 }.
Code crt_combine(const Code& c1, const Code& c2);

/// Line-oriented code file: `ring <name>`, `length <m>`, `generators`,
/// then one generator per line as space-separated element tokens.
Code read_code(std::istream& is);
Code read_code_file(const std::string& path);
void write_code(std::ostream& os, const Code& c);
std::string write_code_str(const Code& c);

bool same_codeword_set(const Code& a, const Code& b, std::uint64_t guard = kDefaultEnumGuard);

}  // namespace latcode
