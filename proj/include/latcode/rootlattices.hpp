#pragma once

#include <optional>
#include <span>
#include <string>

#include "latcode/exactlinear.hpp"
#include "latcode/rings.hpp"

namespace latcode {

enum class Family { A, D, E };

/// One base lattice of the construction. The coefficient ring is implied:
/// A_n -> Z/(n+1), D_n odd -> Z/4, D_n even -> the chosen order-4 ring,
/// E6 -> Z/3, E7 -> Z/2, E8 -> trivial.
struct RootLatticeSpec {
    Family family = Family::A;
    int n = 1;
    RingKind d_even_ring = RingKind::F2U;  // only for even D_n

    static RootLatticeSpec A(int n) { return {Family::A, n, RingKind::F2U}; }
    static RootLatticeSpec D(int n, RingKind ring = RingKind::F2U) { return {Family::D, n, ring}; }
    static RootLatticeSpec E(int n) { return {Family::E, n, RingKind::F2U}; }

    bool valid() const;
    std::string str() const;
    bool operator==(const RootLatticeSpec&) const = default;
};

/// Ring of Theorem 1; absent for E8 (trivial discriminant group).
std::optional<RingSpec> ring_of(const RootLatticeSpec& spec);

struct DiscriminantGroup {
    std::optional<RingSpec> ring;
    Int order;
};
DiscriminantGroup discriminant_group(const RootLatticeSpec& spec);

/// Exact bases of Lambda and Lambda^*. Rows of `F` are the f_i in
/// e-coordinates; rows of `Fstar` are the f*_i in f-coordinates. Constructed
/// with b(f_i, f*_j) = delta_ij asserted, along with det(gram_e) equal to
/// the discriminant-group order.
struct AmbientBasis {
    RootLatticeSpec spec;
    IntMatrix gram_e;
    IntMatrix F;
    RatMatrix Fstar;
    IntMatrix gram_f;      // integer: f-basis Gram; also the f*-coordinates of Lambda
    RatMatrix gram_fstar;  // f*-basis Gram
};

IntMatrix gram_e(Family family, int n);
AmbientBasis ambient_basis(const RootLatticeSpec& spec);

/// Coordinatewise reduction rho^m: integer f*-coordinates (m blocks of n)
/// to a length-m word over ring_of(spec). E8 maps everything to the empty
/// ring and is not accepted here.
Word rho(const RootLatticeSpec& spec, std::span<const Int> fstar_coords, std::size_t m);

/// Section of rho on a single block: integer f*-coordinates of a vector with
/// rho = c; lift(0) = 0.
std::vector<Int> lift(const RootLatticeSpec& spec, Elem c);

}  // namespace latcode
