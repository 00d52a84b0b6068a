#pragma once

#include <string>
#include <vector>

#include "latcode/codes.hpp"
#include "latcode/exactlinear.hpp"
#include "latcode/rootlattices.hpp"

namespace latcode {

/// Gamma_C = (rho^m)^{-1}(C) as a sublattice of (Lambda^*)^m. Rows of
/// `basis` are lattice basis vectors in f*-coordinates (HNF-canonical), so
/// equal lattices have equal bases.
struct CodeLattice {
    RootLatticeSpec spec;
    std::size_t m = 0;
    RatMatrix basis;  // mn x mn
    RatMatrix gram;

    std::size_t rank() const { return basis.rows(); }
};

/// Build Gamma_C from a code over ring_of(spec). Checks rho(row) lies in C
/// for every basis row and [Gamma_C : Lambda^m] = |C|.
CodeLattice build_gamma_c(const RootLatticeSpec& spec, const Code& code,
                          std::uint64_t guard = kDefaultEnumGuard);

/// Lambda^m itself (the zero-code lattice; the only option for E8).
CodeLattice lambda_power(const RootLatticeSpec& spec, std::size_t m);

bool is_integral(const CodeLattice& L);
bool is_even(const CodeLattice& L);
bool is_unimodular(const CodeLattice& L);

/// Dual basis construction: basis <- gram^{-1} * basis, re-canonicalized.
CodeLattice dual_lattice(const CodeLattice& L);

bool lattices_equal(const CodeLattice& a, const CodeLattice& b);

/// One clause of a theorem of the form "lattice predicate <=> code predicate".
struct TheoremClause {
    std::string name;
    bool lattice_side = false;
    bool code_side = false;
    bool agree() const { return lattice_side == code_side; }
};

struct TheoremReport {
    RootLatticeSpec spec;
    std::vector<TheoremClause> clauses;
    bool pass() const;
    std::string str() const;  // one line per clause
};

/// Evaluate the integral / unimodular / even / even-unimodular equivalences
/// for the family and congruence branch of `spec`.
TheoremReport verify_main_theorem(const RootLatticeSpec& spec, const Code& code,
                                  std::uint64_t guard = kDefaultEnumGuard);

/// Exhaustive coset check of the B(x,y) in Z / B(x,x) in 2Z criteria over
/// all pairs of (Lambda^*/Lambda)^m cosets, using fixed lifts. Also checks
/// that B mod Z (and B(x,x) mod 2Z) is independent of the lift.
struct OracleReport {
    RootLatticeSpec spec;
    std::size_t m = 0;
    std::uint64_t pairs_checked = 0;
    bool pass = false;
    std::string counterexample;  // empty when pass
};
OracleReport coset_oracle(const RootLatticeSpec& spec, std::size_t m, bool parallel = true);

}  // namespace latcode
