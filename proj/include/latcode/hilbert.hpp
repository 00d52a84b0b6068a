#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latcode/codes.hpp"
#include "latcode/construction.hpp"
#include "latcode/exactlinear.hpp"
#include "latcode/rootlattices.hpp"

namespace latcode {

/// Q(zeta_8) models D_4 (code alphabet F2+uF2); Q(zeta_9) models E_6 (Z/3Z).
enum class CycField { Zeta8, Zeta9 };

std::size_t cyc_degree(CycField f);                   // 4 or 6
std::size_t real_degree(CycField f);                  // [K:Q] = 2 or 3
std::optional<CycField> parse_field(const std::string& s);
std::string field_name(CycField f);

/// Element of Z[zeta] over the power basis zeta^0..zeta^{phi-1}; reduction by
/// zeta_8^4 = -1 and zeta_9^6 = -zeta_9^3 - 1.
struct CycInt {
    CycField field;
    std::vector<Int> c;

    explicit CycInt(CycField f) : field(f), c(cyc_degree(f)) {}
    bool operator==(const CycInt&) const = default;
};

CycInt zeta_pow(CycField f, long k);
CycInt add(const CycInt& a, const CycInt& b);
CycInt sub(const CycInt& a, const CycInt& b);
CycInt mul(const CycInt& a, const CycInt& b);
CycInt mul(const CycInt& a, const Int& s);
CycInt conj(const CycInt& a);  // zeta -> zeta^{-1}
Int trace_F(const CycInt& a);  // Tr_{F/Q}

/// Scaled cyclotomic number num/den with den > 0 and gcd content 1.
struct CycNum {
    CycInt num;
    Int den = 1;

    explicit CycNum(CycField f) : num(f) {}
    CycNum(CycInt n, Int d);
    CycField field() const { return num.field; }
    bool is_zero() const;
    bool operator==(const CycNum&) const = default;
};

CycNum add(const CycNum& a, const CycNum& b);
CycNum sub(const CycNum& a, const CycNum& b);
CycNum mul(const CycNum& a, const CycNum& b);
CycNum mul(const CycNum& a, const Rat& s);
CycNum conj(const CycNum& a);
CycNum inverse(const CycNum& a);
Rat trace_F(const CycNum& a);

/// Exact trace form Tr_{F/Q}(x * conj(y)).
Rat trace_form(const CycNum& x, const CycNum& y);

/// Element of the real subfield K = Q(zeta + zeta^{-1}) in the power basis
/// {1, g, g^2} (g = zeta + 1/zeta; degree 2 uses the first two coordinates).
/// Ordered by Tr_{K/Q}, ties broken lexicographically on coordinates.
struct KElem {
    CycField field;
    std::array<Rat, 3> k{};

    Rat trace_K() const;
    bool operator==(const KElem&) const = default;
    bool operator<(const KElem& o) const;
    std::string str() const;
};

/// v.w := v conj(w) + conj(v) w, an element of K.
KElem k_scalar_product(const CycNum& v, const CycNum& w);
/// x conj(x) as an element of K (the theta exponent of x).
KElem k_exponent(const CycNum& x);

/// Truncated theta expansion: exponents e = x conj(x) with coefficient map,
/// complete for all exponents with Tr_K(x.x) = 2 Tr_K(e) <= bound.
struct KSeries {
    CycField field;
    Rat bound;
    std::map<KElem, Int> coeff;

    bool operator==(const KSeries&) const = default;
};

KSeries series_add(const KSeries& a, const KSeries& b);
KSeries series_mul(const KSeries& a, const KSeries& b);
KSeries series_one(CycField f, const Rat& bound);
KSeries series_pow(const KSeries& a, std::size_t e);

/// The cyclotomic lattice model: Lambda = ((1-z8)/2) Z_F resp.
/// (1/3)(1-z9)(1-1/z9) Z_F with the printed f / f* bases, checked on
/// construction against the matching root-lattice data (D_4 / E_6).
struct CycLatticeModel {
    CycField field;
    RootLatticeSpec spec;
    AmbientBasis ab;
    std::vector<CycNum> f;      // Z-basis of Lambda
    std::vector<CycNum> fstar;  // Z-basis of Lambda^*
};

const CycLatticeModel& cyclotomic_lattice(CycField f);

/// Z-basis (rows, in Z_K power-basis coordinates) of an ideal of Z_K, HNF.
struct IdealBasis {
    CycField field;
    IntMatrix basis;
    std::string str() const;
    bool operator==(const IdealBasis&) const = default;
};

/// Principal ideal gen * Z_K.
IdealBasis principal_ideal(const KElem& gen);

/// Level { x in Z_K : Tr(x Z_K (v.v)/2) in Z for all v in Gamma^* }, computed
/// from a Z-generating set of Gamma^* given as m-block cyclotomic vectors.
IdealBasis level_ideal_of(CycField f, const std::vector<std::vector<CycNum>>& dual_gens);

/// Level of the field's Lambda itself; asserted equal to the closed form
/// (z+1/z)(1-z)(1-1/z) Z_K for zeta_8 and (1-z)(1-1/z) Z_K for zeta_9.
IdealBasis level_ideal(CycField f);

/// Coset theta: sum over x in x_a + Lambda of q^(x conj x), truncated at
/// Tr_K(x.x) <= trace_bound. Coset reps: zeta_8 a in F2+uF2 with x_1 = f*_1,
/// x_{1+u} = f*_2, x_u = f*_1 + f*_2; zeta_9 a in Z/3 with x_1 = f*_1,
/// x_2 = -f*_1.
KSeries theta_coset(CycField f, Elem a, const Rat& trace_bound, bool parallel = true);

/// Theta of Gamma_C by direct coset enumeration over the rank-(phi m)
/// trace form (not via the weight-enumerator identity).
KSeries theta_code_lattice(CycField f, const Code& code, const Rat& trace_bound,
                           bool parallel = true);

struct ThetaIdentityReport {
    bool equal = false;
    bool hypothesis_ok = false;  // C subset of its Euclidean dual
    KSeries lhs, rhs;
    std::string first_mismatch;  // empty when equal
};

/// theta_C == W_C(theta_0, theta_1, theta_u) (zeta_8) resp.
/// W_C(theta_0, theta_1) (zeta_9), coefficient by coefficient.
ThetaIdentityReport verify_theta_identity(CycField f, const Code& code, const Rat& trace_bound,
                                          bool parallel = true);

}  // namespace latcode
