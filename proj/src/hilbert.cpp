#include "latcode/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "latcode/theta.hpp"

namespace latcode {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error(msg);
}

}  // namespace

std::size_t cyc_degree(CycField f) { return f == CycField::Zeta8 ? 4 : 6; }
std::size_t real_degree(CycField f) { return f == CycField::Zeta8 ? 2 : 3; }

std::optional<CycField> parse_field(const std::string& s) {
    if (s == "zeta8") return CycField::Zeta8;
    if (s == "zeta9") return CycField::Zeta9;
    return std::nullopt;
}

std::string field_name(CycField f) { return f == CycField::Zeta8 ? "zeta8" : "zeta9"; }

CycInt zeta_pow(CycField f, long k) {
    const long m = f == CycField::Zeta8 ? 8 : 9;
    k %= m;
    if (k < 0) k += m;
    CycInt out(f);
    if (f == CycField::Zeta8) {
        if (k < 4)
            out.c[k] = 1;
        else
            out.c[k - 4] = -1;  // zeta^4 = -1
    } else {
        if (k < 6) {
            out.c[k] = 1;
        } else {  // zeta^6 = -1 - zeta^3, so zeta^(6+t) = -zeta^t - zeta^(3+t)
            const long t = k - 6;
            out.c[t] -= 1;
            out.c[t + 3] -= 1;
        }
    }
    return out;
}

CycInt add(const CycInt& a, const CycInt& b) {
    require(a.field == b.field, "cyclotomic field mismatch");
    CycInt out(a.field);
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
}

CycInt sub(const CycInt& a, const CycInt& b) {
    require(a.field == b.field, "cyclotomic field mismatch");
    CycInt out(a.field);
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.c[i] - b.c[i];
    return out;
}

CycInt mul(const CycInt& a, const CycInt& b) {
    require(a.field == b.field, "cyclotomic field mismatch");
    const std::size_t n = a.c.size();
    std::vector<Int> full(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (b.c[j] != 0) full[i + j] += a.c[i] * b.c[j];
    }
    CycInt out(a.field);
    for (std::size_t i = 0; i < n; ++i) out.c[i] = full[i];
    if (a.field == CycField::Zeta8) {
        for (std::size_t i = n; i < full.size(); ++i) out.c[i - 4] -= full[i];
    } else {
        for (std::size_t i = full.size(); i-- > n;) {
            // zeta^i = -zeta^(i-6) - zeta^(i-3); i-3 may itself need reduction
            if (full[i] == 0) continue;
            if (i - 3 < n)
                out.c[i - 3] -= full[i];
            else
                full[i - 3] -= full[i];
            out.c[i - 6] -= full[i];
        }
    }
    return out;
}

CycInt mul(const CycInt& a, const Int& s) {
    CycInt out(a.field);
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i] * s;
    return out;
}

CycInt conj(const CycInt& a) {
    CycInt out(a.field);
    const long m = a.field == CycField::Zeta8 ? 8 : 9;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        CycInt z = zeta_pow(a.field, -static_cast<long>(i) % m);
        for (std::size_t j = 0; j < out.c.size(); ++j) out.c[j] += a.c[i] * z.c[j];
    }
    return out;
}

Int trace_F(const CycInt& a) {
    // Tr(zeta_8^k) = 4,0,0,0; Tr(zeta_9^k) = 6 (k=0), -3 (k=3), 0 otherwise
    if (a.field == CycField::Zeta8) return 4 * a.c[0];
    return 6 * a.c[0] - 3 * a.c[3];
}

CycNum::CycNum(CycInt n, Int d) : num(std::move(n)), den(std::move(d)) {
    require(den != 0, "CycNum: zero denominator");
    if (den < 0) {
        den = -den;
        for (auto& x : num.c) x = -x;
    }
    Int g = den;
    for (const auto& x : num.c) {
        if (g == 1) break;
        Int ax = abs(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ax.get_mpz_t());
    }
    if (g > 1) {
        den /= g;
        for (auto& x : num.c) x /= g;
    }
}

bool CycNum::is_zero() const {
    return std::all_of(num.c.begin(), num.c.end(), [](const Int& x) { return x == 0; });
}

CycNum add(const CycNum& a, const CycNum& b) {
    return CycNum(add(mul(a.num, b.den), mul(b.num, a.den)), a.den * b.den);
}
CycNum sub(const CycNum& a, const CycNum& b) {
    return CycNum(sub(mul(a.num, b.den), mul(b.num, a.den)), a.den * b.den);
}
CycNum mul(const CycNum& a, const CycNum& b) { return CycNum(mul(a.num, b.num), a.den * b.den); }
CycNum mul(const CycNum& a, const Rat& s) {
    return CycNum(mul(a.num, Int(s.get_num())), a.den * s.get_den());
}
CycNum conj(const CycNum& a) { return CycNum(conj(a.num), a.den); }
Rat trace_F(const CycNum& a) { return make_rat(trace_F(a.num), a.den); }

CycNum inverse(const CycNum& a) {
    require(!a.is_zero(), "CycNum inverse of zero");
    const std::size_t n = a.num.c.size();
    // columns of the multiplication-by-a matrix over the power basis
    RatMatrix m = [&] {
        std::vector<Rat> entries(n * n);
        for (std::size_t j = 0; j < n; ++j) {
            CycInt basis(a.field());
            basis.c[j] = 1;
            CycInt col = mul(a.num, basis);
            for (std::size_t i = 0; i < n; ++i) entries[i * n + j] = Rat(col.c[i]);
        }
        return RatMatrix::from_rat(n, n, entries);
    }();
    RatMatrix mi = inverse(m);
    // x = a.den * (first column of m^{-1})
    CycInt num(a.field());
    Int den = mi.den;
    for (std::size_t i = 0; i < n; ++i) num.c[i] = mi.num.at(i, 0) * a.den;
    return CycNum(std::move(num), den);
}

Rat trace_form(const CycNum& x, const CycNum& y) {
    require(x.field() == y.field(), "trace_form: field mismatch");
    return trace_F(mul(x, conj(y)));
}

Rat KElem::trace_K() const {
    // zeta8: K = Q(sqrt2), Tr(1)=2, Tr(sqrt2)=0
    // zeta9: K = Q(g), g^3 = 3g - 1, Tr(1)=3, Tr(g)=0, Tr(g^2)=6
    if (field == CycField::Zeta8) return 2 * k[0];
    return 3 * k[0] + 6 * k[2];
}

bool KElem::operator<(const KElem& o) const {
    Rat ta = trace_K(), tb = o.trace_K();
    if (ta != tb) return ta < tb;
    for (std::size_t i = 0; i < 3; ++i)
        if (k[i] != o.k[i]) return k[i] < o.k[i];
    return false;
}

std::string KElem::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < real_degree(field); ++i) {
        if (i) os << ",";
        os << k[i].get_str();
    }
    os << ")";
    return os.str();
}

namespace {

// coordinates of a conjugation-fixed element in the K power basis
KElem to_K(const CycNum& x) {
    KElem e{x.field(), {}};
    const Int& d = x.den;
    const auto& c = x.num.c;
    if (x.field() == CycField::Zeta8) {
        // a + b*sqrt2 has F-coords (a, b, 0, -b)
        check(c[2] == 0 && c[3] == -c[1], "to_K: element not in the real subfield");
        e.k[0] = make_rat(c[0], d);
        e.k[1] = make_rat(c[1], d);
    } else {
        // a + b*g + c2*g^2 has F-coords (a + 2 c2, b - c2, c2 - b, 0, -c2, -b)
        Int b = -c[5], c2 = -c[4], a = c[0] - 2 * c2;
        check(c[1] == b - c2 && c[2] == c2 - b && c[3] == 0,
              "to_K: element not in the real subfield");
        e.k[0] = make_rat(a, d);
        e.k[1] = make_rat(b, d);
        e.k[2] = make_rat(c2, d);
    }
    return e;
}

// K element back into F
CycNum from_K(const KElem& e) {
    CycField f = e.field;
    CycNum one(f);
    one.num.c[0] = 1;
    if (f == CycField::Zeta8) {
        CycNum g = add(CycNum(zeta_pow(f, 1), 1), CycNum(zeta_pow(f, -1), 1));
        return add(mul(one, e.k[0]), mul(g, e.k[1]));
    }
    CycNum g = add(CycNum(zeta_pow(f, 1), 1), CycNum(zeta_pow(f, -1), 1));
    CycNum g2 = mul(g, g);
    return add(add(mul(one, e.k[0]), mul(g, e.k[1])), mul(g2, e.k[2]));
}

}  // namespace

KElem k_scalar_product(const CycNum& v, const CycNum& w) {
    require(v.field() == w.field(), "k_scalar_product: field mismatch");
    return to_K(add(mul(v, conj(w)), mul(conj(v), w)));
}

KElem k_exponent(const CycNum& x) { return to_K(mul(x, conj(x))); }

KSeries series_one(CycField f, const Rat& bound) {
    KSeries s{f, bound, {}};
    s.coeff[KElem{f, {}}] = 1;
    return s;
}

KSeries series_add(const KSeries& a, const KSeries& b) {
    require(a.field == b.field && a.bound == b.bound, "series_add: field/bound mismatch");
    KSeries out = a;
    for (const auto& [e, c] : b.coeff) {
        out.coeff[e] += c;
        if (out.coeff[e] == 0) out.coeff.erase(e);
    }
    return out;
}

KSeries series_mul(const KSeries& a, const KSeries& b) {
    require(a.field == b.field && a.bound == b.bound, "series_mul: field/bound mismatch");
    KSeries out{a.field, a.bound, {}};
    for (const auto& [e1, c1] : a.coeff)
        for (const auto& [e2, c2] : b.coeff) {
            KElem e{a.field, {e1.k[0] + e2.k[0], e1.k[1] + e2.k[1], e1.k[2] + e2.k[2]}};
            if (2 * e.trace_K() > a.bound) continue;  // exponents beyond the bound drop
            out.coeff[e] += c1 * c2;
        }
    for (auto it = out.coeff.begin(); it != out.coeff.end();)
        it = it->second == 0 ? out.coeff.erase(it) : std::next(it);
    return out;
}

KSeries series_pow(const KSeries& a, std::size_t e) {
    KSeries out = series_one(a.field, a.bound);
    for (std::size_t i = 0; i < e; ++i) out = series_mul(out, a);
    return out;
}

namespace {

CycLatticeModel build_model(CycField f) {
    CycLatticeModel m{f, {}, {}, {}, {}};
    if (f == CycField::Zeta8) {
        m.spec = RootLatticeSpec::D(4, RingKind::F2U);
        m.ab = ambient_basis(m.spec);
        CycNum half_one_minus_z(sub(zeta_pow(f, 0), zeta_pow(f, 1)), 2);  // (1 - z)/2
        // e-basis as printed
        std::vector<CycNum> e;
        e.push_back(half_one_minus_z);
        e.push_back(mul(half_one_minus_z, CycNum(zeta_pow(f, 1), 1)));
        e.push_back(mul(half_one_minus_z, CycNum(zeta_pow(f, 2), 1)));
        CycInt t = sub(sub(zeta_pow(f, 3), zeta_pow(f, 0)), zeta_pow(f, 1));
        e.push_back(mul(half_one_minus_z, CycNum(t, 1)));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                check(trace_form(e[i], e[j]) == Rat(m.ab.gram_e.at(i, j)),
                      "zeta8: Tr(e_i conj e_j) != printed D4 Gram");
        // f_i = ((1-z)/2) z^{i-1}, f*_i = z^{i-1} / (2 (1 - z^{-1}))
        CycNum fstar_den = mul(sub(CycNum(zeta_pow(f, 0), 1), CycNum(zeta_pow(f, -1), 1)),
                               Rat(2));
        CycNum fstar1 = inverse(fstar_den);
        for (int i = 0; i < 4; ++i) {
            m.f.push_back(mul(half_one_minus_z, CycNum(zeta_pow(f, i), 1)));
            m.fstar.push_back(mul(fstar1, CycNum(zeta_pow(f, i), 1)));
        }
    } else {
        m.spec = RootLatticeSpec::E(6);
        m.ab = ambient_basis(m.spec);
        // f_i = (1/3)(1-z)(1-z^2) z^{i-1}
        CycNum c(mul(sub(zeta_pow(f, 0), zeta_pow(f, 1)), sub(zeta_pow(f, 0), zeta_pow(f, 2))),
                 3);
        for (int i = 0; i < 6; ++i) m.f.push_back(mul(c, CycNum(zeta_pow(f, i), 1)));
        // f*_i = (1/3)(1-z^4) z^{i-3} (i=1..3); (1/3)(1-z^4)(z^{i-3} + z^{i-6}) (i=4..6)
        CycNum d(sub(zeta_pow(f, 0), zeta_pow(f, 4)), 3);
        for (int i = 1; i <= 6; ++i) {
            CycInt zpart =
                i <= 3 ? zeta_pow(f, i - 3) : add(zeta_pow(f, i - 3), zeta_pow(f, i - 6));
            m.fstar.push_back(mul(d, CycNum(zpart, 1)));
        }
    }
    const std::size_t n = m.f.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            check(trace_form(m.f[i], m.f[j]) == Rat(m.ab.gram_f.at(i, j)),
                  "cyclotomic model: f-basis trace Gram mismatch");
            check(trace_form(m.fstar[i], m.fstar[j]) == m.ab.gram_fstar.at(i, j),
                  "cyclotomic model: f*-basis trace Gram mismatch");
            check(trace_form(m.f[i], m.fstar[j]) == Rat(i == j ? 1 : 0),
                  "cyclotomic model: b(f_i, f*_j) != delta");
        }
    return m;
}

}  // namespace

const CycLatticeModel& cyclotomic_lattice(CycField f) {
    static const CycLatticeModel z8 = build_model(CycField::Zeta8);
    static const CycLatticeModel z9 = build_model(CycField::Zeta9);
    return f == CycField::Zeta8 ? z8 : z9;
}

std::string IdealBasis::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < basis.rows; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < basis.cols; ++j) {
            if (j) os << ' ';
            os << basis.at(i, j).get_str();
        }
    }
    return os.str();
}

namespace {

// Z-basis of Z_K in F: power basis of g = zeta + 1/zeta
std::vector<CycNum> zk_basis(CycField f) {
    CycNum g = add(CycNum(zeta_pow(f, 1), 1), CycNum(zeta_pow(f, -1), 1));
    std::vector<CycNum> b;
    CycNum one(f);
    one.num.c[0] = 1;
    b.push_back(one);
    b.push_back(g);
    if (f == CycField::Zeta9) b.push_back(mul(g, g));
    return b;
}

Rat trace_K_of(const CycNum& x) { return to_K(x).trace_K(); }

}  // namespace

IdealBasis principal_ideal(const KElem& gen) {
    CycField f = gen.field;
    const std::size_t r = real_degree(f);
    auto basis = zk_basis(f);
    CycNum g = from_K(gen);
    std::vector<Rat> rows;
    for (std::size_t i = 0; i < r; ++i) {
        KElem e = to_K(mul(g, basis[i]));
        for (std::size_t j = 0; j < r; ++j) rows.push_back(e.k[j]);
    }
    RatMatrix m = RatMatrix::from_rat(r, r, rows);
    check(m.den == 1, "principal_ideal: generator not integral");
    return {f, hnf(m.num)};
}

IdealBasis level_ideal_of(CycField f, const std::vector<std::vector<CycNum>>& dual_gens) {
    const std::size_t r = real_degree(f);
    auto basis = zk_basis(f);

    // constraint elements mu: v_i . v_i / 2 and v_i . v_j (i < j), in K
    std::vector<CycNum> mus;
    auto block_dot_conj = [&](const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
        CycNum s(f);
        for (std::size_t t = 0; t < a.size(); ++t) s = add(s, mul(a[t], conj(b[t])));
        return s;
    };
    for (std::size_t i = 0; i < dual_gens.size(); ++i) {
        mus.push_back(block_dot_conj(dual_gens[i], dual_gens[i]));  // v.v/2 = v conj(v)
        for (std::size_t j = i + 1; j < dual_gens.size(); ++j)
            mus.push_back(add(block_dot_conj(dual_gens[i], dual_gens[j]),
                              block_dot_conj(dual_gens[j], dual_gens[i])));
    }

    // x = sum x_k basis_k in Z_K with Tr_K(x basis_l mu) in Z for all l, mu
    std::vector<Rat> entries;
    std::size_t nconstraints = 0;
    for (const auto& mu : mus)
        for (std::size_t l = 0; l < r; ++l) {
            for (std::size_t k = 0; k < r; ++k)
                entries.push_back(trace_K_of(mul(mul(basis[k], basis[l]), mu)));
            ++nconstraints;
        }
    RatMatrix constraints = RatMatrix::from_rat(nconstraints, r, entries);

    // { x in Z^r : N x = 0 mod d } as the projection of the kernel of [N | dI]
    IntMatrix aug(nconstraints, r + nconstraints);
    for (std::size_t i = 0; i < nconstraints; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug.at(i, j) = constraints.num.at(i, j);
        aug.at(i, r + i) = constraints.den;
    }
    IntMatrix ker = right_kernel(aug);
    IntMatrix proj(ker.rows, r);
    for (std::size_t i = 0; i < ker.rows; ++i)
        for (std::size_t j = 0; j < r; ++j) proj.at(i, j) = ker.at(i, j);
    return {f, hnf(std::move(proj))};
}

IdealBasis level_ideal(CycField f) {
    const auto& model = cyclotomic_lattice(f);
    std::vector<std::vector<CycNum>> gens;
    for (const auto& v : model.fstar) gens.push_back({v});
    IdealBasis lvl = level_ideal_of(f, gens);

    CycNum one_minus_z = CycNum(sub(zeta_pow(f, 0), zeta_pow(f, 1)), 1);
    CycNum one_minus_zi = CycNum(sub(zeta_pow(f, 0), zeta_pow(f, -1)), 1);
    CycNum gen = mul(one_minus_z, one_minus_zi);
    if (f == CycField::Zeta8) {
        CycNum g = add(CycNum(zeta_pow(f, 1), 1), CycNum(zeta_pow(f, -1), 1));
        gen = mul(g, gen);
    }
    check(lvl == principal_ideal(to_K(gen)), "level_ideal: mismatch with the closed form");
    return lvl;
}

namespace {

std::vector<Rat> coset_offset(CycField f, Elem a, const CycLatticeModel& m) {
    // offsets are f-basis coordinates of the coset representative
    const std::size_t n = m.f.size();
    std::vector<Rat> off(n, Rat(0));
    auto add_fstar_row = [&](std::size_t i, int sign) {
        for (std::size_t j = 0; j < n; ++j)
            off[j] += sign * m.ab.Fstar.at(i, j);
    };
    if (f == CycField::Zeta8) {
        require(a < 4, "theta_coset: invalid F2+uF2 element");
        switch (a) {
            case 0: break;
            case 1: add_fstar_row(0, +1); break;            // x_1 = f*_1
            case 3: add_fstar_row(1, +1); break;            // x_{1+u} = f*_2
            default: add_fstar_row(0, +1); add_fstar_row(1, +1); break;  // x_u
        }
    } else {
        require(a < 3, "theta_coset: invalid Z/3 element");
        if (a == 1) add_fstar_row(0, +1);
        if (a == 2) add_fstar_row(0, -1);  // x_2 = -f*_1
    }
    return off;
}

}  // namespace

namespace {

// scale a family of CycNums to integer numerators over one denominator
struct ScaledVectors {
    std::vector<CycInt> num;
    Int den = 1;
};

ScaledVectors common_scale(const std::vector<CycNum>& v) {
    ScaledVectors s;
    for (const auto& x : v) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), x.den.get_mpz_t());
    for (const auto& x : v) s.num.push_back(mul(x.num, Int(s.den / x.den)));
    return s;
}

}  // namespace

KSeries theta_coset(CycField f, Elem a, const Rat& trace_bound, bool parallel) {
    const auto& m = cyclotomic_lattice(f);
    const std::size_t n = m.f.size();
    std::vector<Rat> off = coset_offset(f, a, m);

    // x = x_a + sum k_j f_j over one integer denominator
    std::vector<CycNum> gens = m.f;
    CycNum xa(f);
    for (std::size_t j = 0; j < n; ++j)
        if (off[j] != 0) xa = add(xa, mul(m.f[j], off[j]));
    gens.push_back(xa);
    ScaledVectors sv = common_scale(gens);
    const Int den2 = sv.den * sv.den;

    KSeries out{f, trace_bound, {}};
    enumerate_short(
        to_rat(m.ab.gram_f), trace_bound, off,
        [&](std::span<const Int> x, const Rat& nrm) {
            CycInt v = sv.num[n];
            for (std::size_t j = 0; j < n; ++j)
                if (x[j] != 0)
                    for (std::size_t t = 0; t < v.c.size(); ++t) v.c[t] += x[j] * sv.num[j].c[t];
            KElem e = to_K(CycNum(mul(v, conj(v)), den2));
            check(2 * e.trace_K() == nrm, "theta_coset: exponent trace != lattice norm");
            out.coeff[e] += 1;
        },
        parallel);
    return out;
}

KSeries theta_code_lattice(CycField f, const Code& code, const Rat& trace_bound, bool parallel) {
    const auto& m = cyclotomic_lattice(f);
    require(code.ring == *ring_of(m.spec), "theta_code_lattice: wrong code ring for the field");
    const std::size_t n = m.f.size();

    CodeLattice L = build_gamma_c(m.spec, code);
    const std::size_t rank = L.rank();
    const std::size_t blocks = code.length;
    check(L.basis.den == 1, "theta_code_lattice: basis not integral");

    // basis vectors per block as integer cyclotomic numerators over one den
    ScaledVectors fs = common_scale(m.fstar);
    const Int den2 = fs.den * fs.den;
    const std::size_t deg = cyc_degree(f);
    std::vector<CycInt> basis_num(rank * blocks, CycInt(f));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t b = 0; b < blocks; ++b) {
            CycInt v(f);
            for (std::size_t j = 0; j < n; ++j) {
                const Int& cij = L.basis.num.at(i, b * n + j);
                if (cij != 0)
                    for (std::size_t t = 0; t < deg; ++t) v.c[t] += cij * fs.num[j].c[t];
            }
            basis_num[i * blocks + b] = std::move(v);
        }

    // quadratic-form identification between the construction Gram and the
    // cyclotomic trace form, checked once per call on the basis
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i; j < rank; ++j) {
            Int tr = 0;
            for (std::size_t b = 0; b < blocks; ++b)
                tr += trace_F(mul(basis_num[i * blocks + b], conj(basis_num[j * blocks + b])));
            check(make_rat(tr, den2) == L.gram.at(i, j),
                  "theta_code_lattice: trace form differs from the construction Gram");
        }

    KSeries out{f, trace_bound, {}};
    enumerate_short(
        L.gram, trace_bound, {},
        [&](std::span<const Int> x, const Rat& nrm) {
            CycInt acc(f);  // sum over blocks of x_b conj(x_b), over den^2
            for (std::size_t b = 0; b < blocks; ++b) {
                CycInt v(f);
                for (std::size_t i = 0; i < rank; ++i)
                    if (x[i] != 0)
                        for (std::size_t t = 0; t < deg; ++t)
                            v.c[t] += x[i] * basis_num[i * blocks + b].c[t];
                acc = add(acc, mul(v, conj(v)));
            }
            KElem e = to_K(CycNum(std::move(acc), den2));
            check(2 * e.trace_K() == nrm, "theta_code_lattice: exponent trace != lattice norm");
            out.coeff[e] += 1;
        },
        parallel);
    return out;
}

ThetaIdentityReport verify_theta_identity(CycField f, const Code& code, const Rat& trace_bound,
                                          bool parallel) {
    ThetaIdentityReport rep;
    rep.hypothesis_ok = self_duality(code).self_orthogonal_euclidean;
    rep.lhs = theta_code_lattice(f, code, trace_bound, parallel);

    if (f == CycField::Zeta8) {
        KSeries t0 = theta_coset(f, 0, trace_bound, parallel);
        KSeries t1 = theta_coset(f, 1, trace_bound, parallel);
        KSeries tu = theta_coset(f, 2, trace_bound, parallel);
        WeightEnumerator we = weight_enumerator(code, EnumeratorKind::LeeComposition3);
        KSeries rhs{f, trace_bound, {}};
        for (const auto& [nnn, cnt] : we.coeff) {
            KSeries term = series_mul(series_mul(series_pow(t0, nnn[0]), series_pow(t1, nnn[1])),
                                      series_pow(tu, nnn[2]));
            for (auto& [e, c] : term.coeff) rhs.coeff[e] += c * Int(cnt);
        }
        rep.rhs = std::move(rhs);
    } else {
        KSeries t0 = theta_coset(f, 0, trace_bound, parallel);
        KSeries t1 = theta_coset(f, 1, trace_bound, parallel);
        WeightEnumerator we = weight_enumerator(code, EnumeratorKind::Ternary2);
        KSeries rhs{f, trace_bound, {}};
        for (const auto& [ll, cnt] : we.coeff) {
            KSeries term = series_mul(series_pow(t0, ll[0]), series_pow(t1, ll[1]));
            for (auto& [e, c] : term.coeff) rhs.coeff[e] += c * Int(cnt);
        }
        rep.rhs = std::move(rhs);
    }

    rep.equal = rep.lhs.coeff == rep.rhs.coeff;
    if (!rep.equal) {
        // first differing exponent in the K ordering
        auto it = rep.lhs.coeff.begin();
        auto jt = rep.rhs.coeff.begin();
        while (it != rep.lhs.coeff.end() && jt != rep.rhs.coeff.end()) {
            if (it->first == jt->first && it->second == jt->second) {
                ++it;
                ++jt;
                continue;
            }
            break;
        }
        std::ostringstream os;
        if (it != rep.lhs.coeff.end())
            os << "lhs " << it->first.str() << " -> " << it->second.get_str();
        if (jt != rep.rhs.coeff.end())
            os << " vs rhs " << jt->first.str() << " -> " << jt->second.get_str();
        rep.first_mismatch = os.str();
    }
    return rep;
}

}  // namespace latcode
