#include "latcode/rootlattices.hpp"

#include <stdexcept>

namespace latcode {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error(msg);
}

// E6: f_i = sum_k e_k M[k][i] with the column convention of the source
// matrices. Entry (6,2) is 1: the delta_ij assertion forces f_2 = e_3 + e_6,
// and with it every printed Gram identity holds exactly.
constexpr int kE6F[6][6] = {
    {0, 0, 1, 0, 0, 0},
    {1, 0, 0, 0, 1, 1},
    {1, 1, 0, 0, 1, 1},
    {0, 0, 0, 1, 1, 0},
    {0, 0, 0, 0, 1, 0},
    {0, 1, 0, 0, 0, 1},
};
constexpr int kE6Nstar[6][6] = {
    {4, 1, 1, 2, -1, -1},
    {1, 4, 1, 2, 2, -1},
    {1, 1, 4, 2, 2, 2},
    {2, 2, 2, 4, 1, 1},
    {-1, 2, 2, 1, 4, 1},
    {-1, -1, 2, 1, 1, 4},
};
constexpr int kE7F[7][7] = {
    {1, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0},
    {1, 1, 1, 0, 0, 0, 0},
    {1, 1, 1, 1, 0, 0, 0},
    {1, 1, 1, 1, 1, 0, -1},
    {1, 1, 1, 1, 1, 1, -2},
    {0, 0, 0, 0, 0, 0, 1},
};
constexpr int kE7Nstar[7][7] = {
    {3, 1, 1, 1, 1, 1, 3},
    {1, 3, 1, 1, 1, 1, 3},
    {1, 1, 3, 1, 1, 1, 3},
    {1, 1, 1, 3, 1, 1, 3},
    {1, 1, 1, 1, 3, 1, 3},
    {1, 1, 1, 1, 1, 3, 3},
    {3, 3, 3, 3, 3, 3, 7},
};

IntMatrix f_in_e_coords(const RootLatticeSpec& spec) {
    const int n = spec.n;
    IntMatrix F(n, n);
    switch (spec.family) {
        case Family::A:
            // f_i = e_i + ... + e_n
            for (int i = 0; i < n; ++i)
                for (int l = i; l < n; ++l) F.at(i, l) = 1;
            break;
        case Family::D:
            if (n % 2 == 1) {
                for (int i = 1; i <= n - 3; ++i) {
                    F.at(i - 1, i - 1) = 1;
                    F.at(i - 1, n - 2) += 1;
                    F.at(i - 1, n - 1) += 1;
                    for (int l = i + 1; l <= n - 2; ++l) F.at(i - 1, l - 1) += 2;
                }
                F.at(n - 3, n - 3) = 1;
                F.at(n - 3, n - 2) = 1;
                F.at(n - 3, n - 1) = 1;
                F.at(n - 2, n - 1) = 1;
                F.at(n - 1, n - 1) = 1;
                for (int l = 1; l <= n - 2; ++l) F.at(n - 1, l - 1) = 1;
            } else {
                for (int i = 0; i < n - 1; ++i) F.at(i, i) = 1;
                F.at(n - 1, n - 1) = 1;
                for (int l = 1; l <= n - 2; ++l) F.at(n - 1, l - 1) = 1;
            }
            break;
        case Family::E:
            if (n == 6) {
                for (int i = 0; i < 6; ++i)
                    for (int k = 0; k < 6; ++k) F.at(i, k) = kE6F[k][i];
            } else if (n == 7) {
                for (int i = 0; i < 7; ++i)
                    for (int k = 0; k < 7; ++k) F.at(i, k) = kE7F[k][i];
            } else {
                F = IntMatrix::identity(8);  // E8: Lambda = Lambda^*, f = e
            }
            break;
    }
    return F;
}

RatMatrix fstar_in_f_coords(const RootLatticeSpec& spec, const IntMatrix& gram_f) {
    const int n = spec.n;
    IntMatrix num(n, n);
    Int den = 1;
    switch (spec.family) {
        case Family::A:
            // f*_i = f_i - 1/(n+1) sum_l f_l
            den = n + 1;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) num.at(i, j) = (i == j ? n + 1 : 0) - 1;
            break;
        case Family::D:
            den = 4;
            if (n % 2 == 1) {
                // f*_i = 1/4 sum_{l=0}^{n-1} (-1)^l (n-2l) f_{i+l}, indices cyclic
                for (int i = 1; i <= n; ++i)
                    for (int l = 0; l < n; ++l) {
                        int j = i + l;
                        if (j > n) j -= n;
                        num.at(i - 1, j - 1) += (l % 2 ? -1 : 1) * (n - 2 * l);
                    }
            } else {
                for (int i = 0; i < n; ++i)
                    for (int l = 0; l < n; ++l) num.at(i, l) = n - 2 * std::abs(i - l);
            }
            break;
        case Family::E:
            if (n == 6) {
                den = 3;
                for (int i = 0; i < 6; ++i)
                    for (int j = 0; j < 6; ++j) num.at(i, j) = kE6Nstar[i][j];
            } else if (n == 7) {
                den = 2;
                for (int i = 0; i < 7; ++i)
                    for (int j = 0; j < 7; ++j) num.at(i, j) = kE7Nstar[i][j];
            } else {
                // E8 is unimodular: f* = inverse Gram, integral
                return inverse(to_rat(gram_f));
            }
            break;
    }
    return RatMatrix(std::move(num), den);
}

}  // namespace

bool RootLatticeSpec::valid() const {
    switch (family) {
        case Family::A: return n >= 1;
        case Family::D:
            if (n < 4) return false;
            if (n % 2 == 0)
                return d_even_ring == RingKind::F2U || d_even_ring == RingKind::F4 ||
                       d_even_ring == RingKind::F2xF2;
            return true;
        case Family::E: return n == 6 || n == 7 || n == 8;
    }
    return false;
}

std::string RootLatticeSpec::str() const {
    std::string s = family == Family::A ? "A" : family == Family::D ? "D" : "E";
    s += std::to_string(n);
    if (family == Family::D && n % 2 == 0) {
        s += "/";
        s += RingSpec{d_even_ring, 0}.name();
    }
    return s;
}

std::optional<RingSpec> ring_of(const RootLatticeSpec& spec) {
    require(spec.valid(), "invalid root lattice spec");
    switch (spec.family) {
        case Family::A: return RingSpec::zmod(spec.n + 1);
        case Family::D:
            if (spec.n % 2 == 1) return RingSpec::zmod(4);
            return RingSpec{spec.d_even_ring, 0};
        case Family::E:
            if (spec.n == 6) return RingSpec::zmod(3);
            if (spec.n == 7) return RingSpec::zmod(2);
            return std::nullopt;  // E8: Lambda = Lambda^*
    }
    return std::nullopt;
}

DiscriminantGroup discriminant_group(const RootLatticeSpec& spec) {
    require(spec.valid(), "invalid root lattice spec");
    DiscriminantGroup d;
    d.ring = ring_of(spec);
    switch (spec.family) {
        case Family::A: d.order = spec.n + 1; break;
        case Family::D: d.order = 4; break;
        case Family::E: d.order = 9 - spec.n; break;
    }
    return d;
}

IntMatrix gram_e(Family family, int n) {
    RootLatticeSpec spec{family, n, RingKind::F2U};
    require(spec.valid(), "gram_e: invalid family/rank");
    IntMatrix g(n, n);
    for (int i = 0; i < n; ++i) g.at(i, i) = 2;
    auto set = [&](int i, int j) {
        g.at(i - 1, j - 1) = -1;
        g.at(j - 1, i - 1) = -1;
    };
    for (int i = 1; i < n; ++i) {
        bool skip = (family != Family::A) && (i == n - 1);  // {n-1, n} not joined
        if (!skip) set(i, i + 1);
    }
    if (family == Family::D && n >= 4) set(n - 2, n);
    if (family == Family::E) set(n - 3, n);
    return g;
}

AmbientBasis ambient_basis(const RootLatticeSpec& spec) {
    require(spec.valid(), "ambient_basis: invalid spec");
    AmbientBasis b;
    b.spec = spec;
    b.gram_e = gram_e(spec.family, spec.n);
    b.F = f_in_e_coords(spec);
    b.gram_f = mul(mul(b.F, b.gram_e), transpose(b.F));
    b.Fstar = fstar_in_f_coords(spec, b.gram_f);
    b.gram_fstar = mul(mul(b.Fstar, to_rat(b.gram_f)), transpose(b.Fstar));

    // construction-time invariants
    check(mul(b.Fstar, to_rat(b.gram_f)) == RatMatrix::identity(spec.n),
          "ambient_basis: b(f_i, f*_j) != delta_ij for " + spec.str());
    check(det(b.gram_e) == discriminant_group(spec).order,
          "ambient_basis: det(gram_e) != discriminant order for " + spec.str());
    return b;
}

Word rho(const RootLatticeSpec& spec, std::span<const Int> fstar_coords, std::size_t m) {
    require(spec.valid(), "rho: invalid spec");
    auto r = ring_of(spec);
    require(r.has_value(), "rho: E8 has a trivial discriminant group");
    const std::size_t n = static_cast<std::size_t>(spec.n);
    require(fstar_coords.size() == n * m, "rho: coordinate length mismatch");

    Word out(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::span<const Int> x = fstar_coords.subspan(i * n, n);
        if (spec.family == Family::D && spec.n % 2 == 0) {
            Int s_odd = 0, s_even = 0;  // 1-based odd/even positions
            for (std::size_t j = 0; j < n; ++j) (j % 2 == 0 ? s_odd : s_even) += x[j];
            unsigned a = mpz_tstbit(s_odd.get_mpz_t(), 0);
            unsigned c = mpz_tstbit(s_even.get_mpz_t(), 0);
            RingSpec ring = *r;
            switch (spec.d_even_ring) {
                case RingKind::F2U: {
                    // a*1 + c*(1+u)
                    Elem e = 0;
                    if (a) e = add(ring, e, 1);
                    if (c) e = add(ring, e, 3);
                    out[i] = e;
                    break;
                }
                case RingKind::F4: {
                    // a*w + c*w^2
                    Elem e = 0;
                    if (a) e = add(ring, e, 2);
                    if (c) e = add(ring, e, 3);
                    out[i] = e;
                    break;
                }
                default: out[i] = a | (c << 1); break;  // (a, c)
            }
        } else {
            Int s = 0;
            if (spec.family == Family::E && spec.n == 6) {
                for (std::size_t j = 0; j < 3; ++j) s += x[j];
                for (std::size_t j = 3; j < 6; ++j) s -= x[j];
            } else {
                for (std::size_t j = 0; j < n; ++j) s += x[j];
            }
            const unsigned k = r->modulus;
            Int v = s % k;
            if (v < 0) v += k;
            out[i] = static_cast<Elem>(v.get_ui());
        }
    }
    return out;
}

std::vector<Int> lift(const RootLatticeSpec& spec, Elem c) {
    require(spec.valid(), "lift: invalid spec");
    auto r = ring_of(spec);
    require(r.has_value(), "lift: E8 has a trivial discriminant group");
    require(elem_valid(*r, c), "lift: invalid element");
    std::vector<Int> v(spec.n, 0);
    if (spec.family == Family::D && spec.n % 2 == 0) {
        // two-bit class (a, c) with rho(f*_1) the first unit, rho(f*_2) the second
        unsigned a = 0, cc = 0;
        switch (spec.d_even_ring) {
            case RingKind::F2U: {
                // c = a*1 + cc*(1+u): 0,1,1+u,u -> (0,0),(1,0),(0,1),(1,1)
                static constexpr unsigned dec[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
                a = dec[c][0];
                cc = dec[c][1];
                break;
            }
            case RingKind::F4: {
                // c = a*w + cc*w^2: 0,1,w,w2 -> (0,0),(1,1),(1,0),(0,1)
                static constexpr unsigned dec[4][2] = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};
                a = dec[c][0];
                cc = dec[c][1];
                break;
            }
            default:
                a = c & 1u;
                cc = c >> 1;
                break;
        }
        v[0] = a;
        v[1] = cc;
    } else {
        v[0] = c;
    }
    return v;
}

}  // namespace latcode
