#include "latcode/construction.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace latcode {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error(msg);
}

RatMatrix block_diag(const RatMatrix& blk, std::size_t m) {
    const std::size_t n = blk.rows();
    IntMatrix num(n * m, n * m);
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) num.at(b * n + i, b * n + j) = blk.num.at(i, j);
    return RatMatrix(std::move(num), blk.den);
}

// canonicalize a rational basis: scale to integers, HNF, normalize back
RatMatrix canonical_basis(const RatMatrix& basis) {
    return RatMatrix(hnf(basis.num), basis.den);
}

RatMatrix gram_of(const RatMatrix& basis, const RatMatrix& ambient_gram) {
    return mul(mul(basis, ambient_gram), transpose(basis));
}

Int hnf_det(const IntMatrix& h) {
    // product of pivots of a full-rank HNF
    Int d = 1;
    std::size_t j = 0;
    for (std::size_t i = 0; i < h.rows; ++i) {
        while (j < h.cols && h.at(i, j) == 0) ++j;
        check(j < h.cols, "hnf_det: rank deficient");
        d *= h.at(i, j);
    }
    return d;
}

std::vector<Int> lift_word(const RootLatticeSpec& spec, const Word& w) {
    std::vector<Int> out;
    out.reserve(w.size() * spec.n);
    for (Elem c : w) {
        auto v = lift(spec, c);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

}  // namespace

CodeLattice lambda_power(const RootLatticeSpec& spec, std::size_t m) {
    require(spec.valid() && m >= 1, "lambda_power: invalid spec or m");
    AmbientBasis ab = ambient_basis(spec);
    CodeLattice L;
    L.spec = spec;
    L.m = m;
    IntMatrix rows(m * spec.n, m * spec.n);
    for (std::size_t b = 0; b < m; ++b)
        for (int i = 0; i < spec.n; ++i)
            for (int j = 0; j < spec.n; ++j)
                rows.at(b * spec.n + i, b * spec.n + j) = ab.gram_f.at(i, j);
    L.basis = RatMatrix(hnf(rows));
    L.gram = gram_of(L.basis, block_diag(ab.gram_fstar, m));
    return L;
}

CodeLattice build_gamma_c(const RootLatticeSpec& spec, const Code& code, std::uint64_t guard) {
    require(spec.valid(), "build_gamma_c: invalid spec");
    auto ring = ring_of(spec);
    require(ring.has_value(), "build_gamma_c: E8 admits only lambda_power");
    require(code.ring == *ring, "build_gamma_c: code ring does not match ring_of(spec)");
    require(code.length >= 1, "build_gamma_c: empty code length");
    const std::size_t m = code.length, n = static_cast<std::size_t>(spec.n);

    AmbientBasis ab = ambient_basis(spec);

    // Additive generators of C: every ring-scalar multiple of every generator
    // (the Z-span of the plain generators can be a proper subgroup over the
    // order-4 rings).
    std::vector<std::vector<Int>> rows;
    for (const auto& g : code.generators) {
        require(g.size() == m, "build_gamma_c: generator length mismatch");
        for (Elem s = 1; s < ring->size(); ++s) {
            Word sg(m);
            for (std::size_t i = 0; i < m; ++i) sg[i] = mul(*ring, s, g[i]);
            rows.push_back(lift_word(spec, sg));
        }
    }
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Int> row(m * n, 0);
            for (std::size_t j = 0; j < n; ++j) row[b * n + j] = ab.gram_f.at(i, j);
            rows.push_back(std::move(row));
        }

    IntMatrix mat(rows.size(), m * n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < m * n; ++j) mat.at(i, j) = rows[i][j];

    CodeLattice L;
    L.spec = spec;
    L.m = m;
    IntMatrix h = hnf(std::move(mat));
    check(h.rows == m * n, "build_gamma_c: basis rank != m*n");
    L.basis = RatMatrix(std::move(h));
    L.gram = gram_of(L.basis, block_diag(ab.gram_fstar, m));

    // rho of every basis row lies in C
    auto words = enumerate_codewords(code, guard);
    for (std::size_t i = 0; i < L.basis.rows(); ++i) {
        check(L.basis.den == 1, "build_gamma_c: basis not integral in f*-coordinates");
        std::vector<Int> row(m * n);
        for (std::size_t j = 0; j < m * n; ++j) row[j] = L.basis.num.at(i, j);
        Word r = rho(spec, row, m);
        check(std::binary_search(words.begin(), words.end(), r),
              "build_gamma_c: basis row reduces outside C");
    }

    // [Gamma_C : Lambda^m] = |C|
    Int disc = det(ab.gram_e);
    Int lam_det;
    mpz_pow_ui(lam_det.get_mpz_t(), disc.get_mpz_t(), m);
    Int gamma_det = hnf_det(L.basis.num);
    check(gamma_det != 0 && lam_det % gamma_det == 0 &&
              lam_det / gamma_det == Int(static_cast<unsigned long>(words.size())),
          "build_gamma_c: index [Gamma_C : Lambda^m] != |C|");
    return L;
}

bool is_integral(const CodeLattice& L) { return L.gram.is_integral(); }

bool is_even(const CodeLattice& L) {
    if (!is_integral(L)) return false;
    for (std::size_t i = 0; i < L.gram.rows(); ++i)
        if (L.gram.num.at(i, i) % 2 != 0) return false;
    return true;
}

bool is_unimodular(const CodeLattice& L) {
    return is_integral(L) && det(L.gram) == 1;
}

CodeLattice dual_lattice(const CodeLattice& L) {
    AmbientBasis ab = ambient_basis(L.spec);
    CodeLattice D;
    D.spec = L.spec;
    D.m = L.m;
    D.basis = canonical_basis(mul(inverse(L.gram), L.basis));
    D.gram = gram_of(D.basis, block_diag(ab.gram_fstar, L.m));
    return D;
}

bool lattices_equal(const CodeLattice& a, const CodeLattice& b) {
    require(a.spec == b.spec && a.m == b.m, "lattices_equal: ambient mismatch");
    Int l;
    mpz_lcm(l.get_mpz_t(), a.basis.den.get_mpz_t(), b.basis.den.get_mpz_t());
    auto scaled = [&](const RatMatrix& m) {
        IntMatrix s = m.num;
        Int f = l / m.den;
        if (f != 1)
            for (auto& x : s.a) x *= f;
        return hnf(std::move(s));
    };
    return scaled(a.basis) == scaled(b.basis);
}

bool TheoremReport::pass() const {
    return std::all_of(clauses.begin(), clauses.end(),
                       [](const TheoremClause& c) { return c.agree(); });
}

std::string TheoremReport::str() const {
    std::ostringstream os;
    for (const auto& c : clauses)
        os << "clause " << c.name << ": lattice=" << (c.lattice_side ? "true" : "false")
           << " code=" << (c.code_side ? "true" : "false")
           << (c.agree() ? " agree" : " DISAGREE") << "\n";
    os << "overall " << (pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

namespace {

enum class QuadCond {
    WtEMod2N1,   // wt_E in 2(n+1)Z   (A_n, n odd)
    SelfZero,    // x.x = 0           (A_n even, E6)
    WtEMod8,     // wt_E in 8Z        (D_n odd)
    WtEMod4,     // wt_E in 4Z        (E7)
    WtLMod4,     // wt_L in 4Z
    WtHEven,     // wt_H even
    WtBEven,     // wt_B even
    HermZero,    // x.conj(x) = 0
};

struct LemmaShape {
    bool hermitian_pairing = false;  // B in Z  <=>  x.conj(y) in S
    std::vector<Elem> S;             // allowed inner-product values
    QuadCond quad;
};

LemmaShape lemma_shape(const RootLatticeSpec& spec) {
    const int n = spec.n;
    switch (spec.family) {
        case Family::A:
            return {false, {0}, n % 2 ? QuadCond::WtEMod2N1 : QuadCond::SelfZero};
        case Family::D:
            if (n % 2 == 1) return {false, {0}, QuadCond::WtEMod8};
            switch (spec.d_even_ring) {
                case RingKind::F2U:
                    if (n % 4 != 0) return {false, {0, 3}, QuadCond::WtLMod4};  // {0, 1+u}
                    return {false, {0, 1}, n % 8 ? QuadCond::WtHEven : QuadCond::WtBEven};
                case RingKind::F4:
                    if (n % 4 != 0) return {false, {0, 1}, QuadCond::WtLMod4};
                    return {true, {0, 1}, n % 8 ? QuadCond::HermZero : QuadCond::WtBEven};
                default:  // F2xF2
                    if (n % 4 != 0) return {false, {0, 3}, QuadCond::WtLMod4};  // {(0,0),(1,1)}
                    return {true, {0, 3}, n % 8 ? QuadCond::WtHEven : QuadCond::HermZero};
            }
        case Family::E:
            if (n == 6) return {false, {0}, QuadCond::SelfZero};
            return {false, {0}, QuadCond::WtEMod4};
    }
    throw std::logic_error("lemma_shape: unreachable");
}

bool quad_holds(const RingSpec& ring, QuadCond q, const Word& w, int n) {
    switch (q) {
        case QuadCond::WtEMod2N1: return euclidean_weight(ring.modulus, w) % (2 * (n + 1)) == 0;
        case QuadCond::SelfZero: return inner_product(ring, w, w) == 0;
        case QuadCond::WtEMod8: return euclidean_weight(ring.modulus, w) % 8 == 0;
        case QuadCond::WtEMod4: return euclidean_weight(ring.modulus, w) % 4 == 0;
        case QuadCond::WtLMod4:
            return weights_from_composition(lee_composition(ring, w)).lee % 4 == 0;
        case QuadCond::WtHEven:
            return weights_from_composition(lee_composition(ring, w)).hamming % 2 == 0;
        case QuadCond::WtBEven:
            return weights_from_composition(lee_composition(ring, w)).bachoc % 2 == 0;
        case QuadCond::HermZero: return inner_product(ring, w, w, true) == 0;
    }
    return false;
}

const char* quad_name(QuadCond q) {
    switch (q) {
        case QuadCond::WtEMod2N1: return "wt_E in 2(n+1)Z";
        case QuadCond::SelfZero: return "x.x = 0";
        case QuadCond::WtEMod8: return "wt_E in 8Z";
        case QuadCond::WtEMod4: return "wt_E in 4Z";
        case QuadCond::WtLMod4: return "wt_L in 4Z";
        case QuadCond::WtHEven: return "wt_H even";
        case QuadCond::WtBEven: return "wt_B even";
        case QuadCond::HermZero: return "x.conj(x) = 0";
    }
    return "?";
}

}  // namespace

TheoremReport verify_main_theorem(const RootLatticeSpec& spec, const Code& code,
                                  std::uint64_t guard) {
    CodeLattice L = build_gamma_c(spec, code, guard);
    RingSpec ring = *ring_of(spec);
    LemmaShape shape = lemma_shape(spec);
    const bool herm = shape.hermitian_pairing;

    SelfDuality sd = self_duality(code, guard);
    bool sub_dual = herm ? sd.self_orthogonal_hermitian : sd.self_orthogonal_euclidean;
    bool self_dual = herm ? sd.self_dual_hermitian : sd.self_dual_euclidean;
    auto words = enumerate_codewords(code, guard);
    bool quad_all = std::all_of(words.begin(), words.end(), [&](const Word& w) {
        return quad_holds(ring, shape.quad, w, spec.n);
    });

    // even-unimodular code side per the theorem branch
    bool eu_code;
    std::string eu_name;
    if (spec.family == Family::D && spec.n % 2 == 0 && spec.n % 8 == 0 &&
        (spec.d_even_ring == RingKind::F4)) {
        eu_code = self_dual && quad_all;  // Hermitian self-dual and wt_B even
        eu_name = "even unimodular <=> hermitian self-dual and wt_B even";
    } else if (shape.quad == QuadCond::SelfZero ||
               (spec.family == Family::D && spec.n % 8 == 0 &&
                spec.d_even_ring == RingKind::F2xF2)) {
        eu_code = self_dual;  // self-duality alone
        eu_name = herm ? "even unimodular <=> hermitian self-dual"
                       : "even unimodular <=> euclidean self-dual";
    } else if (spec.family == Family::D && spec.n % 4 == 0 &&
               spec.d_even_ring == RingKind::F4) {
        eu_code = self_dual;  // n in 4Z \ 8Z over F4
        eu_name = "even unimodular <=> hermitian self-dual";
    } else if (spec.family == Family::D && spec.n % 4 == 0 &&
               spec.d_even_ring == RingKind::F2xF2) {
        eu_code = self_dual && quad_all;  // Type IV
        eu_name = "even unimodular <=> Type IV";
    } else if (spec.family == Family::D && spec.n % 4 == 0 &&
               spec.d_even_ring == RingKind::F2U) {
        eu_code = self_dual && quad_all;  // Type IV
        eu_name = "even unimodular <=> Type IV";
    } else {
        eu_code = self_dual && quad_all;  // Type II
        eu_name = "even unimodular <=> Type II";
    }

    std::string dual_kind = herm ? "hermitian" : "euclidean";
    TheoremReport rep;
    rep.spec = spec;
    rep.clauses.push_back(
        {"integral <=> C subset " + dual_kind + " dual", is_integral(L), sub_dual});
    rep.clauses.push_back(
        {"unimodular <=> " + dual_kind + " self-dual", is_unimodular(L), self_dual});
    rep.clauses.push_back(
        {std::string("even <=> ") + quad_name(shape.quad) + " for all codewords", is_even(L),
         quad_all});
    rep.clauses.push_back({eu_name, is_even(L) && is_unimodular(L), eu_code});
    return rep;
}

OracleReport coset_oracle(const RootLatticeSpec& spec, std::size_t m, bool parallel) {
    require(spec.valid() && m >= 1, "coset_oracle: invalid spec or m");
    auto ring_opt = ring_of(spec);
    require(ring_opt.has_value(), "coset_oracle: E8 has no coset structure");
    const RingSpec ring = *ring_opt;
    const std::size_t n = static_cast<std::size_t>(spec.n);
    AmbientBasis ab = ambient_basis(spec);
    LemmaShape shape = lemma_shape(spec);

    // all coset representatives = all words of R^m with fixed lifts
    std::uint64_t W = 1;
    for (std::size_t i = 0; i < m; ++i) {
        W *= ring.size();
        require(W <= (std::uint64_t(1) << 22), "coset_oracle: coset space too large");
    }
    std::vector<Word> words(W);
    std::vector<std::vector<Int>> lifts(W);
    for (std::uint64_t idx = 0; idx < W; ++idx) {
        Word w(m);
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < m; ++i) {
            w[i] = static_cast<Elem>(t % ring.size());
            t /= ring.size();
        }
        lifts[idx].reserve(n * m);
        for (Elem c : w) {
            auto v = lift(spec, c);
            lifts[idx].insert(lifts[idx].end(), v.begin(), v.end());
        }
        // rho(lift) = identity on words
        check(rho(spec, lifts[idx], m) == w, "coset_oracle: rho(lift(w)) != w");
        words[idx] = std::move(w);
    }

    const RatMatrix G = block_diag(ab.gram_fstar, m);
    auto bform = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
        Int s = 0;
        for (std::size_t i = 0; i < n * m; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < n * m; ++j)
                if (y[j] != 0) s += x[i] * G.num.at(i, j) * y[j];
        }
        return make_rat(s, G.den);
    };

    // f-basis rows of Lambda^m in f*-coordinates
    std::vector<std::vector<Int>> lam;
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Int> row(n * m, 0);
            for (std::size_t j = 0; j < n; ++j) row[b * n + j] = ab.gram_f.at(i, j);
            lam.push_back(std::move(row));
        }

    auto is_int = [](const Rat& q) { return q.get_den() == 1; };
    auto is_even_rat = [&](const Rat& q) { return is_int(q) && q.get_num() % 2 == 0; };

    OracleReport rep;
    rep.spec = spec;
    rep.m = m;
    rep.pairs_checked = W * W;
    std::vector<std::string> fails((std::size_t)W);

    #pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(W); ++xi) {
        std::ostringstream bad;
        const auto& x = lifts[xi];
        // lift independence: shifting x by any Lambda^m generator changes
        // B(x,y) by an integer and B(x,x) by an even integer
        for (const auto& l : lam) {
            if (!is_int(bform(l, x)))
                bad << "B(lambda,x) not integral at x=" << word_str(ring, words[xi]) << "; ";
            Rat d = 2 * bform(x, l) + bform(l, l);
            if (!is_even_rat(d))
                bad << "B(x+lambda,x+lambda)-B(x,x) odd at x=" << word_str(ring, words[xi]) << "; ";
        }
        // quadratic clause
        bool lat_even = is_even_rat(bform(x, x));
        bool code_even = quad_holds(ring, shape.quad, words[xi], spec.n);
        if (lat_even != code_even)
            bad << "B(x,x) in 2Z is " << lat_even << " but " << quad_name(shape.quad) << " is "
                << code_even << " at x=" << word_str(ring, words[xi]) << "; ";
        // bilinear clause against every y
        for (std::uint64_t yi = 0; yi < W; ++yi) {
            bool lat_int = is_int(bform(x, lifts[yi]));
            Elem ip = inner_product(ring, words[xi], words[yi], shape.hermitian_pairing);
            bool code_int =
                std::find(shape.S.begin(), shape.S.end(), ip) != shape.S.end();
            if (lat_int != code_int) {
                bad << "B(x,y) in Z is " << lat_int << " but rho(x).rho(y)=" << elem_token(ring, ip)
                    << " in S is " << code_int << " at x=" << word_str(ring, words[xi])
                    << " y=" << word_str(ring, words[yi]) << "; ";
                break;
            }
        }
        fails[xi] = bad.str();
    }

    for (const auto& f : fails)
        if (!f.empty()) {
            rep.pass = false;
            rep.counterexample = f;
            return rep;
        }
    rep.pass = true;
    return rep;
}

}  // namespace latcode
