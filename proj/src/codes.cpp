#include "latcode/codes.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "latcode/exactlinear.hpp"

namespace latcode {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::uint64_t ipow_guarded(std::uint64_t base, std::size_t exp, std::uint64_t guard) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (v > guard / base) return guard + 1;
        v *= base;
    }
    return v;
}

bool is_power_of(std::uint64_t v, std::uint64_t p) {
    if (v == 0) return false;
    while (v % p == 0) v /= p;
    return v == 1;
}

// smallest prime factor; the rings here have tiny moduli
unsigned small_prime_factor(unsigned k) {
    for (unsigned p = 2; p * p <= k; ++p)
        if (k % p == 0) return p;
    return k;
}

}  // namespace

std::uint64_t WeightEnumerator::total() const {
    std::uint64_t t = 0;
    for (const auto& [e, c] : coeff) t += c;
    return t;
}

std::vector<Word> enumerate_codewords(const Code& c, std::uint64_t guard) {
    const RingSpec& r = c.ring;
    for (const auto& g : c.generators)
        require(g.size() == c.length, "enumerate_codewords: generator length mismatch");
    const std::uint64_t order = r.size();

    // incremental closure S <- S + R g, one generator at a time; S stays an
    // R-submodule throughout, so redundant generators cost one lookup
    std::set<Word> words;
    words.insert(Word(c.length, 0));
    for (const auto& g : c.generators) {
        if (words.count(g)) continue;
        std::vector<Word> base(words.begin(), words.end());
        for (Elem s = 1; s < order; ++s) {
            Word sg(c.length);
            for (std::size_t j = 0; j < c.length; ++j) sg[j] = mul(r, s, g[j]);
            for (const auto& w : base) {
                Word nw(c.length);
                for (std::size_t j = 0; j < c.length; ++j) nw[j] = add(r, w[j], sg[j]);
                words.insert(std::move(nw));
            }
            if (words.size() > guard)
                throw GuardExceeded("enumerate_codewords: span guard exceeded");
        }
    }

    // cardinality sanity: |C| is a p-power when the residue structure is a
    // p-power, and divides |R|^m always
    const std::uint64_t n = words.size();
    unsigned p = r.kind == RingKind::ZMod ? small_prime_factor(r.modulus) : 2;
    std::uint64_t pk = r.kind == RingKind::ZMod ? r.modulus : 4;
    if (is_power_of(pk, p)) {
        if (!is_power_of(n, p) && n != 1)
            throw std::logic_error("enumerate_codewords: cardinality is not a p-power");
    }
    return std::vector<Word>(words.begin(), words.end());
}

/// Keep only generators that enlarge the span; the reduced list generates
/// the same submodule.
static std::vector<Word> reduce_generators(const RingSpec& r, std::size_t m,
                                           const std::vector<Word>& candidates,
                                           std::uint64_t guard) {
    std::set<Word> words;
    words.insert(Word(m, 0));
    std::vector<Word> kept;
    for (const auto& g : candidates) {
        if (words.count(g)) continue;
        kept.push_back(g);
        std::vector<Word> base(words.begin(), words.end());
        for (Elem s = 1; s < r.size(); ++s) {
            Word sg(m);
            for (std::size_t j = 0; j < m; ++j) sg[j] = mul(r, s, g[j]);
            for (const auto& w : base) {
                Word nw(m);
                for (std::size_t j = 0; j < m; ++j) nw[j] = add(r, w[j], sg[j]);
                words.insert(std::move(nw));
            }
            if (words.size() > guard)
                throw GuardExceeded("reduce_generators: span guard exceeded");
        }
    }
    return kept;
}

namespace {

Code dual_brute_force(const Code& c, bool hermitian) {
    const RingSpec& r = c.ring;
    const std::uint64_t order = r.size();
    std::vector<Word> conj_gens = c.generators;
    if (hermitian)
        for (auto& g : conj_gens)
            for (auto& x : g) x = conjugate(r, x);

    Code out{r, c.length, {}};
    Word x(c.length, 0);
    for (;;) {
        bool ok = true;
        for (const auto& g : conj_gens)
            if (inner_product(r, x, g) != 0) {
                ok = false;
                break;
            }
        if (ok && std::any_of(x.begin(), x.end(), [](Elem e) { return e != 0; }))
            out.generators.push_back(x);
        std::size_t i = 0;
        for (; i < x.size(); ++i) {
            x[i]++;
            if (x[i] < order) break;
            x[i] = 0;
        }
        if (i == x.size()) break;
    }
    return out;
}

// Dual over Z/kZ via the integer kernel of [G | kI]: x is orthogonal to all
// generators exactly when G x^T = 0 mod k.
Code dual_zmod_kernel(const Code& c) {
    const unsigned k = c.ring.modulus;
    const std::size_t s = c.generators.size(), m = c.length;
    IntMatrix gm(s, m + s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < m; ++j) gm.at(i, j) = c.generators[i][j];
        gm.at(i, m + i) = k;
    }
    IntMatrix ker = right_kernel(gm);
    Code out{c.ring, m, {}};
    for (std::size_t i = 0; i < ker.rows; ++i) {
        Word w(m);
        bool nonzero = false;
        for (std::size_t j = 0; j < m; ++j) {
            Int v = ker.at(i, j) % k;
            if (v < 0) v += k;
            w[j] = static_cast<Elem>(v.get_ui());
            nonzero |= (w[j] != 0);
        }
        if (nonzero) out.generators.push_back(std::move(w));
    }
    return out;
}

}  // namespace

Code dual_code(const Code& c, bool hermitian, std::uint64_t guard) {
    for (const auto& g : c.generators)
        require(g.size() == c.length, "dual_code: generator length mismatch");
    const std::uint64_t order = c.ring.size();
    const std::uint64_t space = ipow_guarded(order, c.length, guard);

    Code dual;
    // brute force at paper scales; integer-kernel route for larger Z/kZ codes
    if (space <= (std::uint64_t(1) << 16) || c.ring.kind != RingKind::ZMod) {
        if (space > guard) throw GuardExceeded("dual_code: brute-force guard exceeded");
        dual = dual_brute_force(c, hermitian);
    } else {
        dual = dual_zmod_kernel(c);
    }
    dual.generators = reduce_generators(dual.ring, dual.length, dual.generators, guard);

    // |C| * |dual| = |R|^m
    std::uint64_t nc = enumerate_codewords(c, guard).size();
    std::uint64_t nd = enumerate_codewords(dual, guard).size();
    if (space <= guard && nc * nd != space)
        throw std::logic_error("dual_code: |C| * |C_dual| != |R|^m");
    return dual;
}

bool same_codeword_set(const Code& a, const Code& b, std::uint64_t guard) {
    require(a.ring == b.ring && a.length == b.length, "same_codeword_set: ambient mismatch");
    return enumerate_codewords(a, guard) == enumerate_codewords(b, guard);
}

SelfDuality self_duality(const Code& c, std::uint64_t guard) {
    auto words = enumerate_codewords(c, guard);
    auto contains_all = [&](const Code& d) {
        auto dw = enumerate_codewords(d, guard);
        return std::includes(dw.begin(), dw.end(), words.begin(), words.end());
    };
    SelfDuality s;
    Code de = dual_code(c, false, guard);
    s.self_orthogonal_euclidean = contains_all(de);
    s.self_dual_euclidean = s.self_orthogonal_euclidean && enumerate_codewords(de, guard) == words;
    Code dh = dual_code(c, true, guard);
    s.self_orthogonal_hermitian = contains_all(dh);
    s.self_dual_hermitian = s.self_orthogonal_hermitian && enumerate_codewords(dh, guard) == words;
    return s;
}

bool type_II(const Code& c, std::uint64_t guard) {
    SelfDuality sd = self_duality(c, guard);
    if (!sd.self_dual_euclidean) return false;
    auto words = enumerate_codewords(c, guard);
    if (c.ring.kind == RingKind::ZMod) {
        const unsigned k = c.ring.modulus;
        for (const auto& w : words)
            if (euclidean_weight(k, w) % (2ull * k) != 0) return false;
    } else {
        for (const auto& w : words)
            if (weights_from_composition(lee_composition(c.ring, w)).lee % 4 != 0) return false;
    }
    return true;
}

bool type_IV(const Code& c, std::uint64_t guard) {
    require(c.ring.kind == RingKind::F2U || c.ring.kind == RingKind::F2xF2,
            "type_IV: defined for F2+uF2 (Euclidean) and F2xF2 (Hermitian)");
    SelfDuality sd = self_duality(c, guard);
    bool dual_ok =
        c.ring.kind == RingKind::F2U ? sd.self_dual_euclidean : sd.self_dual_hermitian;
    if (!dual_ok) return false;
    for (const auto& w : enumerate_codewords(c, guard))
        if (weights_from_composition(lee_composition(c.ring, w)).hamming % 2 != 0) return false;
    return true;
}

WeightEnumerator weight_enumerator(const Code& c, EnumeratorKind kind, std::uint64_t guard) {
    WeightEnumerator we{kind, c.length, {}};
    auto words = enumerate_codewords(c, guard);
    if (kind == EnumeratorKind::LeeComposition3) {
        require(c.ring.order4(), "weight_enumerator: LeeComposition3 needs an order-4 ring");
        for (const auto& w : words) {
            LeeComposition lc = lee_composition(c.ring, w);
            we.coeff[{lc.n0, lc.n1, lc.n2}]++;
        }
    } else {
        require(c.ring.kind == RingKind::ZMod && c.ring.modulus == 3,
                "weight_enumerator: Ternary2 needs Z/3Z");
        for (const auto& w : words) {
            std::size_t l1 = 0;
            for (Elem e : w) l1 += (e != 0);
            we.coeff[{w.size() - l1, l1, 0}]++;
        }
    }
    return we;
}

Code crt_combine(const Code& c1, const Code& c2) {
    require(c1.ring.kind == RingKind::ZMod && c1.ring.modulus == 2 && c2.ring == c1.ring,
            "crt_combine: inputs must be binary codes");
    require(c1.length == c2.length, "crt_combine: length mismatch");
    Code out{RingSpec::f2xf2(), c1.length, {}};
    for (const auto& g : c1.generators) {
        Word w(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) w[i] = g[i] & 1u;  // (a, 0)
        out.generators.push_back(std::move(w));
    }
    for (const auto& g : c2.generators) {
        Word w(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) w[i] = (g[i] & 1u) << 1;  // (0, b)
        out.generators.push_back(std::move(w));
    }
    return out;
}

Code read_code(std::istream& is) {
    std::string kw, rname;
    if (!(is >> kw >> rname) || kw != "ring") throw std::invalid_argument("code file: expected `ring <name>`");
    auto ring = RingSpec::parse(rname);
    if (!ring) throw std::invalid_argument("code file: unknown ring " + rname);
    std::size_t m = 0;
    if (!(is >> kw >> m) || kw != "length" || m < 1)
        throw std::invalid_argument("code file: expected `length <m>`");
    if (!(is >> kw) || kw != "generators") throw std::invalid_argument("code file: expected `generators`");
    std::string line;
    std::getline(is, line);
    Code c{*ring, m, {}};
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        Word w;
        std::string tok;
        while (ls >> tok) {
            auto e = parse_elem_token(*ring, tok);
            if (!e) throw std::invalid_argument("code file: bad element token `" + tok + "`");
            w.push_back(*e);
        }
        if (w.empty()) continue;
        if (w.size() != m) throw std::invalid_argument("code file: generator length mismatch");
        c.generators.push_back(std::move(w));
    }
    return c;
}

Code read_code_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open code file: " + path);
    return read_code(f);
}

void write_code(std::ostream& os, const Code& c) {
    os << "ring " << c.ring.name() << "\n";
    os << "length " << c.length << "\n";
    os << "generators\n";
    for (const auto& g : c.generators) os << word_str(c.ring, g) << "\n";
}

std::string write_code_str(const Code& c) {
    std::ostringstream os;
    write_code(os, c);
    return os.str();
}

}  // namespace latcode
