#include "latcode/theta.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace latcode {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Fincke-Pohst data: Q(y) = sum_i q[i][i] (y_i + sum_{j>i} q[i][j] y_j)^2
struct Decomposition {
    std::size_t n;
    std::vector<Rat> q;  // row-major n x n
    Rat& at(std::size_t i, std::size_t j) { return q[i * n + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return q[i * n + j]; }
};

Decomposition decompose(const RatMatrix& gram) {
    const std::size_t n = gram.rows();
    require(n == gram.cols(), "enumerate_short: gram not square");
    Decomposition d{n, std::vector<Rat>(n * n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d.at(i, j) = gram.at(i, j);
    for (std::size_t i = 0; i < n; ++i) {
        require(d.at(i, i) > 0, "enumerate_short: form not positive definite");
        for (std::size_t j = i + 1; j < n; ++j) {
            d.at(j, i) = d.at(i, j);
            d.at(i, j) /= d.at(i, i);
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) d.at(k, l) -= d.at(k, i) * d.at(i, l);
    }
    return d;
}

// floor(c + sqrt(t)) and ceil(c - sqrt(t)) with outward rounding; t >= 0
Int floor_plus_sqrt(const Rat& c, const Rat& t) {
    // sqrt(t) <= (isqrt(num*den) + 1) / den
    Int nd = t.get_num() * t.get_den();
    Int s;
    mpz_sqrt(s.get_mpz_t(), nd.get_mpz_t());
    Rat up = make_rat(s + 1, t.get_den());
    Rat v = c + up;
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return f;
}

Int ceil_minus_sqrt(const Rat& c, const Rat& t) {
    Int nd = t.get_num() * t.get_den();
    Int s;
    mpz_sqrt(s.get_mpz_t(), nd.get_mpz_t());
    Rat up = make_rat(s + 1, t.get_den());
    Rat v = c - up;
    Int f;
    mpz_cdiv_q(f.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return f;
}

struct EnumContext {
    const Decomposition& d;
    const std::vector<Rat>& offset;  // size n or empty
    std::vector<Int> x;
    std::vector<Rat> y;  // y_i = x_i + offset_i for levels already fixed
    const VectorCallback* cb;

    Rat off(std::size_t i) const { return offset.empty() ? Rat(0) : offset[i]; }

    // center c_i = sum_{j>i} q[i][j] * y_j
    Rat center(std::size_t i) const {
        Rat c = 0;
        for (std::size_t j = i + 1; j < d.n; ++j)
            if (y[j] != 0 && d.at(i, j) != 0) c += d.at(i, j) * y[j];
        return c;
    }

    void recurse(std::size_t level, const Rat& budget, const Rat& used) {
        if (level == SIZE_MAX) {  // all coordinates fixed
            (*cb)(std::span<const Int>(x.data(), d.n), used);
            return;
        }
        const std::size_t i = level;
        Rat c = center(i) + off(i);
        // q_ii (x_i + c)^2 <= budget
        Rat t = budget / d.at(i, i);
        Int lo = ceil_minus_sqrt(-c, t);
        Int hi = floor_plus_sqrt(-c, t);
        for (Int xi = lo; xi <= hi; ++xi) {
            Rat yi = Rat(xi) + c;
            Rat contrib = d.at(i, i) * yi * yi;
            if (contrib > budget) continue;  // outward-rounded candidates verified exactly
            x[i] = xi;
            y[i] = Rat(xi) + off(i);
            recurse(i == 0 ? SIZE_MAX : i - 1, budget - contrib, used + contrib);
        }
        x[i] = 0;
        y[i] = 0;
    }
};

}  // namespace

void enumerate_short_serial(const RatMatrix& gram, const Rat& bound,
                            const std::vector<Rat>& offset, const VectorCallback& cb) {
    if (bound < 0) throw std::invalid_argument("enumerate_short: negative bound");
    require(offset.empty() || offset.size() == gram.rows(), "enumerate_short: offset size");
    Decomposition d = decompose(gram);
    EnumContext ctx{d, offset, std::vector<Int>(d.n), std::vector<Rat>(d.n), &cb};
    if (d.n == 0) {
        cb({}, Rat(0));
        return;
    }
    ctx.recurse(d.n - 1, bound, Rat(0));
}

void enumerate_short(const RatMatrix& gram, const Rat& bound, const std::vector<Rat>& offset,
                     const VectorCallback& cb, bool parallel) {
    if (!parallel || gram.rows() < 2) {
        enumerate_short_serial(gram, bound, offset, cb);
        return;
    }
    if (bound < 0) throw std::invalid_argument("enumerate_short: negative bound");
    require(offset.empty() || offset.size() == gram.rows(), "enumerate_short: offset size");
    Decomposition d = decompose(gram);
    const std::size_t n = d.n;
    const std::size_t top = n - 1;

    // top-level candidate range (center is the offset alone at the top)
    Rat c = offset.empty() ? Rat(0) : offset[top];
    Rat t = bound / d.at(top, top);
    Int lo = ceil_minus_sqrt(-c, t);
    Int hi = floor_plus_sqrt(-c, t);
    if (hi < lo) return;
    Int width = hi - lo + 1;
    const long tasks = width.fits_slong_p() ? width.get_si() : -1;
    require(tasks > 0, "enumerate_short: top-level range too large");

    using Hit = std::pair<std::vector<Int>, Rat>;
    std::vector<std::vector<Hit>> buffers(static_cast<std::size_t>(tasks));

    #pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < tasks; ++k) {
        Int xi = lo + k;
        Rat yi = Rat(xi) + c;
        Rat contrib = d.at(top, top) * yi * yi;
        if (contrib > bound) continue;
        auto& buf = buffers[static_cast<std::size_t>(k)];
        VectorCallback collect = [&buf](std::span<const Int> v, const Rat& nrm) {
            buf.emplace_back(std::vector<Int>(v.begin(), v.end()), nrm);
        };
        EnumContext ctx{d, offset, std::vector<Int>(n), std::vector<Rat>(n), &collect};
        ctx.x[top] = xi;
        ctx.y[top] = Rat(xi) + (offset.empty() ? Rat(0) : offset[top]);
        if (top == 0)
            collect(std::span<const Int>(ctx.x.data(), n), contrib);
        else
            ctx.recurse(top - 1, bound - contrib, contrib);
    }

    // deterministic replay, ordered by the outermost coordinate
    for (auto& buf : buffers)
        for (auto& [v, nrm] : buf) cb(std::span<const Int>(v.data(), v.size()), nrm);
}

ShortVectorReport short_vectors(const RatMatrix& gram, const Rat& bound, bool parallel,
                                bool collect) {
    ShortVectorReport rep;
    rep.bound = bound;
    enumerate_short(
        gram, bound, {},
        [&](std::span<const Int> v, const Rat& nrm) {
            rep.counts[nrm]++;
            if (collect) rep.vectors.emplace_back(std::vector<Int>(v.begin(), v.end()), nrm);
        },
        parallel);
    return rep;
}

ShortVectorReport short_vectors(const CodeLattice& L, const Rat& bound, bool parallel,
                                bool collect) {
    return short_vectors(L.gram, bound, parallel, collect);
}

std::vector<std::pair<Rat, std::uint64_t>> theta_coefficients(const CodeLattice& L,
                                                              const Rat& qmax, bool parallel) {
    require(is_even(L), "theta_coefficients: lattice not even");
    auto rep = short_vectors(L, qmax, parallel, false);
    std::vector<std::pair<Rat, std::uint64_t>> out(rep.counts.begin(), rep.counts.end());
    return out;
}

std::uint64_t RootComponent::roots() const {
    switch (family) {
        case 'A': return std::uint64_t(rank) * (rank + 1);
        case 'D': return 2ull * rank * (rank - 1);
        case 'E': return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    }
    return 0;
}

std::string RootSystemLabel::str() const {
    if (parts.empty()) return "none";
    std::ostringstream os;
    bool first = true;
    for (const auto& [comp, mult] : parts) {
        if (!first) os << '+';
        first = false;
        if (mult > 1) os << mult;
        os << comp.family << comp.rank;
    }
    return os.str();
}

std::optional<RootSystemLabel> RootSystemLabel::parse(std::string_view s) {
    RootSystemLabel lab;
    std::size_t i = 0;
    if (s == "none") return lab;
    while (i < s.size()) {
        int mult = 1;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) {
            auto [p, ec] = std::from_chars(s.data() + i, s.data() + j, mult);
            if (ec != std::errc()) return std::nullopt;
        }
        if (j >= s.size() || (s[j] != 'A' && s[j] != 'D' && s[j] != 'E')) return std::nullopt;
        char fam = s[j];
        ++j;
        std::size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        int rank = 0;
        auto [p2, ec2] = std::from_chars(s.data() + j, s.data() + k, rank);
        if (ec2 != std::errc() || rank <= 0) return std::nullopt;
        lab.parts.push_back({{fam, rank}, mult});
        i = k;
        if (i < s.size()) {
            if (s[i] != '+') return std::nullopt;
            ++i;
        }
    }
    // canonical order: rank descending, then family
    std::sort(lab.parts.begin(), lab.parts.end(), [](const auto& a, const auto& b) {
        if (a.first.rank != b.first.rank) return a.first.rank > b.first.rank;
        return a.first.family < b.first.family;
    });
    return lab;
}

std::uint64_t RootSystemLabel::root_count() const {
    std::uint64_t c = 0;
    for (const auto& [comp, mult] : parts) c += comp.roots() * mult;
    return c;
}

int RootSystemLabel::total_rank() const {
    int r = 0;
    for (const auto& [comp, mult] : parts) r += comp.rank * mult;
    return r;
}

RootSystemLabel root_system(const CodeLattice& L, bool parallel) {
    require(is_even(L), "root_system: lattice not even");
    require(L.rank() <= 32, "root_system: rank guard exceeded");
    const std::size_t n = L.rank();

    auto rep = short_vectors(L, Rat(2), parallel, true);
    // one representative per +-pair
    std::vector<std::vector<Int>> reps;
    for (auto& [v, nrm] : rep.vectors) {
        if (nrm != 2) continue;
        std::vector<Int> neg(n);
        for (std::size_t i = 0; i < n; ++i) neg[i] = -v[i];
        if (std::lexicographical_compare(v.begin(), v.end(), neg.begin(), neg.end())) continue;
        reps.push_back(v);
    }
    const std::size_t N = reps.size();

    // integer pairing: w = v * (den * gram) has integer entries, b(u,v) = u.w / den
    std::vector<std::vector<Int>> gw(N, std::vector<Int>(n));
    #pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(N); ++a)
        for (std::size_t j = 0; j < n; ++j) {
            Int s = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (reps[a][i] != 0) s += reps[a][i] * L.gram.num.at(i, j);
            gw[a][j] = s;
        }

    std::vector<std::size_t> parent(N);
    for (std::size_t i = 0; i < N; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a + 1; b < N; ++b) {
            Int s = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (reps[a][i] != 0) s += reps[a][i] * gw[b][i];
            if (s != 0) {
                std::size_t ra = find(a), rb = find(b);
                if (ra != rb) parent[ra] = rb;
            }
        }

    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t i = 0; i < N; ++i) comps[find(i)].push_back(i);

    std::map<RootComponent, int> mult;
    for (const auto& [root, idx] : comps) {
        IntMatrix span(idx.size(), n);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) span.at(i, j) = reps[idx[i]][j];
        const std::size_t rank = hnf(std::move(span)).rows;
        const std::uint64_t count = 2 * idx.size();
        RootComponent comp;
        if (count == rank * (rank + 1))
            comp = {'A', static_cast<int>(rank)};  // includes the D3 = A3 alias
        else if (rank >= 4 && count == 2 * rank * (rank - 1))
            comp = {'D', static_cast<int>(rank)};
        else if ((rank == 6 && count == 72) || (rank == 7 && count == 126) ||
                 (rank == 8 && count == 240))
            comp = {'E', static_cast<int>(rank)};
        else
            throw std::logic_error("root_system: component (rank=" + std::to_string(rank) +
                                   ", roots=" + std::to_string(count) + ") is not ADE");
        mult[comp]++;
    }

    RootSystemLabel lab;
    for (const auto& [comp, m] : mult) lab.parts.push_back({comp, m});
    std::sort(lab.parts.begin(), lab.parts.end(), [](const auto& a, const auto& b) {
        if (a.first.rank != b.first.rank) return a.first.rank > b.first.rank;
        return a.first.family < b.first.family;
    });
    return lab;
}

}  // namespace latcode
