#include "latcode/exactlinear.hpp"

#include <algorithm>
#include <sstream>

namespace latcode {

Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero_row(std::size_t i) const {
    for (std::size_t j = 0; j < cols; ++j)
        if (at(i, j) != 0) return false;
    return true;
}

RatMatrix::RatMatrix(IntMatrix m, Int d) : num(std::move(m)), den(std::move(d)) {
    if (den == 0) throw std::domain_error("RatMatrix: zero denominator");
    normalize();
}

void RatMatrix::normalize() {
    if (den < 0) {
        den = -den;
        for (auto& x : num.a) x = -x;
    }
    Int g = den;
    for (const auto& x : num.a) {
        if (g == 1) break;
        Int ax = abs(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ax.get_mpz_t());
    }
    if (g > 1) {
        den /= g;
        for (auto& x : num.a) x /= g;
    }
}

void RatMatrix::set(std::size_t i, std::size_t j, const Rat& v) {
    // keeps the common-denominator representation exact, re-normalizes
    Int vd = v.get_den(), vn = v.get_num();
    Int g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), vd.get_mpz_t());
    Int scale = vd / g;
    if (scale != 1)
        for (auto& x : num.a) x *= scale;
    Int newden = den * scale;
    num.at(i, j) = vn * (newden / vd);
    den = newden;
    normalize();
}

RatMatrix RatMatrix::identity(std::size_t n) { return RatMatrix(IntMatrix::identity(n)); }

RatMatrix RatMatrix::from_rat(std::size_t r, std::size_t c, const std::vector<Rat>& entries) {
    if (entries.size() != r * c) throw std::invalid_argument("from_rat: size mismatch");
    Int den = 1;
    for (const auto& q : entries) {
        Int d = q.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r * c; ++i)
        m.a[i] = entries[i].get_num() * (den / entries[i].get_den());
    return RatMatrix(std::move(m), den);
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mul: dimension mismatch");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMatrix transpose(const RatMatrix& m) { return RatMatrix(transpose(m.num), m.den); }

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
    return RatMatrix(mul(a.num, b.num), a.den * b.den);
}

RatMatrix to_rat(const IntMatrix& m) { return RatMatrix(m); }

namespace {

// One HNF pass over `m`; if `u` is non-null it receives the same row
// operations (starting from the identity).
std::size_t hnf_inplace(IntMatrix& m, IntMatrix* u) {
    const std::size_t rows = m.rows, cols = m.cols;
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(i, c), m.at(j, c));
        if (u)
            for (std::size_t c = 0; c < u->cols; ++c) std::swap(u->at(i, c), u->at(j, c));
    };
    auto addmul = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < cols; ++c) m.at(dst, c) -= q * m.at(src, c);
        if (u)
            for (std::size_t c = 0; c < u->cols; ++c) u->at(dst, c) -= q * u->at(src, c);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = -m.at(i, c);
        if (u)
            for (std::size_t c = 0; c < u->cols; ++c) u->at(i, c) = -u->at(i, c);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // gcd-reduce column c below row r to a single pivot
        std::size_t piv = r;
        bool nonzero = false;
        for (std::size_t i = r; i < rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                nonzero = true;
                break;
            }
        if (!nonzero) continue;
        swap_rows(r, piv);
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r + 1; i < rows; ++i)
                if (m.at(i, c) != 0 && (best == rows || mpz_cmpabs(m.at(i, c).get_mpz_t(), m.at(best, c).get_mpz_t()) < 0))
                    best = i;
            if (best == rows) break;
            if (mpz_cmpabs(m.at(best, c).get_mpz_t(), m.at(r, c).get_mpz_t()) < 0) swap_rows(r, best);
            for (std::size_t i = r + 1; i < rows; ++i)
                if (m.at(i, c) != 0) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), m.at(i, c).get_mpz_t(), m.at(r, c).get_mpz_t());
                    addmul(i, r, q);
                }
        }
        if (m.at(r, c) < 0) negate_row(r);
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(i, c).get_mpz_t(), m.at(r, c).get_mpz_t());
            addmul(i, r, q);
        }
        ++r;
    }
    return r;
}

}  // namespace

IntMatrix hnf(IntMatrix m) {
    std::size_t rank = hnf_inplace(m, nullptr);
    IntMatrix out(rank, m.cols);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

HnfResult hnf_with_transform(IntMatrix m) {
    IntMatrix u = IntMatrix::identity(m.rows);
    std::size_t rank = hnf_inplace(m, &u);
    HnfResult res;
    res.rank = rank;
    res.h = IntMatrix(rank, m.cols);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) res.h.at(i, j) = m.at(i, j);
    res.u = std::move(u);
    return res;
}

IntMatrix right_kernel(const IntMatrix& m) {
    HnfResult r = hnf_with_transform(transpose(m));
    // rows of u beyond the rank satisfy u_i * m^T = 0, i.e. m u_i^T = 0
    IntMatrix ker(r.u.rows - r.rank, m.cols);
    for (std::size_t i = r.rank; i < r.u.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) ker.at(i - r.rank, j) = r.u.at(i, j);
    return ker;
}

Int det(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    IntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

Rat det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    Int d = det(m.num);
    Int dn;
    mpz_pow_ui(dn.get_mpz_t(), m.den.get_mpz_t(), m.rows());
    return make_rat(d, dn);
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    std::vector<Rat> w(n * 2 * n);
    auto at = [&](std::size_t i, std::size_t j) -> Rat& { return w[i * 2 * n + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) at(i, j) = m.at(i, j);
        at(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && at(p, c) == 0) ++p;
        if (p == n) throw std::domain_error("inverse: singular matrix");
        if (p != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(c, j), at(p, j));
        Rat pivinv = 1 / at(c, c);
        for (std::size_t j = c; j < 2 * n; ++j) at(c, j) *= pivinv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || at(i, c) == 0) continue;
            Rat f = at(i, c);
            for (std::size_t j = c; j < 2 * n; ++j) at(i, j) -= f * at(c, j);
        }
    }
    std::vector<Rat> inv(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i * n + j] = at(i, n + j);
    return RatMatrix::from_rat(n, n, inv);
}

std::string write_lattice_dump(const RatMatrix& basis) {
    std::ostringstream os;
    os << "denominator " << basis.den.get_str() << "\n";
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        for (std::size_t j = 0; j < basis.cols(); ++j) {
            if (j) os << ' ';
            os << basis.num.at(i, j).get_str();
        }
        os << "\n";
    }
    return os.str();
}

RatMatrix read_lattice_dump(const std::string& text) {
    std::istringstream is(text);
    std::string kw;
    Int den;
    if (!(is >> kw) || kw != "denominator") throw std::invalid_argument("lattice dump: missing denominator line");
    std::string d;
    if (!(is >> d)) throw std::invalid_argument("lattice dump: missing denominator value");
    den = Int(d);
    std::vector<std::vector<Int>> rows;
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<Int> row;
        std::string tok;
        while (ls >> tok) row.emplace_back(tok);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) return RatMatrix(IntMatrix(0, 0), den);
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols) throw std::invalid_argument("lattice dump: ragged rows");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return RatMatrix(std::move(m), den);
}

}  // namespace latcode
