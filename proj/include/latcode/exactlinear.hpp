#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace latcode {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical rational from numerator/denominator (mpq_class does not
/// canonicalize on construction).
Rat make_rat(const Int& num, const Int& den);

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMatrix identity(std::size_t n);
    bool is_zero_row(std::size_t i) const;
    bool operator==(const IntMatrix& o) const = default;
};

/// Rational matrix as integer numerators over one positive denominator,
/// kept minimal (gcd of all entries and the denominator is 1).
struct RatMatrix {
    IntMatrix num;
    Int den = 1;

    RatMatrix() = default;
    explicit RatMatrix(IntMatrix m, Int d = 1);

    std::size_t rows() const { return num.rows; }
    std::size_t cols() const { return num.cols; }
    Rat at(std::size_t i, std::size_t j) const { return make_rat(num.at(i, j), den); }
    void set(std::size_t i, std::size_t j, const Rat& v);

    void normalize();
    bool is_integral() const { return den == 1; }
    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rat(std::size_t r, std::size_t c, const std::vector<Rat>& entries);
    bool operator==(const RatMatrix& o) const = default;
};

IntMatrix transpose(const IntMatrix& m);
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
RatMatrix transpose(const RatMatrix& m);
RatMatrix mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix to_rat(const IntMatrix& m);

/// Row-style Hermite normal form with positive pivots; entries above each
/// pivot reduced into [0, pivot). Zero rows are dropped, so the result has
/// exactly rank(m) rows. The row lattice is preserved.
IntMatrix hnf(IntMatrix m);

struct HnfResult {
    IntMatrix h;  ///< rank rows, HNF
    IntMatrix u;  ///< unimodular, u * m = [h; 0]
    std::size_t rank = 0;
};
HnfResult hnf_with_transform(IntMatrix m);

/// Basis (as rows) of { z in Z^cols : m z^T = 0 }.
IntMatrix right_kernel(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& m);
Rat det(const RatMatrix& m);

/// Exact inverse; throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& m);

/// Lattice dump: `denominator d` on the first line, then the basis rows
/// scaled by d as integers.
std::string write_lattice_dump(const RatMatrix& basis);
RatMatrix read_lattice_dump(const std::string& text);

}  // namespace latcode
