#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latcode/construction.hpp"
#include "latcode/exactlinear.hpp"

namespace latcode {

/// Called once per lattice vector with its integer coordinates (relative to
/// the Gram's basis) and its exact norm Q(x + offset).
using VectorCallback = std::function<void(std::span<const Int>, const Rat&)>;

/// Enumerate every integer vector x with Q(x + offset) <= bound, where Q is
/// the positive definite form given by `gram`. Candidate ranges come from
/// outward-rounded integer square roots; every emitted vector is verified
/// against the exact rational form. An empty offset means the zero coset.
///
/// The parallel kernel splits the outermost coordinate range across OpenMP
/// threads and replays buffered results in deterministic order; the serial
/// reference walks the same tree directly. Both produce identical output.
void enumerate_short_serial(const RatMatrix& gram, const Rat& bound,
                            const std::vector<Rat>& offset, const VectorCallback& cb);
void enumerate_short(const RatMatrix& gram, const Rat& bound, const std::vector<Rat>& offset,
                     const VectorCallback& cb, bool parallel = true);

struct ShortVectorReport {
    Rat bound;
    std::map<Rat, std::uint64_t> counts;  // norm -> count (norm 0 counted once)
    /// filled only when requested
    std::vector<std::pair<std::vector<Int>, Rat>> vectors;
};

ShortVectorReport short_vectors(const RatMatrix& gram, const Rat& bound, bool parallel = true,
                                bool collect = false);
ShortVectorReport short_vectors(const CodeLattice& L, const Rat& bound, bool parallel = true,
                                bool collect = false);

/// Theta coefficients (norm, count) of an even lattice up to qmax; the
/// norm-0 coefficient is 1.
std::vector<std::pair<Rat, std::uint64_t>> theta_coefficients(const CodeLattice& L,
                                                              const Rat& qmax,
                                                              bool parallel = true);

struct RootComponent {
    char family = 'A';  // 'A', 'D' or 'E'
    int rank = 0;
    std::uint64_t roots() const;
    auto operator<=>(const RootComponent&) const = default;
};

/// Multiset of irreducible components of the norm-2 root system, printed in
/// the table notation `2D12`, `D10+2E7`, `24A1`, ...
struct RootSystemLabel {
    std::vector<std::pair<RootComponent, int>> parts;  // canonical order, multiplicity

    std::string str() const;
    static std::optional<RootSystemLabel> parse(std::string_view s);
    std::uint64_t root_count() const;
    int total_rank() const;
    bool operator==(const RootSystemLabel&) const = default;
};

/// Partition the norm-2 vectors into connected components (adjacency
/// b(r,s) != 0 on +-classes) and type each component by (span rank, root
/// count). Requires an even lattice of rank <= 32.
RootSystemLabel root_system(const CodeLattice& L, bool parallel = true);

}  // namespace latcode
