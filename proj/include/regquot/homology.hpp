#pragma once

// Brute-force graded Betti numbers: the Taylor complex for monomial ideals,
// squarefree divisor complexes for edge rings, and edge-ring Hilbert functions.

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "regquot/betti_table.hpp"
#include "regquot/field.hpp"
#include "regquot/graph.hpp"
#include "regquot/monomial.hpp"

namespace regquot {

/// Simplicial complex on at most 64 vertices, faces stored as bitmasks.
/// The void complex has no faces; the complex {emptyset} has one.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(std::size_t nvertices) { return SimplicialComplex(nvertices, {}); }
    /// All subsets of the given facets.
    static SimplicialComplex from_facets(std::size_t nvertices, const std::vector<std::vector<std::size_t>>& facets,
                                         std::size_t max_faces = 1u << 20);
    /// Explicit face list; throws BadParams unless closed under subsets.
    static SimplicialComplex from_faces(std::size_t nvertices, std::vector<std::uint64_t> faces);

    std::size_t vertex_count() const noexcept { return nvertices_; }
    std::size_t face_count() const noexcept { return faces_.size(); }
    const std::vector<std::uint64_t>& faces() const noexcept { return faces_; }
    bool is_void() const noexcept { return faces_.empty(); }
    /// -2 for the void complex, -1 for {emptyset}.
    int dimension() const noexcept;

private:
    SimplicialComplex(std::size_t n, std::vector<std::uint64_t> faces);
    std::size_t nvertices_ = 0;
    std::vector<std::uint64_t> faces_;  // sorted by (popcount, value)
};

/// dim H~_p for p = -1..dim; empty for the void complex.
std::vector<std::int64_t> reduced_homology(const SimplicialComplex& C, const PrimeField& F,
                                           std::size_t max_faces = 1u << 16);

struct TaylorOptions {
    std::size_t max_generators = 18;
    bool check_d_squared = true;
};

struct TaylorStats {
    std::size_t strands = 0;
    std::size_t largest_strand = 0;
    std::size_t d_squared_checks = 0;
};

/// Graded Betti numbers of I from the multidegree strands of its Taylor
/// complex. Throws CapExceeded past max_generators and MathError if a
/// composed differential is nonzero.
BettiTable taylor_betti(const MonomialIdeal& I, const PrimeField& F = PrimeField(),
                        const TaylorOptions& opts = {}, TaylorStats* stats = nullptr);

/// Vertex-degree vectors that are sums of exactly d edges, d = 0..d_max.
class SemigroupTable {
public:
    using Vec = std::vector<std::uint16_t>;

    SemigroupTable(const SimpleGraph& G, int d_max, std::size_t max_elements = 2'000'000);

    int max_degree() const noexcept { return static_cast<int>(layers_.size()) - 1; }
    const std::set<Vec>& layer(int d) const { return layers_.at(static_cast<std::size_t>(d)); }
    bool contains(const Vec& a, int d) const;
    const std::vector<Vec>& edge_vectors() const noexcept { return edges_; }

private:
    std::vector<Vec> edges_;
    std::vector<std::set<Vec>> layers_;
};

struct ToricCaps {
    std::size_t max_elements = 2'000'000;
    std::size_t max_faces = 1u << 16;
};

/// beta_{i,j}(I_G) for j <= j_max, summing dim H~_i(Delta_a) over the
/// semigroup degrees a with j edges.
BettiTable toric_betti(const SimpleGraph& G, int j_max, const PrimeField& F = PrimeField(),
                       const ToricCaps& caps = {});

/// dim_K K[G]_d for d = 0..d_max.
std::vector<std::int64_t> edge_ring_hilbert(const SimpleGraph& G, int d_max, std::size_t max_elements = 2'000'000);

}  // namespace regquot
