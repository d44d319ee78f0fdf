#include "regquot/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <unordered_map>

#include "regquot/error.hpp"

namespace regquot {

namespace {

bool face_less(std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
}

// Faces bucketed by cardinality, with each face's index inside its bucket.
struct GradedBasis {
    std::vector<std::vector<std::uint64_t>> by_size;
    std::vector<std::unordered_map<std::uint64_t, std::size_t>> index;

    void add(std::uint64_t face) {
        const auto k = static_cast<std::size_t>(std::popcount(face));
        if (by_size.size() <= k) {
            by_size.resize(k + 1);
            index.resize(k + 1);
        }
        index[k].emplace(face, by_size[k].size());
        by_size[k].push_back(face);
    }
    std::size_t count(std::size_t k) const { return k < by_size.size() ? by_size[k].size() : 0; }

    // Boundary from size-k faces to size-(k-1) faces. Faces missing from the
    // basis are dropped, which is exactly the strand restriction.
    DenseMatrix boundary(std::size_t k, const PrimeField& F) const {
        DenseMatrix d(count(k - 1), count(k));
        if (k == 0 || k >= by_size.size()) return d;
        for (std::size_t c = 0; c < by_size[k].size(); ++c) {
            const std::uint64_t face = by_size[k][c];
            int pos = 0;
            for (std::uint64_t rest = face; rest; rest &= rest - 1, ++pos) {
                const std::uint64_t smaller = face & ~(rest & -rest);
                auto it = index[k - 1].find(smaller);
                if (it == index[k - 1].end()) continue;
                d(it->second, c) = pos % 2 == 0 ? 1 : F.neg(1);
            }
        }
        return d;
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<std::uint64_t> faces)
    : nvertices_(n), faces_(std::move(faces)) {
    if (n > 64) throw CapExceeded("simplicial complexes are limited to 64 vertices");
    std::sort(faces_.begin(), faces_.end(), face_less);
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t nvertices,
                                                 const std::vector<std::vector<std::size_t>>& facets,
                                                 std::size_t max_faces) {
    std::vector<std::uint64_t> faces;
    std::unordered_map<std::uint64_t, bool> seen;
    for (const auto& facet : facets) {
        std::uint64_t mask = 0;
        for (auto v : facet) {
            if (v >= nvertices || v >= 64) throw BadParams("facet vertex out of range");
            mask |= std::uint64_t{1} << v;
        }
        if (std::popcount(mask) > 30) throw CapExceeded("facet too large to expand");
        // Enumerate all submasks of the facet.
        for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
            if (seen.emplace(sub, true).second) {
                faces.push_back(sub);
                if (faces.size() > max_faces) throw CapExceeded("face count exceeds cap");
            }
            if (sub == 0) break;
        }
    }
    return SimplicialComplex(nvertices, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t nvertices, std::vector<std::uint64_t> faces) {
    SimplicialComplex c(nvertices, std::move(faces));
    const std::uint64_t allowed = nvertices >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nvertices) - 1;
    std::unordered_map<std::uint64_t, bool> present;
    for (auto f : c.faces_) {
        if (f & ~allowed) throw BadParams("face uses a vertex out of range");
        present.emplace(f, true);
    }
    for (auto f : c.faces_)
        for (std::uint64_t rest = f; rest; rest &= rest - 1)
            if (!present.count(f & ~(rest & -rest))) throw BadParams("face list is not closed under subsets");
    return c;
}

int SimplicialComplex::dimension() const noexcept {
    if (faces_.empty()) return -2;
    return std::popcount(faces_.back()) - 1;
}

std::vector<std::int64_t> reduced_homology(const SimplicialComplex& C, const PrimeField& F, std::size_t max_faces) {
    if (C.face_count() > max_faces) throw CapExceeded("face count exceeds cap");
    if (C.is_void()) return {};
    GradedBasis basis;
    for (auto f : C.faces()) basis.add(f);
    const std::size_t top = basis.by_size.size();  // sizes 0..top-1
    std::vector<std::size_t> ranks(top + 1, 0);    // ranks[k] = rank of boundary out of size k
    for (std::size_t k = 1; k < top; ++k) ranks[k] = rank(basis.boundary(k, F), F);
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < top; ++k)
        out.push_back(static_cast<std::int64_t>(basis.count(k) - ranks[k] - ranks[k + 1]));
    return out;
}

// ---------------------------------------------------------------------------
// Taylor complex

BettiTable taylor_betti(const MonomialIdeal& I, const PrimeField& F, const TaylorOptions& opts, TaylorStats* stats) {
    BettiTable table(Exactness::Exact);
    if (I.is_zero()) return table;
    const auto& gens = I.generators();
    const std::size_t m = gens.size();
    if (m > opts.max_generators || m > 30)
        throw CapExceeded("Taylor complex on " + std::to_string(m) + " generators exceeds the cap of " +
                          std::to_string(opts.max_generators));

    const std::uint64_t total = std::uint64_t{1} << m;
    std::vector<Monomial> lcms(total);
    lcms[0] = Monomial(I.nvars());
    std::map<Monomial, GradedBasis> strands;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        lcms[mask] = lcm(lcms[mask & (mask - 1)], gens[static_cast<std::size_t>(std::countr_zero(mask))]);
        strands[lcms[mask]].add(mask);
    }
    lcms.clear();
    lcms.shrink_to_fit();

    TaylorStats local;
    for (const auto& [b, basis] : strands) {
        ++local.strands;
        std::size_t size = 0;
        for (const auto& bucket : basis.by_size) size += bucket.size();
        local.largest_strand = std::max(local.largest_strand, size);

        const std::size_t top = basis.by_size.size();
        std::vector<DenseMatrix> d(top + 1);
        std::vector<std::size_t> ranks(top + 1, 0);
        // Position 0 (the empty set) is never in a strand, so boundary out of size 1 is zero.
        for (std::size_t k = 2; k < top; ++k) {
            d[k] = basis.boundary(k, F);
            ranks[k] = rank(d[k], F);
        }
        if (opts.check_d_squared)
            for (std::size_t k = 3; k < top; ++k) {
                if (d[k - 1].cols() == 0 || d[k].cols() == 0) continue;
                ++local.d_squared_checks;
                if (!multiply(d[k - 1], d[k], F).is_zero())
                    throw MathError("Taylor differential does not square to zero");
            }
        const int j = static_cast<int>(b.degree());
        for (std::size_t k = 1; k < top; ++k) {
            const auto h = static_cast<std::int64_t>(basis.count(k) - ranks[k] - ranks[k + 1]);
            if (h != 0) table.add(static_cast<int>(k) - 1, j, h);
        }
    }
    if (stats) *stats = local;
    return table;
}

// ---------------------------------------------------------------------------
// Edge semigroup

SemigroupTable::SemigroupTable(const SimpleGraph& G, int d_max, std::size_t max_elements) {
    if (d_max < 0) throw BadParams("degree bound must be nonnegative");
    for (const auto& e : G.edges()) {
        Vec v(G.vertex_count(), 0);
        v[e.u] = 1;
        v[e.v] = 1;
        edges_.push_back(std::move(v));
    }
    layers_.push_back({Vec(G.vertex_count(), 0)});
    std::size_t total = 1;
    for (int d = 1; d <= d_max; ++d) {
        std::set<Vec> next;
        for (const auto& a : layers_.back())
            for (const auto& e : edges_) {
                Vec b = a;
                for (std::size_t i = 0; i < b.size(); ++i) b[i] = static_cast<std::uint16_t>(b[i] + e[i]);
                next.insert(std::move(b));
            }
        total += next.size();
        if (total > max_elements)
            throw CapExceeded("edge semigroup enumeration exceeds " + std::to_string(max_elements) + " elements");
        layers_.push_back(std::move(next));
    }
}

bool SemigroupTable::contains(const Vec& a, int d) const {
    if (d < 0 || d > max_degree()) return false;
    return layers_[static_cast<std::size_t>(d)].count(a) > 0;
}

BettiTable toric_betti(const SimpleGraph& G, int j_max, const PrimeField& F, const ToricCaps& caps) {
    if (G.edge_count() > 64) throw CapExceeded("toric oracle supports at most 64 edges");
    const SemigroupTable table(G, j_max, caps.max_elements);
    const auto& E = table.edge_vectors();
    BettiTable out(Exactness::Exact);

    for (int j = 1; j <= j_max; ++j) {
        for (const auto& a : table.layer(j)) {
            // Delta_a is closed under subsets, so every face is reached by adding edges in increasing order.
            std::vector<std::uint64_t> faces;
            std::vector<std::pair<std::uint64_t, SemigroupTable::Vec>> stack{{0, a}};
            while (!stack.empty()) {
                auto [face, residual] = std::move(stack.back());
                stack.pop_back();
                faces.push_back(face);
                if (faces.size() > caps.max_faces) throw CapExceeded("squarefree divisor complex too large");
                const int size = std::popcount(face);
                const std::size_t first = face == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(face));
                for (std::size_t e = first; e < E.size(); ++e) {
                    SemigroupTable::Vec r = residual;
                    bool ok = true;
                    for (std::size_t i = 0; i < r.size() && ok; ++i) {
                        if (r[i] < E[e][i]) ok = false;
                        else r[i] = static_cast<std::uint16_t>(r[i] - E[e][i]);
                    }
                    if (ok && table.contains(r, j - size - 1)) stack.emplace_back(face | (std::uint64_t{1} << e), std::move(r));
                }
            }
            const auto h = reduced_homology(SimplicialComplex::from_faces(E.size(), std::move(faces)), F, caps.max_faces);
            for (std::size_t k = 1; k < h.size(); ++k)
                if (h[k] != 0) out.add(static_cast<int>(k) - 1, j, h[k]);
        }
    }
    return out;
}

std::vector<std::int64_t> edge_ring_hilbert(const SimpleGraph& G, int d_max, std::size_t max_elements) {
    const SemigroupTable table(G, d_max, max_elements);
    std::vector<std::int64_t> out;
    for (int d = 0; d <= d_max; ++d) out.push_back(static_cast<std::int64_t>(table.layer(d).size()));
    return out;
}

}  // namespace regquot
