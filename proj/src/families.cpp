#include "regquot/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "regquot/checked.hpp"
#include "regquot/error.hpp"

namespace regquot {

namespace {

void require_kind(const FamilySpec& spec, FamilyKind kind) {
    spec.validate();
    if (spec.kind != kind) throw BadParams("wrong family kind for " + spec.describe());
}

int sum_l(const FamilySpec& spec) { return std::accumulate(spec.l.begin(), spec.l.end(), 0); }

}  // namespace

BettiTable betti_B(const FamilySpec& spec) {
    require_kind(spec, FamilyKind::B);
    const int h = spec.h;
    const int l = spec.l[1];
    for (int j = 2; j <= h; ++j)
        if (spec.path_length(j) != l)
            throw UnsupportedShape("closed form needs l_2 = ... = l_h, got " + spec.describe());
    const int q = spec.l[0];
    BettiTable t(Exactness::Exact);
    if (q == l) {
        for (int i = 0; i <= h - 2; ++i) t.add(i, l * (i + 2), (i + 1) * binomial(h, i + 2));
        return t;
    }
    for (int i = 0; i <= h - 2; ++i) {
        t.add(i, l * (i + 2), (i + 1) * binomial(h - 1, i + 2));
        t.add(i, l * (i + 1) + q, (h - 1) * binomial(h - 2, i));
    }
    return t;
}

FamilyInvariants invariants_B(const FamilySpec& spec) {
    require_kind(spec, FamilyKind::B);
    FamilyInvariants inv;
    inv.pdim = spec.h - 2;
    inv.reg = sum_l(spec) - spec.h + 2;
    inv.h_poly_degree = sum_l(spec) - spec.h + 1;
    inv.extremal = {{spec.h - 2, sum_l(spec)}, spec.h - 1};
    inv.cohen_macaulay = true;
    inv.gorenstein = inv.complete_intersection = spec.h == 2;
    return inv;
}

std::vector<int> r_sequence_B(int h) {
    if (h < 2) throw BadParams("h must be at least 2");
    std::vector<int> out;
    for (int v = 1; v <= h - 2; ++v) out.insert(out.end(), static_cast<std::size_t>(v + 1), v);
    return out;
}

BettiTable betti_Bst(const FamilySpec& spec) {
    require_kind(spec, FamilyKind::Bst);
    const int h = spec.h, l = spec.l.front();
    const int shift = spec.s + spec.t + 1;
    BettiTable t(Exactness::Exact);
    for (int i = 0; i <= 2 * h - 2; ++i) {
        t.add(i, l * (i + 2), (i + 1) * binomial(h, i + 2));
        t.add(i, l * (i + 2) + shift, binomial(2 * h, i + 2) - (i + 3) * binomial(h, i + 2));
    }
    return t;
}

FamilyInvariants invariants_Bst(const FamilySpec& spec) {
    require_kind(spec, FamilyKind::Bst);
    const int h = spec.h, l = spec.l.front(), s = spec.s, t = spec.t;
    FamilyInvariants inv;
    inv.pdim = 2 * h - 2;
    inv.reg = 2 * l * h + s + t - 2 * h + 3;
    inv.h_poly_degree = (2 * l - 1) * h + s + t + 1;
    inv.extremal = {{2 * h - 2, 2 * l * h + s + t + 1}, 1};
    // Height of I_G is h while pdim R/I_G = 2h - 1.
    inv.cohen_macaulay = false;
    inv.gorenstein = inv.complete_intersection = false;
    return inv;
}

BstRSequence r_sequence_Bst(int h) {
    BstRSequence out;
    out.prefix = r_sequence_B(h);
    for (int p = h - 1; p <= 2 * h - 2; ++p) out.tail_counts[p] = 2 * h - p - 1;
    return out;
}

BettiTable betti_family(const FamilySpec& spec) {
    return spec.kind == FamilyKind::B ? betti_B(spec) : betti_Bst(spec);
}

FamilyInvariants invariants_family(const FamilySpec& spec) {
    return spec.kind == FamilyKind::B ? invariants_B(spec) : invariants_Bst(spec);
}

QuotientCertificate family_certificate(const FamilySpec& spec) {
    const FamilyInitialIdeal fi = family_initial_ideal(spec);
    return build_certificate(fi.ideal, fi.canonical_order);
}

BridgeReport check_bridge_B_Bst(const FamilySpec& spec) {
    require_kind(spec, FamilyKind::Bst);
    BridgeReport rep;
    const int h = spec.h, l = spec.l.front();
    const FamilyInitialIdeal fi = family_initial_ideal(spec);

    std::optional<QuotientCertificate> cert;
    try {
        cert = build_certificate(fi.ideal, fi.canonical_order);
        rep.certificate_uniform = cert->uniform_a == l;
        if (!rep.certificate_uniform) rep.notes.push_back("colon generators are not all of degree l");
    } catch (const MathError& e) {
        rep.notes.push_back(std::string("certificate failed: ") + e.what());
    }

    const std::size_t low = static_cast<std::size_t>(h * (h - 1) / 2);
    const int d_low = 2 * l, d_high = 2 * l + spec.s + spec.t + 1;
    const auto gens = fi.canonical_generators();
    bool blocks = gens.size() == static_cast<std::size_t>(h * h);
    for (std::size_t k = 0; k < gens.size() && blocks; ++k)
        blocks = gens[k].degree() == (k < low ? d_low : d_high);
    if (!blocks) rep.notes.push_back("generator degrees do not split into the two expected blocks");

    // B_{l,h} must sit inside as an induced subgraph, and the low-degree block
    // must be its initial ideal under the restricted order.
    const SimpleGraph B = build_B(std::vector<int>(static_cast<std::size_t>(h), l));
    const SimpleGraph induced = fi.graph.induced_subgraph(B.vertices());
    bool induced_ok = induced.edge_count() == B.edge_count();
    for (const auto& e : B.edges()) {
        if (!induced_ok) break;
        const Edge& f = induced.edge(induced.edge_index(e.label));
        induced_ok = std::minmax(f.u, f.v) == std::minmax(e.u, e.v);
    }
    if (!induced_ok) rep.notes.push_back("B_{l,h} is not the induced subgraph on its vertices");

    bool prefix_ok = false;
    if (induced_ok && blocks) {
        const MonomialOrder big = family_order(spec);
        std::vector<std::size_t> ranking;
        for (auto v : big.ranking()) {
            const auto& label = fi.graph.edge(v).label;
            if (label.front() == 'e') ranking.push_back(B.edge_index(label));
        }
        const MonomialOrder restricted(OrderKind::GradedRevLex, ranking);
        std::vector<WalkBinomial> bins;
        for (const auto& w : primitive_walks_B(FamilySpec::B(std::vector<int>(static_cast<std::size_t>(h), l))))
            bins.push_back(walk_binomial(B, w));
        const MonomialIdeal inB = initial_ideal(bins, restricted);

        std::set<Monomial> expected, prefix;
        for (const auto& m : inB.generators()) {
            std::vector<std::size_t> idx;
            for (std::size_t v = 0; v < m.nvars(); ++v)
                for (Exponent p = 0; p < m[v]; ++p) idx.push_back(fi.graph.edge_index(B.edge(v).label));
            expected.insert(Monomial::from_indices(fi.graph.edge_count(), idx));
        }
        prefix.insert(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(low));
        prefix_ok = prefix == expected;
        if (!prefix_ok) rep.notes.push_back("low-degree block differs from the initial ideal of B_{l,h}");
    }
    rep.degree_blocks = blocks && induced_ok && prefix_ok;

    rep.distance_literal = rep.distance_reverse = true;
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t m = k + 1; m < gens.size(); ++m) {
            const auto diff = gens[k].degree() - gens[m].degree();
            if (diff == l) rep.distance_literal = false;
            if (-diff == l) rep.distance_reverse = false;
        }
    if (!rep.distance_literal) rep.notes.push_back("some d_k - d_l equals l with k < l");
    if (!rep.distance_reverse) rep.notes.push_back("s + t + 1 equals l: d_l - d_k = l for some k < l");
    return rep;
}

FamilySpec construct_bipartite_with(int p, int r) {
    if (p < 0 || r < 2) throw BadParams("need p >= 0 and r >= 2");
    std::vector<int> l(static_cast<std::size_t>(p + 2), 1);
    l.back() = r - 1;
    return FamilySpec::B(std::move(l));
}

Polynomial h_polynomial(const Polynomial& ideal_numerator, int codim) {
    Polynomial q = Polynomial::one() - ideal_numerator;
    for (int c = 0; c < codim; ++c) {
        if (q.evaluate_at_one() != 0)
            throw MathError("Hilbert numerator is not divisible by (1 - t)^" + std::to_string(codim));
        q = q.divide_by_one_minus_t();
    }
    return q;
}

}  // namespace regquot
