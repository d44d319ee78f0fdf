#include <doctest.h>

#include "regquot/error.hpp"
#include "regquot/families.hpp"
#include "regquot/homology.hpp"

using namespace regquot;

namespace {

BettiTable table(std::initializer_list<std::tuple<int, int, std::int64_t>> entries) {
    BettiTable t;
    for (const auto& [i, j, v] : entries) t.set(i, j, v);
    return t;
}

BettiTable oracle(const FamilySpec& spec) { return taylor_betti(family_initial_ideal(spec).ideal); }

}  // namespace

TEST_CASE("path family Betti numbers") {
    SUBCASE("4-cycle is a hypersurface") {
        CHECK(betti_B(FamilySpec::B({1, 1})).same_entries(table({{0, 2, 1}})));
        CHECK(betti_B(FamilySpec::B({3, 2})).same_entries(table({{0, 5, 1}})));
    }
    SUBCASE("K_{2,3}") {
        CHECK(betti_B(FamilySpec::B({1, 1, 1})).same_entries(table({{0, 2, 3}, {1, 3, 2}})));
    }
    SUBCASE("first path longer than the rest") {
        const auto t = betti_B(FamilySpec::B({2, 1, 1}));
        CHECK(t.at(0, 2) == 1);
        CHECK(t.at(0, 3) == 2);
        CHECK(t.at(1, 4) == 2);
        CHECK(t.same_entries(oracle(FamilySpec::B({2, 1, 1}))));
    }
    SUBCASE("agreement with the Taylor oracle") {
        for (const auto& l : {std::vector<int>{1, 2, 2}, std::vector<int>{3, 1, 1, 1}, std::vector<int>{2, 2, 2, 2},
                              std::vector<int>{1, 1, 1, 1, 1}, std::vector<int>{1, 3, 3}}) {
            CAPTURE(l);
            CHECK(betti_B(FamilySpec::B(l)).same_entries(oracle(FamilySpec::B(l))));
        }
    }
    SUBCASE("unequal tails are unsupported") {
        CHECK_THROWS_AS(betti_B(FamilySpec::B({1, 1, 2})), UnsupportedShape);
    }
}

TEST_CASE("path family invariants") {
    const auto inv = invariants_B(FamilySpec::B({1, 1, 1, 3}));
    CHECK(inv.pdim == 2);
    CHECK(inv.reg == 4);
    CHECK(inv.h_poly_degree == 3);
    REQUIRE(inv.extremal.has_value());
    CHECK(inv.extremal->first == std::make_pair(2, 6));
    CHECK(inv.extremal->second == 3);
    CHECK(inv.cohen_macaulay);
    CHECK_FALSE(inv.gorenstein);

    const auto c4 = invariants_B(FamilySpec::B({1, 1}));
    CHECK(c4.gorenstein);
    CHECK(c4.complete_intersection);
    CHECK(c4.reg == 2);
    CHECK(c4.pdim == 0);
}

TEST_CASE("odd-cycle family Betti numbers") {
    SUBCASE("h = 2") {
        CHECK(betti_Bst(FamilySpec::Bst(1, 2, 1, 1))
                  .same_entries(table({{0, 2, 1}, {0, 5, 3}, {1, 6, 4}, {2, 7, 1}})));
    }
    SUBCASE("h = 3") {
        CHECK(betti_Bst(FamilySpec::Bst(1, 3, 1, 1))
                  .same_entries(table({{0, 2, 3}, {1, 3, 2}, {0, 5, 6}, {1, 6, 16}, {2, 7, 15}, {3, 8, 6}, {4, 9, 1}})));
    }
    SUBCASE("agreement with the Taylor oracle") {
        for (const auto& spec : {FamilySpec::Bst(2, 2, 1, 1), FamilySpec::Bst(1, 3, 1, 2), FamilySpec::Bst(1, 2, 3, 1),
                                 FamilySpec::Bst(2, 3, 2, 2)}) {
            CAPTURE(spec.describe());
            CHECK(betti_Bst(spec).same_entries(oracle(spec)));
        }
    }
}

TEST_CASE("odd-cycle family invariants") {
    const auto a = invariants_Bst(FamilySpec::Bst(1, 2, 1, 1));
    CHECK(a.pdim == 2);
    CHECK(a.reg == 5);
    CHECK(a.h_poly_degree == 5);
    REQUIRE(a.extremal.has_value());
    CHECK(a.extremal->first == std::make_pair(2, 7));
    CHECK(a.extremal->second == 1);
    CHECK_FALSE(a.cohen_macaulay);

    const auto b = invariants_Bst(FamilySpec::Bst(2, 3, 1, 2));
    CHECK(b.pdim == 4);
    CHECK(b.reg == 12);
    CHECK(b.h_poly_degree == 13);

    for (const auto& spec : {FamilySpec::Bst(1, 2, 1, 1), FamilySpec::Bst(2, 2, 1, 2), FamilySpec::Bst(1, 3, 2, 1)}) {
        const auto t = oracle(spec);
        const auto inv = invariants_Bst(spec);
        CHECK(t.regularity() == inv.reg);
        CHECK(t.projective_dimension() == inv.pdim);
    }
}

TEST_CASE("quotient-length sequences") {
    CHECK(r_sequence_B(2).empty());
    CHECK(r_sequence_B(4) == std::vector<int>{1, 1, 2, 2, 2});
    for (int h = 2; h <= 5; ++h) {
        const auto c = family_certificate(FamilySpec::B(std::vector<int>(static_cast<std::size_t>(h), 1)));
        std::vector<int> r;
        for (const auto& s : c.steps) r.push_back(static_cast<int>(s.length()));
        CHECK(r == r_sequence_B(h));
    }
    const auto bst = r_sequence_Bst(3);
    CHECK(bst.prefix == r_sequence_B(3));
    CHECK(bst.tail_counts == std::map<int, int>{{2, 3}, {3, 2}, {4, 1}});

    const auto c = family_certificate(FamilySpec::Bst(1, 3, 1, 1));
    std::vector<int> r;
    for (const auto& s : c.steps) r.push_back(static_cast<int>(s.length()));
    CHECK(r == std::vector<int>{1, 1, 2, 3, 2, 4, 3, 2});
}

TEST_CASE("bridge between the two families") {
    const auto ok = check_bridge_B_Bst(FamilySpec::Bst(1, 2, 1, 1));
    CHECK(ok.certificate_uniform);
    CHECK(ok.degree_blocks);
    CHECK(ok.all());
    // l = s + t + 1 puts the odd-cycle block exactly l above the path block.
    const auto flagged = check_bridge_B_Bst(FamilySpec::Bst(3, 2, 1, 1));
    CHECK_FALSE(flagged.all());
    CHECK(flagged.distance_literal);
    CHECK_FALSE(flagged.distance_reverse);
}

TEST_CASE("bipartite graphs with prescribed pdim and reg") {
    const auto spec = construct_bipartite_with(2, 5);
    CHECK(spec.h == 4);
    CHECK(spec.l == std::vector<int>{1, 1, 1, 4});
    const auto inv = invariants_B(spec);
    CHECK(inv.pdim == 2);
    CHECK(inv.reg == 5);
    for (auto [p, r] : {std::pair{0, 2}, std::pair{1, 3}, std::pair{3, 2}}) {
        const auto s = construct_bipartite_with(p, r);
        const auto t = oracle(s);
        CHECK(t.projective_dimension() == p);
        CHECK(t.regularity() == r);
    }
    CHECK_THROWS_AS(construct_bipartite_with(-1, 3), BadParams);
    CHECK_THROWS_AS(construct_bipartite_with(1, 1), BadParams);
}

TEST_CASE("h-polynomial") {
    // 4-cycle: N = t^2, codim 1, so h = 1 + t.
    CHECK(h_polynomial(Polynomial::term(1, 2), 1) == Polynomial::one() + Polynomial::term(1, 1));
    const auto spec = FamilySpec::B({1, 1, 1});
    const auto c = family_certificate(spec);
    const auto G = build_family(spec);
    const int codim = static_cast<int>(G.edge_count() - G.edge_ring_dimension());
    const auto h = h_polynomial(hilbert_numerator(c), codim);
    CHECK(h.degree() == invariants_B(spec).h_poly_degree);
    CHECK(series_coefficients(h, static_cast<std::int64_t>(G.edge_ring_dimension()), 4) == edge_ring_hilbert(G, 4));
}
