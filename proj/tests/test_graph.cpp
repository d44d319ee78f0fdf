#include <doctest.h>

#include <algorithm>
#include <set>

#include "regquot/error.hpp"
#include "regquot/graph.hpp"

using namespace regquot;

namespace {

std::set<ClosedWalk> canonical_set(const std::vector<ClosedWalk>& walks) {
    std::set<ClosedWalk> s;
    for (const auto& w : walks) s.insert(canonical_form(w));
    return s;
}

Monomial product(const SimpleGraph& G, std::initializer_list<std::string> labels) {
    std::vector<std::size_t> idx;
    for (const auto& l : labels) idx.push_back(G.edge_index(l));
    return Monomial::from_indices(G.edge_count(), idx);
}

}  // namespace

TEST_CASE("simple graph validation") {
    CHECK_THROWS_AS(SimpleGraph({"a"}, {{"loop", 0, 0}}), BadParams);
    CHECK_THROWS_AS(SimpleGraph({"a", "b"}, {{"x", 0, 1}, {"y", 1, 0}}), BadParams);
    CHECK_THROWS_AS(SimpleGraph({"a", "b", "c"}, {{"x", 0, 1}, {"x", 1, 2}}), BadParams);
    CHECK_THROWS_AS(SimpleGraph({"a", "a"}, {}), BadParams);
    CHECK_THROWS_AS(SimpleGraph({"a", "b"}, {{"x", 0, 5}}), BadParams);
}

TEST_CASE("path family graphs") {
    SUBCASE("4-cycle") {
        const auto G = build_B({1, 1});
        CHECK(G.edge_count() == 4);
        CHECK(G.vertex_count() == 4);
        for (const auto& l : {"e(1,1)", "e(2,1)", "e(1,2)", "e(2,2)"}) CHECK_NOTHROW(G.edge_index(l));
        CHECK(G.is_bipartite());
        CHECK(G.edge_ring_dimension() == 3);
    }
    SUBCASE("K_{2,3}") {
        const auto G = build_B({1, 1, 1});
        CHECK(G.edge_count() == 6);
        CHECK(G.vertex_count() == 5);
        std::vector<int> degree(G.vertex_count(), 0);
        for (const auto& e : G.edges()) ++degree[e.u], ++degree[e.v];
        std::sort(degree.begin(), degree.end());
        CHECK(degree == std::vector<int>{2, 2, 2, 3, 3});
    }
    SUBCASE("vertex count") {
        const auto G = build_B({2, 1, 3});
        CHECK(G.vertex_count() == 2 + 3 + 1 + 5);
        CHECK(G.edge_count() == 12);
    }
    SUBCASE("odd cycles attached") {
        for (auto [l, h, s, t] : {std::array{1, 2, 1, 1}, std::array{2, 3, 1, 2}, std::array{1, 4, 2, 1}}) {
            const auto G = build_Bst(l, h, s, t);
            CHECK(G.edge_count() == static_cast<std::size_t>(2 * l * h + 2 * s + 2 * t + 2));
            CHECK(G.vertex_count() == static_cast<std::size_t>(2 * l * h + 2 * s + 2 * t - h + 2));
            CHECK_FALSE(G.is_bipartite());
            CHECK(G.edge_ring_dimension() == G.vertex_count());
        }
    }
    SUBCASE("bad parameters") {
        CHECK_THROWS_AS(build_B({1}), BadParams);
        CHECK_THROWS_AS(build_B({1, 0}), BadParams);
        CHECK_THROWS_AS(build_Bst(1, 2, 0, 1), BadParams);
    }
    SUBCASE("induced subgraph") {
        const auto G = build_Bst(1, 2, 1, 1);
        const auto B = build_B({1, 1});
        const auto H = G.induced_subgraph(B.vertices());
        CHECK(H.edge_count() == B.edge_count());
    }
}

TEST_CASE("even cycles") {
    CHECK(even_cycles(build_B({1, 1})).size() == 1);
    CHECK(even_cycles(build_B({1, 1, 1})).size() == 3);
    CHECK_THROWS_AS(even_cycles(build_Bst(1, 2, 1, 1)), NotBipartite);
    CHECK_THROWS_AS(even_cycles(build_B({1, 1, 1, 1, 1}), 5), CapExceeded);
    for (const auto& l : {std::vector<int>{1, 1, 1}, std::vector<int>{2, 1, 2}, std::vector<int>{1, 2, 1, 2},
                          std::vector<int>{2, 2, 2, 2}}) {
        const auto spec = FamilySpec::B(l);
        const auto G = build_family(spec);
        CHECK(canonical_set(even_cycles(G)) == canonical_set(primitive_walks_B(spec)));
    }
}

TEST_CASE("primitive walks") {
    SUBCASE("B counts and lengths") {
        CHECK(primitive_walks_B(FamilySpec::B({1, 1})).size() == 1);
        const auto spec = FamilySpec::B({1, 2, 3, 1});
        const auto walks = primitive_walks_B(spec);
        CHECK(walks.size() == 6);
        const auto G = build_family(spec);
        std::size_t k = 0;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j, ++k) {
                CHECK(walks[k].length() == static_cast<std::size_t>(2 * (spec.l[i - 1] + spec.l[j - 1])));
                CHECK(is_closed_walk(G, walks[k]));
            }
    }
    SUBCASE("Bst counts") {
        const auto w2 = primitive_walks_Bst(FamilySpec::Bst(1, 2, 1, 1));
        CHECK(w2.w1.size() == 1);
        CHECK(w2.w2.size() == 1);
        CHECK(w2.w3.size() == 2);
        CHECK(primitive_walks_Bst(FamilySpec::Bst(2, 3, 1, 2)).all().size() == 9);
    }
    SUBCASE("W3 walks use branch edges twice") {
        const auto spec = FamilySpec::Bst(1, 2, 1, 1);
        const auto G = build_family(spec);
        const auto b = walk_binomial(G, primitive_walks_Bst(spec).w3.front());
        CHECK(b.plus[G.edge_index(e_label(1, 1))] + b.minus[G.edge_index(e_label(1, 1))] == 2);
    }
}

TEST_CASE("walk binomials") {
    const auto G = build_B({1, 1});
    const auto w = primitive_walks_B(FamilySpec::B({1, 1})).front();
    const auto b = walk_binomial(G, w);
    CHECK(b.plus == product(G, {"e(1,1)", "e(2,2)"}));
    CHECK(b.minus == product(G, {"e(2,1)", "e(1,2)"}));
    CHECK(b.plus.degree() == static_cast<std::int64_t>(w.length() / 2));
    CHECK(to_string(b, G.edge_variables()) == "e(1,1)*e(2,2) - e(2,1)*e(1,2)");

    const SimpleGraph tri({"a", "b", "c"}, {{"x", 0, 1}, {"y", 1, 2}, {"z", 0, 2}});
    CHECK_THROWS_AS(walk_binomial(tri, ClosedWalk{{0, 1, 2}}), OddWalk);
    CHECK_THROWS_AS(walk_binomial(G, ClosedWalk{{0, 2}}), BadParams);
    // Going out and back along one edge gives a zero binomial.
    CHECK_THROWS_AS(walk_binomial(G, ClosedWalk{{0, 0}}), BadParams);
}

TEST_CASE("walk binomials agree with the path products") {
    for (const auto& spec : {FamilySpec::B({1, 1, 1}), FamilySpec::B({2, 1, 3, 1}), FamilySpec::B({2, 2, 2})}) {
        const auto G = build_family(spec);
        const auto walks = primitive_walks_B(spec);
        const auto expected = family_binomials(spec);
        REQUIRE(walks.size() == expected.size());
        for (std::size_t k = 0; k < walks.size(); ++k) CHECK(walk_binomial(G, walks[k]) == expected[k]);
    }
    for (const auto& spec : {FamilySpec::Bst(1, 2, 1, 1), FamilySpec::Bst(2, 3, 2, 1)}) {
        const auto G = build_family(spec);
        const auto walks = primitive_walks_Bst(spec).all();
        const auto expected = family_binomials(spec);
        REQUIRE(walks.size() == expected.size());
        // The odd-cycle walks start on the opposite parity, so they match up to sign.
        for (std::size_t k = 0; k < walks.size(); ++k) {
            const auto b = walk_binomial(G, walks[k]);
            CHECK((b == expected[k] || b.negated() == expected[k]));
        }
    }
}

TEST_CASE("family orders pick the expected leading terms") {
    for (const auto& spec : {FamilySpec::B({1, 1}), FamilySpec::B({1, 1, 1, 1}), FamilySpec::B({2, 1, 3}),
                             FamilySpec::B({3, 3, 3}), FamilySpec::Bst(1, 2, 1, 1), FamilySpec::Bst(1, 3, 1, 2),
                             FamilySpec::Bst(2, 3, 2, 1), FamilySpec::Bst(3, 2, 1, 1)}) {
        const auto order = family_order(spec);
        for (const auto& b : family_binomials(spec)) CHECK(order.compare(b.plus, b.minus) > 0);
    }
}

TEST_CASE("initial ideals of the families") {
    SUBCASE("4-cycle") {
        const auto fi = family_initial_ideal(FamilySpec::B({1, 1}));
        REQUIRE(fi.ideal.size() == 1);
        CHECK(fi.ideal.generators()[0] == product(fi.graph, {"e(1,1)", "e(2,2)"}));
    }
    SUBCASE("B generators are the u_{i,j} in canonical order") {
        const auto spec = FamilySpec::B({1, 1, 1});
        const auto fi = family_initial_ideal(spec);
        const auto G = fi.graph;
        const auto u = [&](int i, int j) {
            return product(G, {e_label(1, i).c_str(), e_label(2, j).c_str()});
        };
        CHECK(fi.canonical_generators() == std::vector<Monomial>{u(2, 3), u(1, 3), u(1, 2)});
    }
    SUBCASE("Bst has h^2 generators in three blocks") {
        const auto spec = FamilySpec::Bst(1, 3, 1, 1);
        const auto fi = family_initial_ideal(spec);
        CHECK(fi.ideal.size() == 9);
        const auto gens = fi.canonical_generators();
        for (std::size_t k = 0; k < 3; ++k) CHECK(gens[k].degree() == 2);
        for (std::size_t k = 3; k < 9; ++k) CHECK(gens[k].degree() == 5);
        // The last block squares the first odd-row edge of one path.
        CHECK(gens[8][fi.graph.edge_index(e_label(1, 1))] == 2);
    }
    SUBCASE("tie detection") {
        const WalkBinomial tie{Monomial{1, 0}, Monomial{1, 0}};
        CHECK_THROWS_AS(initial_ideal({tie}, MonomialOrder::lex(2)), TieUnresolved);
    }
}

TEST_CASE("family specs") {
    CHECK(FamilySpec::B({1, 2}).describe() == "B_{(1,2),2}");
    CHECK(FamilySpec::Bst(1, 2, 1, 3).describe() == "B^{1,3}_{1,2}");
    CHECK(FamilySpec::Bst(2, 3, 1, 1).path_length(3) == 2);
    CHECK_THROWS_AS(FamilySpec::B({1, 1}).path_length(3), BadParams);
}
