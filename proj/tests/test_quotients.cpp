#include <doctest.h>

#include "regquot/error.hpp"
#include "regquot/homology.hpp"
#include "regquot/quotients.hpp"

using namespace regquot;

namespace {

Monomial mono(std::size_t n, std::initializer_list<std::size_t> idx) {
    return Monomial::from_indices(n, std::vector<std::size_t>(idx));
}

// f1 = x1..x6, f2 = x1x2x3x4x7x8x9, f3 = x3x4x5x6x7, f4 = x5x6x7x8.
struct FourGenerators {
    std::vector<Monomial> f{mono(9, {0, 1, 2, 3, 4, 5}), mono(9, {0, 1, 2, 3, 6, 7, 8}), mono(9, {2, 3, 4, 5, 6}),
                            mono(9, {4, 5, 6, 7})};
    MonomialIdeal ideal() const { return minimalize(f, 9); }
    QuotientCertificate in_order(std::vector<std::size_t> order) const { return build_certificate(ideal(), order); }
};

BettiTable printed_table() {
    BettiTable t;
    for (int j : {4, 5, 6, 7}) t.set(0, j, 1);
    for (int j : {6, 7, 9}) t.set(1, j, 1);
    return t;
}

StepProfile profile(std::vector<int> d, std::vector<int> a, std::vector<int> r) {
    StepProfile p;
    p.d = std::move(d);
    p.a = std::move(a);
    p.r = std::move(r);
    return p;
}

}  // namespace

TEST_CASE("certificate in the given order has 2-regular quotients") {
    const FourGenerators ex;
    const auto c = ex.in_order({0, 1, 2, 3});
    REQUIRE(c.steps.size() == 3);
    CHECK(c.steps[0].colon_gens == std::vector<Monomial>{mono(9, {4, 5})});
    CHECK(c.steps[1].colon_gens == std::vector<Monomial>{mono(9, {0, 1})});
    CHECK(c.steps[2].colon_gens == std::vector<Monomial>{mono(9, {2, 3})});
    CHECK(c.uniform_a == 2);
    CHECK(c.degrees == std::vector<int>{6, 7, 5, 4});
}

TEST_CASE("order f4, f3, f1, f2 has quotients of degrees 1, 1, 2") {
    const FourGenerators ex;
    const auto c = ex.in_order({3, 2, 0, 1});
    REQUIRE(c.steps.size() == 3);
    std::vector<int> a, r;
    for (const auto& s : c.steps) {
        a.push_back(s.degrees.front());
        r.push_back(static_cast<int>(s.length()));
    }
    CHECK(a == std::vector<int>{1, 1, 2});
    CHECK(r == std::vector<int>{1, 1, 1});
    CHECK_FALSE(c.uniform_a.has_value());
}

TEST_CASE("certificate construction errors") {
    const FourGenerators ex;
    CHECK_THROWS_AS(ex.in_order({0, 1, 2}), NotMinimal);
    CHECK_THROWS_AS(ex.in_order({0, 0, 1, 2}), NotMinimal);
    const std::vector<Monomial> not_minimal{mono(3, {0}), mono(3, {0, 1})};
    CHECK_THROWS_AS(build_certificate(not_minimal), NotMinimal);
    // (x1x2, x1x3) : x4x5 = (x1x2, x1x3), whose generators share x1.
    const std::vector<Monomial> overlap{mono(5, {0, 1}), mono(5, {0, 2}), mono(5, {3, 4})};
    try {
        build_certificate(overlap);
        FAIL("expected NotRegularQuotients");
    } catch (const NotRegularQuotients& e) {
        CHECK(e.step() == 3);
    }
}

TEST_CASE("single generator") {
    const std::vector<Monomial> g{mono(3, {0, 1, 2})};
    const auto c = build_certificate(g);
    CHECK(c.steps.empty());
    CHECK(hilbert_numerator(c) == Polynomial::term(1, 3));
    const auto b = reg_pdim_bounds(c);
    CHECK(b.reg_bound == 3);
    CHECK(b.pdim_bound == 0);
    const auto e = extremal_check(c);
    REQUIRE(e.has_value());
    CHECK(e->i == 0);
    CHECK(e->j == 3);
    CHECK(e->value == 1);
    BettiTable one;
    one.set(0, 3, 1);
    CHECK(betti_exact(c).same_entries(one));
}

TEST_CASE("Hilbert numerator and bounds for order f1, f3, f4, f2") {
    const FourGenerators ex;
    const auto c = ex.in_order({0, 2, 3, 1});
    CHECK(c.degrees == std::vector<int>{6, 5, 4, 7});
    CHECK(to_string(hilbert_numerator(c)) == "t^4 + t^5 - t^9");
    const auto b = reg_pdim_bounds(c);
    CHECK(b.reg_bound == 8);
    CHECK(b.pdim_bound == 1);
    const auto e = extremal_check(c);
    REQUIRE(e.has_value());
    CHECK(e->i == 1);
    CHECK(e->j == 9);
    CHECK(e->value == 1);

    // The numerator matches a direct count of monomials in I.
    const auto direct = ideal_hilbert_coeffs(ex.ideal(), 12);
    CHECK(series_coefficients(hilbert_numerator(c), 9, 12) == direct);
}

TEST_CASE("bounds are not tight for the mixed orders f1, f4, f3, f2 and f4, f1, f3, f2") {
    const FourGenerators ex;
    for (const auto& order : {std::vector<std::size_t>{0, 3, 2, 1}, std::vector<std::size_t>{3, 0, 2, 1}}) {
        const auto c = ex.in_order(order);
        const auto b = reg_pdim_bounds(c);
        CHECK(b.pdim_bound == 2);
        CHECK(b.reg_bound == 8);
        CHECK_FALSE(extremal_check(c).has_value());
    }
}

TEST_CASE("exact Betti table of the four-generator example") {
    const FourGenerators ex;
    const auto c = ex.in_order({0, 2, 3, 1});
    const auto dc = check_degree_conditions(StepProfile::from_certificate(c));
    CHECK(dc.principal_colons);
    const BettiTable t = betti_exact(c);
    CHECK(t.exactness() == Exactness::Exact);
    CHECK(t.same_entries(printed_table()));
    CHECK(betti_upper_bound(c).exactness() == Exactness::UpperBound);
    CHECK(StepProfile::from_certificate(ex.in_order({3, 2, 0, 1})).a == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("upper bound from a step profile") {
    SUBCASE("Koszul step: r = 3, a = 1, d = (2, 3)") {
        const BettiTable t = betti_upper_bound(profile({2, 3}, {0, 1}, {0, 3}));
        BettiTable expected;
        expected.set(0, 2, 1);
        expected.set(0, 3, 1);
        expected.set(1, 4, 3);
        expected.set(2, 5, 3);
        expected.set(3, 6, 1);
        CHECK(t.same_entries(expected));
    }
    SUBCASE("odd-cycle family shape d = (2, 5, 5, 5), r = (0, 1, 2, 1)") {
        const BettiTable t = betti_upper_bound(profile({2, 5, 5, 5}, {0, 1, 1, 1}, {0, 1, 2, 1}));
        BettiTable expected;
        expected.set(0, 2, 1);
        expected.set(0, 5, 3);
        expected.set(1, 6, 4);
        expected.set(2, 7, 1);
        CHECK(t.same_entries(expected));
    }
    SUBCASE("mixed degrees inside a step are rejected") {
        // (x1, x2x3) : x4 = (x1, x2x3).
        const std::vector<Monomial> mixed{mono(5, {0}), mono(5, {1, 2}), mono(5, {3})};
        const auto c = build_certificate(mixed);
        CHECK(c.steps[1].degrees == std::vector<int>{1, 2});
        CHECK_THROWS_AS(betti_upper_bound(c), MixedStepDegrees);
    }
}

TEST_CASE("shift collisions") {
    CHECK(check_shift_collisions(profile({4, 4, 4}, {0, 2, 2}, {0, 1, 2})).holds);
    CHECK(check_shift_collisions(profile({1, 3}, {0, 2}, {0, 1})).holds);
    const auto rep = check_shift_collisions(profile({3, 1}, {0, 2}, {0, 1}));
    CHECK_FALSE(rep.holds);
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations.front() == ShiftCollision{1, 2, 1});
}

TEST_CASE("degree conditions") {
    const auto inc = check_degree_conditions(profile({1, 2, 3}, {0, 1, 1}, {0, 1, 1}));
    CHECK(inc.monotone);
    const auto flat = check_degree_conditions(profile({4, 4, 4}, {0, 2, 2}, {0, 1, 2}));
    CHECK(flat.uniform_gap);
    CHECK_FALSE(flat.principal_colons);
    const auto gap = check_degree_conditions(profile({6, 4}, {0, 2}, {0, 2}));
    CHECK_FALSE(gap.uniform_gap);
}

TEST_CASE("exactness is refused without a sufficient condition") {
    // d = (5, 3, 1), a = (-, 2, 3), r = (-, 2, 2): collides, not uniform, not monotone, not principal.
    const StepProfile p = profile({5, 3, 1}, {0, 2, 3}, {0, 2, 2});
    CHECK_FALSE(check_shift_collisions(p).holds);
    const auto dc = check_degree_conditions(p);
    CHECK_FALSE(dc.uniform_gap);
    CHECK_FALSE(dc.monotone);
    CHECK_FALSE(dc.principal_colons);
    CHECK_THROWS_AS(betti_exact(p), NotProvenExact);
}

TEST_CASE("reordering by degree") {
    const FourGenerators ex;
    SUBCASE("f1, f2, f3, f4 becomes f1, f3, f4, f2") {
        const auto r = reorder_by_degree(ex.in_order({0, 1, 2, 3}));
        CHECK(r.sigma == std::vector<std::size_t>{0, 2, 3, 1});
        CHECK(r.certificate.degrees == std::vector<int>{6, 5, 4, 7});
        CHECK(r.certificate.order == std::vector<std::size_t>{0, 2, 3, 1});
        CHECK(r.certificate.uniform_a == 2);
    }
    SUBCASE("nondecreasing degrees stay put") {
        const std::vector<int> steps{2, 2, 2};
        const auto c = build_certificate(existence_example(steps));
        const auto r = reorder_by_degree(c);
        CHECK(r.sigma == std::vector<std::size_t>{0, 1, 2, 3});
    }
    SUBCASE("mixed step degrees are rejected") {
        CHECK_THROWS_AS(reorder_by_degree(ex.in_order({3, 2, 0, 1})), MixedStepDegrees);
    }
}

TEST_CASE("existence construction") {
    const std::vector<int> steps{2, 1, 3};
    const auto gens = existence_example(steps, 2);
    REQUIRE(gens.size() == 4);
    CHECK(gens.front().nvars() == 2 + 2 * 6);
    const auto c = build_certificate(gens);
    for (std::size_t k = 0; k < c.steps.size(); ++k) {
        CHECK(c.steps[k].length() == 1);
        CHECK(c.steps[k].degrees.front() == steps[k]);
    }
    CHECK(std::is_sorted(c.degrees.begin(), c.degrees.end()));
    CHECK(betti_exact(c).same_entries(taylor_betti(minimalize(gens, gens.front().nvars()))));
    CHECK_THROWS_AS(existence_example(std::vector<int>{0}), BadParams);
}
