#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

#include "regquot/error.hpp"
#include "regquot/families.hpp"
#include "regquot/homology.hpp"
#include "regquot/quotients.hpp"
#include "regquot/random_corpus.hpp"

using namespace regquot;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2024;

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp) {
    std::uniform_int_distribution<int> e(0, max_exp);
    std::vector<Exponent> v(n);
    for (auto& x : v) x = static_cast<Exponent>(e(rng));
    return Monomial(std::move(v));
}

std::vector<Monomial> sorted(std::vector<Monomial> v) {
    std::sort(v.begin(), v.end());
    return v;
}

const std::vector<CorpusEntry>& corpus() {
    static const auto c = random_corpus(kSeed, 200);
    return c;
}

}  // namespace

TEST_CASE("colon ideals are sound and complete") {
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<std::size_t> nvars(1, 8), ngens(1, 4);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = nvars(rng);
        std::vector<Monomial> gens;
        for (std::size_t k = ngens(rng); k > 0; --k) gens.push_back(random_monomial(rng, n, 4));
        const auto I = minimalize(gens, n);
        const Monomial g = random_monomial(rng, n, 4);
        const auto J = colon(I, g);
        for (const auto& h : J.generators()) CHECK(ideal_contains(I, h * g));
        const Monomial m = random_monomial(rng, n, 4);
        CHECK(ideal_contains(J, m) == ideal_contains(I, m * g));
    }
}

TEST_CASE("minimalize is idempotent and order independent") {
    std::mt19937_64 rng(kSeed + 1);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 6;
        std::vector<Monomial> gens;
        for (int k = 0; k < 6; ++k) gens.push_back(random_monomial(rng, n, 3));
        const auto I = minimalize(gens, n);
        CHECK(minimalize(I.generators(), n) == I);
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(sorted(minimalize(gens, n).generators()) == sorted(I.generators()));
        for (const auto& a : I.generators())
            for (const auto& b : I.generators())
                if (!(a == b)) CHECK_FALSE(a.divides(b));
    }
}

TEST_CASE("monomial orders are total, transitive and multiplicative") {
    std::mt19937_64 rng(kSeed + 2);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 7;
        const auto ranking = random_permutation(rng, n);
        const MonomialOrder o(trial % 2 ? OrderKind::PureLex : OrderKind::GradedRevLex, ranking);
        const auto a = random_monomial(rng, n, 3), b = random_monomial(rng, n, 3), c = random_monomial(rng, n, 3);
        CHECK((o.compare(a, b) == 0) == (a == b));
        CHECK((o.compare(a, b) < 0) == (o.compare(b, a) > 0));
        if (o.compare(a, b) > 0 && o.compare(b, c) > 0) CHECK(o.compare(a, c) > 0);
        CHECK(o.compare(a * c, b * c) == o.compare(a, b));
        CHECK(o.compare(a * random_monomial(rng, n, 1), a) >= 0);
    }
}

TEST_CASE("regular sequences are permutation invariant") {
    std::mt19937_64 rng(kSeed + 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Monomial> seq;
        for (int k = 0; k < 3; ++k) seq.push_back(random_monomial(rng, 8, 1));
        const bool before = is_regular_sequence(seq);
        std::shuffle(seq.begin(), seq.end(), rng);
        CHECK(is_regular_sequence(seq) == before);
    }
}

TEST_CASE("certificates over a random corpus") {
    const PrimeField F;
    std::size_t exact_count = 0, extremal_count = 0;
    for (const auto& entry : corpus()) {
        CAPTURE(entry.origin);
        const auto c = build_certificate(entry.gens);
        const auto I = minimalize(entry.gens, c.nvars);
        TaylorStats stats;
        const auto oracle = taylor_betti(I, F, {}, &stats);

        CHECK(oracle.euler_polynomial() == hilbert_numerator(c));

        const auto b = reg_pdim_bounds(c);
        CHECK(oracle.regularity().value() <= b.reg_bound);
        CHECK(oracle.projective_dimension().value() <= b.pdim_bound);
        if (const auto e = extremal_check(c)) {
            ++extremal_count;
            CHECK(oracle.regularity() == b.reg_bound);
            CHECK(oracle.projective_dimension() == b.pdim_bound);
            CHECK(oracle.at(e->i, e->j) == e->value);
        }

        bool single_degree = true;
        for (const auto& s : c.steps) single_degree = single_degree && s.uniform_degree().has_value();
        if (!single_degree) continue;
        CHECK(betti_upper_bound(c).dominates(oracle));
        std::optional<BettiTable> exact;
        try {
            exact = betti_exact(c);
        } catch (const NotProvenExact&) {
        }
        if (!exact) continue;
        CHECK(exact->same_entries(oracle));
        ++exact_count;
    }
    // Both branches have to be exercised for the corpus to mean anything.
    CHECK(exact_count > 50);
    CHECK(extremal_count > 10);
}

TEST_CASE("reordering by degree keeps every colon") {
    std::size_t reordered = 0;
    for (const auto& entry : corpus()) {
        const auto c = build_certificate(entry.gens);
        if (!c.uniform_a || c.size() < 2) continue;
        const int a = *c.uniform_a;
        const auto r = reorder_by_degree(c);
        REQUIRE(r.sigma.size() == c.size());
        CHECK(r.sigma.front() == 0);
        auto perm = r.sigma;
        std::sort(perm.begin(), perm.end());
        for (std::size_t p = 0; p < perm.size(); ++p) CHECK(perm[p] == p);
        for (std::size_t p = 0; p + 1 < r.sigma.size(); ++p)
            CHECK(r.certificate.degrees[p] <= r.certificate.degrees[p + 1] + a - 1);
        for (std::size_t p = 1; p < r.sigma.size(); ++p) {
            const std::size_t old = r.sigma[p];
            const std::vector<Monomial> before(c.gens.begin(), c.gens.begin() + static_cast<std::ptrdiff_t>(old));
            const auto expected = colon(minimalize(before, c.nvars), c.gens[old]);
            CHECK(sorted(r.certificate.steps[p - 1].colon_gens) == sorted(expected.generators()));
        }
        if (!std::is_sorted(r.sigma.begin(), r.sigma.end())) ++reordered;
    }
    CHECK(reordered > 0);
}

TEST_CASE("Taylor oracle is invariant under generator permutations") {
    std::mt19937_64 rng(kSeed + 4);
    const PrimeField F;
    const auto& entries = corpus();
    for (std::size_t k = 0; k < 20; ++k) {
        const auto& gens = entries[k * 7].gens;
        const auto base = taylor_betti(minimalize(gens, gens.front().nvars()), F);
        for (int p = 0; p < 50; ++p) {
            const auto perm = random_permutation(rng, gens.size());
            std::vector<Monomial> shuffled;
            for (auto i : perm) shuffled.push_back(gens[i]);
            CHECK(taylor_betti(minimalize(shuffled, gens.front().nvars()), F, {18, false}).same_entries(base));
        }
    }
}

TEST_CASE("composed Taylor differentials vanish") {
    std::size_t checks = 0;
    for (const auto& entry : corpus()) {
        TaylorStats stats;
        CHECK_NOTHROW(taylor_betti(minimalize(entry.gens, entry.gens.front().nvars()), PrimeField(), {18, true}, &stats));
        checks += stats.d_squared_checks;
    }
    CHECK(checks > 100);
}

TEST_CASE("Betti numbers do not depend on the characteristic here") {
    for (std::size_t k = 0; k < 30; ++k) {
        const auto& gens = corpus()[k * 3].gens;
        const auto I = minimalize(gens, gens.front().nvars());
        const auto t = taylor_betti(I, PrimeField(32003));
        CHECK(taylor_betti(I, PrimeField(2)).same_entries(t));
        CHECK(taylor_betti(I, PrimeField(3)).same_entries(t));
    }
}

TEST_CASE("induced subgraphs have smaller Betti numbers") {
    for (int h = 3; h <= 6; ++h) {
        const auto small = betti_B(FamilySpec::B(std::vector<int>(static_cast<std::size_t>(h - 1), 1)));
        const auto big = betti_B(FamilySpec::B(std::vector<int>(static_cast<std::size_t>(h), 1)));
        CHECK(big.dominates(small));
    }
    for (int h = 3; h <= 4; ++h) {
        const auto G = build_B(std::vector<int>(static_cast<std::size_t>(h), 1));
        auto keep = build_B(std::vector<int>(static_cast<std::size_t>(h - 1), 1)).vertices();
        const auto H = G.induced_subgraph(keep);
        const int j_max = h + 1;
        CHECK(toric_betti(G, j_max).dominates(toric_betti(H, j_max)));
    }
}

TEST_CASE("closed forms agree with the certificates") {
    for (int h = 2; h <= 5; ++h) {
        for (const auto& l : {std::vector<int>(static_cast<std::size_t>(h), 1), std::vector<int>(static_cast<std::size_t>(h), 2)}) {
            const auto spec = FamilySpec::B(l);
            CHECK(betti_B(spec).same_entries(betti_exact(family_certificate(spec))));
        }
        for (int s = 1; s <= 2; ++s) {
            const auto spec = FamilySpec::Bst(1, h, s, 1);
            CAPTURE(spec.describe());
            CHECK(betti_Bst(spec).same_entries(betti_exact(family_certificate(spec))));
        }
    }
}
