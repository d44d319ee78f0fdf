#include "regquot/random_corpus.hpp"

#include <algorithm>
#include <numeric>

#include "regquot/error.hpp"
#include "regquot/quotients.hpp"

namespace regquot {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Monomial permute_variables(const Monomial& m, const std::vector<std::size_t>& perm, std::size_t n) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t i = 0; i < m.nvars(); ++i) e[perm[i]] = m[i];
    return Monomial(std::move(e));
}

bool extends(const std::vector<Monomial>& gens) {
    try {
        build_certificate(gens);
        return true;
    } catch (const MathError&) {
        return false;
    }
}

}  // namespace

std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

CorpusEntry random_existence_entry(std::mt19937_64& rng, std::size_t max_vars, std::size_t max_gens) {
    if (max_vars < 3 || max_gens < 2) throw BadParams("corpus needs at least 3 variables and 2 generators");
    const int base = static_cast<int>(uniform(rng, 1, 2));
    std::size_t budget = max_vars - static_cast<std::size_t>(base);
    std::vector<int> steps;
    const std::size_t target = uniform(rng, 1, max_gens - 1);
    while (steps.size() < target && budget >= 2) {
        const int a = static_cast<int>(uniform(rng, 1, std::min<std::size_t>(3, budget / 2)));
        steps.push_back(a);
        budget -= 2 * static_cast<std::size_t>(a);
    }
    auto gens = existence_example(steps, base);
    const std::size_t n = gens.front().nvars();
    const auto perm = random_permutation(rng, n);
    for (auto& g : gens) g = permute_variables(g, perm, n);
    return {std::move(gens), "existence"};
}

CorpusEntry random_greedy_entry(std::mt19937_64& rng, std::size_t max_vars, std::size_t max_gens) {
    if (max_vars < 3 || max_gens < 2) throw BadParams("corpus needs at least 3 variables and 2 generators");
    const std::size_t n = uniform(rng, 3, max_vars);
    const std::size_t target = uniform(rng, 2, max_gens);
    const bool squarefree = uniform(rng, 0, 1) == 0;
    auto propose = [&] {
        std::vector<Exponent> e(n, 0);
        const std::size_t support = uniform(rng, 1, std::min<std::size_t>(n, 4));
        for (std::size_t s = 0; s < support; ++s) e[uniform(rng, 0, n - 1)] = squarefree ? 1 : static_cast<Exponent>(uniform(rng, 1, 2));
        return Monomial(std::move(e));
    };
    std::vector<Monomial> gens{propose()};
    for (int attempt = 0; attempt < 200 && gens.size() < target; ++attempt) {
        gens.push_back(propose());
        if (!extends(gens)) gens.pop_back();
    }
    return {std::move(gens), "greedy"};
}

std::vector<CorpusEntry> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_vars,
                                       std::size_t max_gens) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusEntry> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(i % 2 == 0 ? random_existence_entry(rng, max_vars, max_gens)
                                 : random_greedy_entry(rng, max_vars, max_gens));
    return out;
}

}  // namespace regquot
