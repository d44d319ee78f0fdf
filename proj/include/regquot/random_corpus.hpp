#pragma once

// Seeded generators of monomial ideals with regular quotients, used by the
// property suites and the CLI selftest.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "regquot/monomial.hpp"

namespace regquot {

struct CorpusEntry {
    std::vector<Monomial> gens;  // an ordering with regular quotients
    std::string origin;          // "existence" or "greedy"
};

/// Existence construction with random step degrees and a random variable
/// relabeling; every colon is principal.
CorpusEntry random_existence_entry(std::mt19937_64& rng, std::size_t max_vars = 12, std::size_t max_gens = 8);

/// Grows a generator list one random monomial at a time, keeping only
/// proposals that preserve minimality and regular quotients.
CorpusEntry random_greedy_entry(std::mt19937_64& rng, std::size_t max_vars = 12, std::size_t max_gens = 8);

/// Alternates the two samplers.
std::vector<CorpusEntry> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_vars = 12,
                                       std::size_t max_gens = 8);

/// Uniformly random permutation of 0..n-1.
std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n);

}  // namespace regquot
