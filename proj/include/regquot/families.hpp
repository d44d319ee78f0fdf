#pragma once

// Closed forms for the Betti numbers and invariants of the path families
// B_{l,h} and B^{s,t}_{l,h}, and structural checks linking the families to
// their regular-quotient certificates.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regquot/betti_table.hpp"
#include "regquot/graph.hpp"
#include "regquot/polynomial.hpp"
#include "regquot/quotients.hpp"

namespace regquot {

struct FamilyInvariants {
    int pdim = 0;
    int reg = 0;
    int h_poly_degree = 0;
    std::optional<std::pair<std::pair<int, int>, std::int64_t>> extremal;  // ((i, j), value)
    bool cohen_macaulay = false;
    bool gorenstein = false;
    bool complete_intersection = false;
};

/// Needs l_2 = ... = l_h; throws UnsupportedShape otherwise.
BettiTable betti_B(const FamilySpec& spec);
FamilyInvariants invariants_B(const FamilySpec& spec);
/// (r_2, ..., r_m) of the canonical certificate: v repeated v + 1 times, v = 1..h-2.
std::vector<int> r_sequence_B(int h);

BettiTable betti_Bst(const FamilySpec& spec);
/// reg is j - i at the extremal position (2h-2, 2lh+s+t+1), i.e. 2lh+s+t-2h+3.
FamilyInvariants invariants_Bst(const FamilySpec& spec);

struct BstRSequence {
    std::vector<int> prefix;          // equals r_sequence_B(h)
    std::map<int, int> tail_counts;   // p -> 2h - p - 1 for p = h-1..2h-2
};
BstRSequence r_sequence_Bst(int h);

/// Dispatch on spec.kind.
BettiTable betti_family(const FamilySpec& spec);
FamilyInvariants invariants_family(const FamilySpec& spec);

struct BridgeReport {
    bool certificate_uniform = false;   // (1) regular quotients with a = l
    bool degree_blocks = false;         // (2) degree grouping and induced B prefix
    bool distance_literal = false;      // (3) d_k - d_l != l for k < l
    bool distance_reverse = false;      // (3') d_l - d_k != l for k < l
    std::vector<std::string> notes;

    bool all() const { return certificate_uniform && degree_blocks && distance_literal && distance_reverse; }
};

BridgeReport check_bridge_B_Bst(const FamilySpec& spec);

/// B spec with h = p + 2 and l = (1, ..., 1, r - 1): pdim p, reg r.
FamilySpec construct_bipartite_with(int p, int r);

/// Certificate of the family initial ideal in its canonical generator order.
QuotientCertificate family_certificate(const FamilySpec& spec);

/// Numerator of the Hilbert series of R/I written over (1 - t)^dim R/I,
/// from the Hilbert numerator N(t) of I over (1 - t)^n: (1 - N) / (1 - t)^(n - dim).
Polynomial h_polynomial(const Polynomial& ideal_numerator, int codim);

}  // namespace regquot
