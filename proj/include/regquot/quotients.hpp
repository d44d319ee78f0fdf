#pragma once

// Certificates that an ordered generating set has regular quotients, and
// the invariants that follow from one: Hilbert numerator, regularity and
// projective-dimension bounds, the mapping-cone Betti bound and the
// conditions under which that bound is exact.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "regquot/betti_table.hpp"
#include "regquot/monomial.hpp"
#include "regquot/polynomial.hpp"

namespace regquot {

/// The colon (f_1, ..., f_{k-1}) : f_k, generated by a regular sequence.
struct QuotientStep {
    std::size_t k = 0;  // 1-based position of f_k, k >= 2
    std::vector<Monomial> colon_gens;
    std::vector<int> degrees;  // deg(colon_gens[i])

    std::size_t length() const noexcept { return colon_gens.size(); }
    /// The common degree of the colon generators, if there is one.
    std::optional<int> uniform_degree() const;
};

struct QuotientCertificate {
    std::size_t nvars = 0;
    std::vector<Monomial> gens;      // f_1, ..., f_m in certificate order
    std::vector<std::size_t> order;  // gens[k] = source ideal generator order[k]
    std::vector<int> degrees;        // d_k
    std::vector<QuotientStep> steps; // k = 2..m
    std::optional<int> uniform_a;    // set when every colon generator has the same degree

    std::size_t size() const noexcept { return gens.size(); }
};

/// Computes and verifies every colon along `ordering`, a permutation of the
/// ideal's minimal generators given as indices into I.generators().
/// Throws NotMinimal for a bad ordering, NotRegularQuotients(k) at the first
/// colon that is not generated by a regular sequence.
QuotientCertificate build_certificate(const MonomialIdeal& I, std::span<const std::size_t> ordering);
/// Same, for an explicitly ordered generator list, which must already be
/// a minimal generating set.
QuotientCertificate build_certificate(std::span<const Monomial> ordered_gens);

/// t^{d_1} + sum_k (1 - t^{a_{k,1}}) ... (1 - t^{a_{k,r_k}}) t^{d_k}, the
/// numerator of HS(I, t) over (1 - t)^n.
Polynomial hilbert_numerator(const QuotientCertificate& c);

struct RegPdimBounds {
    int reg_bound = 0;   // Q(I)
    int pdim_bound = 0;  // P(I)
};

/// Q = max_k (d_k + a_{k,1} + ... + a_{k,r_k} - r_k), P = max_k r_k over
/// k >= 2. A single generator gives Q = d_1, P = 0.
RegPdimBounds reg_pdim_bounds(const QuotientCertificate& c);

struct ExtremalInfo {
    int pdim = 0;
    int reg = 0;
    int i = 0;  // = pdim
    int j = 0;  // = pdim + reg
    std::int64_t value = 0;
};

/// When P + Q equals the degree D of the Hilbert numerator both bounds are
/// attained and beta_{P, P+Q} = (-1)^P * [t^D] numerator is the unique
/// extremal Betti number. Otherwise nullopt.
std::optional<ExtremalInfo> extremal_check(const QuotientCertificate& c);

/// The (d_k, a_k, r_k) data of a certificate whose every step is generated
/// in a single degree, with the sentinel a_1 = r_1 = 0 at index 0.
struct StepProfile {
    std::vector<int> d;
    std::vector<int> a;
    std::vector<int> r;

    std::size_t size() const noexcept { return d.size(); }
    /// Throws MixedStepDegrees if some step mixes degrees.
    static StepProfile from_certificate(const QuotientCertificate& c);
};

/// beta_{i,j} <= sum over k with a_k i + d_k = j of C(r_k, i).
BettiTable betti_upper_bound(const StepProfile& p);
BettiTable betti_upper_bound(const QuotientCertificate& c);

struct ShiftCollision {
    int i = 0;
    std::size_t k = 0;  // 1-based
    std::size_t l = 0;  // 1-based

    bool operator==(const ShiftCollision&) const = default;
};

struct ShiftReport {
    bool holds = true;
    std::vector<ShiftCollision> violations;
};

/// Scans a_k i + d_k against a_l (i - 1) + d_l for 1 <= i <= max(r_2..r_k) + 1,
/// 2 <= k <= m, 1 <= l < k.
ShiftReport check_shift_collisions(const StepProfile& p);

struct DegreeConditions {
    bool uniform_gap = false;      // a_2 = ... = a_m and d_l - d_k != a for l < k
    bool monotone = false;      // a_k and d_k both nondecreasing
    bool principal_colons = false;  // every r_k = 1
};

DegreeConditions check_degree_conditions(const StepProfile& p);

/// The upper bound, flagged Exact, when there are no shift collisions, one
/// of the two degree conditions holds, or every colon is principal. Throws
/// NotProvenExact otherwise.
BettiTable betti_exact(const StepProfile& p);
BettiTable betti_exact(const QuotientCertificate& c);

struct Reordering {
    std::vector<std::size_t> sigma;  // 0-based: new position p holds old generator sigma[p]
    QuotientCertificate certificate;
};

/// Reorders an a-uniform certificate so that deg f_{sigma(i)} <= deg f_{sigma(i+1)} + a - 1
/// while keeping sigma(1) = 1 and every colon unchanged. Each out-of-place
/// generator is moved directly after the last earlier generator of degree
/// at most deg + a - 1.
Reordering reorder_by_degree(const QuotientCertificate& c);

/// Squarefree generators f_1..f_m with nondecreasing degrees whose k-th colon
/// is the single monomial of degree step_degrees[k-2]. Built inductively:
/// from g_1..g_{k-1}, take fresh u_1, u_2 of degree a_k and set
/// f_i = u_1 g_i, f_k = lcm(g_1..g_{k-1}) u_2. Variables are consumed in
/// order, so the result lives in base_degree + 2 * sum(step_degrees) variables.
std::vector<Monomial> existence_example(std::span<const int> step_degrees, int base_degree = 1);

}  // namespace regquot
