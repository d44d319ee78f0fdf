#pragma once

// Monomials as exponent vectors, monomial ideals as minimal generating
// sets, colon ideals and the two monomial orders used by the graph
// families.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace regquot {

using Exponent = std::uint32_t;

/// Display names of the ambient polynomial ring's variables.
class VariableTable {
public:
    VariableTable() = default;
    explicit VariableTable(std::vector<std::string> names);

    /// x1, ..., xn.
    static VariableTable numbered(std::size_t n, const std::string& prefix = "x");

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool operator==(const VariableTable&) const = default;

private:
    std::vector<std::string> names_;
};

class Monomial {
public:
    Monomial() = default;
    /// The monomial 1 in n variables.
    explicit Monomial(std::size_t n) : exps_(n, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

    /// The single variable x_i in n variables (0-based i).
    static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1);
    /// Product of the listed 0-based variable indices (repeats accumulate).
    static Monomial from_indices(std::size_t n, std::span<const std::size_t> indices);

    std::size_t nvars() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<Exponent>& exponents() const noexcept { return exps_; }

    /// Total degree; throws Overflow if it does not fit.
    std::int64_t degree() const;
    bool is_one() const noexcept;

    /// Set of 0-based variable indices with a positive exponent.
    std::vector<std::size_t> support() const;

    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    Monomial& operator*=(const Monomial& other);

    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    /// a / gcd(a, b).
    friend Monomial colon(const Monomial& a, const Monomial& b);

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<Exponent> exps_;
};

/// Renders e.g. x1^2*x3, or 1.
std::string to_string(const Monomial& m, const VariableTable& vars);
std::string to_string(const Monomial& m);

/// Minimally generated monomial ideal. The zero ideal is a distinct value
/// carrying an explicit flag rather than an empty generator list alone.
class MonomialIdeal {
public:
    /// Zero ideal in n variables.
    static MonomialIdeal zero(std::size_t nvars);

    std::size_t nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return zero_; }
    bool is_unit() const noexcept;
    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    bool operator==(const MonomialIdeal&) const = default;

    friend MonomialIdeal minimalize(std::span<const Monomial> gens, std::size_t nvars);

private:
    MonomialIdeal(std::vector<Monomial> gens, std::size_t nvars, bool zero)
        : gens_(std::move(gens)), nvars_(nvars), zero_(zero) {}

    std::vector<Monomial> gens_;
    std::size_t nvars_ = 0;
    bool zero_ = true;
};

/// Divisibility-minimal elements of gens, deduplicated, in first-seen order.
/// An empty input yields the zero ideal in nvars variables.
MonomialIdeal minimalize(std::span<const Monomial> gens, std::size_t nvars);
MonomialIdeal minimalize(std::span<const Monomial> gens);

/// (I : g), generated by f / gcd(f, g) over the generators f of I.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& g);

/// Monomials form a regular sequence iff their supports are pairwise
/// disjoint. The unit monomial or a repeated entry makes this false.
bool is_regular_sequence(std::span<const Monomial> mons);

bool ideal_contains(const MonomialIdeal& ideal, const Monomial& m);

/// Number of degree-d monomials of the ideal for d = 0..d_max, by
/// inclusion-exclusion over lcms of generator subsets.
std::vector<std::int64_t> ideal_hilbert_coeffs(const MonomialIdeal& ideal, int d_max,
                                               std::size_t max_generators = 20);

enum class OrderKind { PureLex, GradedRevLex };

class MonomialOrder {
public:
    /// ranking lists 0-based variable indices from highest to lowest.
    MonomialOrder(OrderKind kind, std::vector<std::size_t> ranking);

    static MonomialOrder lex(std::size_t n) { return {OrderKind::PureLex, identity(n)}; }
    static MonomialOrder grevlex(std::size_t n) { return {OrderKind::GradedRevLex, identity(n)}; }

    OrderKind kind() const noexcept { return kind_; }
    const std::vector<std::size_t>& ranking() const noexcept { return ranking_; }
    std::size_t nvars() const noexcept { return ranking_.size(); }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    /// True if variable a ranks above variable b.
    bool variable_greater(std::size_t a, std::size_t b) const;

    bool operator==(const MonomialOrder&) const = default;

private:
    static std::vector<std::size_t> identity(std::size_t n);

    OrderKind kind_;
    std::vector<std::size_t> ranking_;
    std::vector<std::size_t> position_;
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace regquot
