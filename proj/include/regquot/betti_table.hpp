#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "regquot/polynomial.hpp"

namespace regquot {

enum class Exactness { Exact, UpperBound };

/// Sparse graded Betti table (i, j) -> beta_{i,j} of an ideal. Zero entries
/// are never stored.
class BettiTable {
public:
    using Key = std::pair<int, int>;

    BettiTable() = default;
    explicit BettiTable(Exactness e) : exactness_(e) {}

    Exactness exactness() const noexcept { return exactness_; }
    void set_exactness(Exactness e) noexcept { exactness_ = e; }

    std::int64_t at(int i, int j) const;
    void set(int i, int j, std::int64_t value);
    void add(int i, int j, std::int64_t value);

    bool empty() const noexcept { return entries_.empty(); }
    const std::map<Key, std::int64_t>& entries() const noexcept { return entries_; }

    /// max{j - i}; nullopt for the empty table.
    std::optional<int> regularity() const;
    /// max{i}; nullopt for the empty table.
    std::optional<int> projective_dimension() const;
    /// max{j}; nullopt for the empty table.
    std::optional<int> max_degree() const;
    /// Nonzero positions with nothing weakly south-east in (i, j - i) coordinates.
    std::map<Key, std::int64_t> extremal_entries() const;

    /// sum_{i,j} (-1)^i beta_{i,j} t^j.
    Polynomial euler_polynomial() const;

    /// Entrywise equality, ignoring the exactness flag.
    bool same_entries(const BettiTable& other) const { return entries_ == other.entries_; }
    /// Entrywise this >= other.
    bool dominates(const BettiTable& other) const;

private:
    std::map<Key, std::int64_t> entries_;
    Exactness exactness_ = Exactness::Exact;
};

/// Macaulay2-style grid: columns i, rows j - i, '.' for zero, plus a total row.
std::string render_grid(const BettiTable& t);
/// One "beta[i,j] = v" line per nonzero entry.
std::string render_sparse(const BettiTable& t);

}  // namespace regquot
