#include "regquot/betti_table.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <vector>

#include "regquot/checked.hpp"

namespace regquot {

std::int64_t BettiTable::at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, std::int64_t value) {
    if (i < 0) throw BadParams("negative homological index");
    if (value < 0) throw BadParams("negative Betti number");
    if (value == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = value;
}

void BettiTable::add(int i, int j, std::int64_t value) { set(i, j, checked_add(at(i, j), value)); }

std::optional<int> BettiTable::regularity() const {
    std::optional<int> r;
    for (const auto& [k, v] : entries_) r = std::max(r.value_or(k.second - k.first), k.second - k.first);
    return r;
}

std::optional<int> BettiTable::projective_dimension() const {
    std::optional<int> p;
    for (const auto& [k, v] : entries_) p = std::max(p.value_or(k.first), k.first);
    return p;
}

std::optional<int> BettiTable::max_degree() const {
    std::optional<int> d;
    for (const auto& [k, v] : entries_) d = std::max(d.value_or(k.second), k.second);
    return d;
}

std::map<BettiTable::Key, std::int64_t> BettiTable::extremal_entries() const {
    std::map<Key, std::int64_t> out;
    for (const auto& [k, v] : entries_) {
        const int row = k.second - k.first;
        bool dominated = false;
        for (const auto& [k2, v2] : entries_) {
            if (k2 == k) continue;
            if (k2.first >= k.first && k2.second - k2.first >= row) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.emplace(k, v);
    }
    return out;
}

Polynomial BettiTable::euler_polynomial() const {
    Polynomial p;
    for (const auto& [k, v] : entries_) p.add_term(k.first % 2 == 0 ? v : -v, k.second);
    return p;
}

bool BettiTable::dominates(const BettiTable& other) const {
    return std::all_of(other.entries_.begin(), other.entries_.end(),
                       [&](const auto& kv) { return at(kv.first.first, kv.first.second) >= kv.second; });
}

std::string render_grid(const BettiTable& t) {
    if (t.empty()) return "(zero ideal: empty Betti table)\n";
    const int pdim = *t.projective_dimension();
    int row_lo = INT32_MAX, row_hi = INT32_MIN;
    for (const auto& [k, v] : t.entries()) {
        row_lo = std::min(row_lo, k.second - k.first);
        row_hi = std::max(row_hi, k.second - k.first);
    }
    std::vector<std::int64_t> totals(pdim + 1, 0);
    for (const auto& [k, v] : t.entries()) totals[k.first] += v;

    std::size_t width = 1;
    for (auto v : totals) width = std::max(width, std::to_string(v).size());
    const std::size_t label = std::max<std::size_t>(6, std::to_string(row_hi).size() + 1);

    std::ostringstream os;
    os << std::string(label, ' ');
    for (int i = 0; i <= pdim; ++i) os << ' ' << std::setw(static_cast<int>(width)) << i;
    os << '\n' << std::setw(static_cast<int>(label)) << "total:";
    for (auto v : totals) os << ' ' << std::setw(static_cast<int>(width)) << v;
    os << '\n';
    for (int row = row_lo; row <= row_hi; ++row) {
        os << std::setw(static_cast<int>(label)) << (std::to_string(row) + ":");
        for (int i = 0; i <= pdim; ++i) {
            const auto v = t.at(i, i + row);
            os << ' ' << std::setw(static_cast<int>(width)) << (v == 0 ? std::string(".") : std::to_string(v));
        }
        os << '\n';
    }
    return os.str();
}

std::string render_sparse(const BettiTable& t) {
    std::ostringstream os;
    for (const auto& [k, v] : t.entries()) os << "beta[" << k.first << ',' << k.second << "] = " << v << '\n';
    return os.str();
}

}  // namespace regquot
