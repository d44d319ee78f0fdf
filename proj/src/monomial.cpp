#include "regquot/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "regquot/checked.hpp"
#include "regquot/error.hpp"

namespace regquot {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    // Exact at every step: r * (n - k + i) is divisible by i.
    __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > INT64_MAX) throw Overflow("binomial coefficient overflow");
    }
    return static_cast<std::int64_t>(r);
}

// ---------------------------------------------------------------------------
// VariableTable

VariableTable::VariableTable(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw BadParams("variable table must not be empty");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second) throw BadParams("duplicate variable name '" + n + "'");
}

VariableTable VariableTable::numbered(std::size_t n, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return VariableTable(std::move(names));
}

std::optional<std::size_t> VariableTable::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent power) {
    if (i >= n) throw BadParams("variable index out of range");
    Monomial m(n);
    m.exps_[i] = power;
    return m;
}

Monomial Monomial::from_indices(std::size_t n, std::span<const std::size_t> indices) {
    Monomial m(n);
    for (auto i : indices) {
        if (i >= n) throw BadParams("variable index out of range");
        m.exps_[i] = checked_add<Exponent>(m.exps_[i], 1);
    }
    return m;
}

std::int64_t Monomial::degree() const {
    std::int64_t d = 0;
    for (auto e : exps_) d = checked_add<std::int64_t>(d, e);
    return d;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) s.push_back(i);
    return s;
}

bool Monomial::divides(const Monomial& other) const {
    if (nvars() != other.nvars()) throw BadParams("monomials live in different rings");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out = *this;
    out *= other;
    return out;
}

Monomial& Monomial::operator*=(const Monomial& other) {
    if (nvars() != other.nvars()) throw BadParams("monomials live in different rings");
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] = checked_add(exps_[i], other.exps_[i]);
    return *this;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw BadParams("monomials live in different rings");
    Monomial out(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw BadParams("monomials live in different rings");
    Monomial out(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return out;
}

Monomial colon(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw BadParams("monomials live in different rings");
    Monomial out(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        out.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] - b.exps_[i] : 0;
    return out;
}

std::string to_string(const Monomial& m, const VariableTable& vars) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << (i < vars.size() ? vars.name(i) : "x" + std::to_string(i + 1));
        if (m[i] > 1) os << '^' << m[i];
    }
    return os.str();
}

std::string to_string(const Monomial& m) {
    return to_string(m, VariableTable::numbered(std::max<std::size_t>(m.nvars(), 1)));
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal MonomialIdeal::zero(std::size_t nvars) { return MonomialIdeal({}, nvars, true); }

bool MonomialIdeal::is_unit() const noexcept {
    return !zero_ && gens_.size() == 1 && gens_.front().is_one();
}

MonomialIdeal minimalize(std::span<const Monomial> gens, std::size_t nvars) {
    if (gens.empty()) return MonomialIdeal::zero(nvars);
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Monomial& g = gens[i];
        if (g.nvars() != nvars) throw BadParams("generator has the wrong number of variables");
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (j == i) continue;
            if (gens[j] == g)
                redundant = j < i;  // first occurrence wins
            else
                redundant = gens[j].divides(g);
        }
        if (!redundant) kept.push_back(g);
    }
    return MonomialIdeal(std::move(kept), nvars, false);
}

MonomialIdeal minimalize(std::span<const Monomial> gens) {
    if (gens.empty()) throw BadParams("cannot infer the ring of an empty generator list");
    return minimalize(gens, gens.front().nvars());
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& g) {
    if (ideal.is_zero()) throw BadParams("colon of the zero ideal");
    std::vector<Monomial> quotients;
    quotients.reserve(ideal.size());
    for (const auto& f : ideal.generators()) quotients.push_back(colon(f, g));
    return minimalize(quotients, ideal.nvars());
}

bool is_regular_sequence(std::span<const Monomial> mons) {
    if (mons.empty()) return true;
    std::vector<bool> used(mons.front().nvars(), false);
    for (const auto& m : mons) {
        if (m.is_one() || m.nvars() != used.size()) return false;
        for (auto i : m.support()) {
            if (used[i]) return false;
            used[i] = true;
        }
    }
    return true;
}

bool ideal_contains(const MonomialIdeal& ideal, const Monomial& m) {
    return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

std::vector<std::int64_t> ideal_hilbert_coeffs(const MonomialIdeal& ideal, int d_max,
                                               std::size_t max_generators) {
    if (d_max < 0) throw BadParams("negative degree bound");
    std::vector<std::int64_t> out(static_cast<std::size_t>(d_max) + 1, 0);
    if (ideal.is_zero()) return out;
    const std::size_t m = ideal.size();
    if (m > max_generators)
        throw CapExceeded("inclusion-exclusion over " + std::to_string(m) +
                          " generators exceeds the cap of " + std::to_string(max_generators));

    // Degrees of lcm(S) for every nonempty subset S, built from S minus its lowest bit.
    const std::size_t count = std::size_t{1} << m;
    std::vector<Monomial> lcms(count);
    std::vector<int> sign(count, 0);
    lcms[0] = Monomial(ideal.nvars());
    std::vector<std::int64_t> deg_count_pos, deg_count_neg;
    for (std::size_t mask = 1; mask < count; ++mask) {
        const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
        lcms[mask] = lcm(lcms[mask & (mask - 1)], ideal.generators()[low]);
        const std::int64_t deg = lcms[mask].degree();
        auto& bucket = (__builtin_popcountll(mask) % 2 == 1) ? deg_count_pos : deg_count_neg;
        if (static_cast<std::size_t>(deg) >= bucket.size()) bucket.resize(deg + 1, 0);
        ++bucket[deg];
    }
    const auto n = static_cast<std::int64_t>(ideal.nvars());
    for (int d = 0; d <= d_max; ++d) {
        __int128 total = 0;
        auto accumulate = [&](const std::vector<std::int64_t>& bucket, int s) {
            for (std::size_t deg = 0; deg < bucket.size() && static_cast<int>(deg) <= d; ++deg)
                if (bucket[deg] != 0)
                    total += static_cast<__int128>(s) * bucket[deg] *
                             binomial(n - 1 + d - static_cast<std::int64_t>(deg), n - 1);
        };
        accumulate(deg_count_pos, 1);
        accumulate(deg_count_neg, -1);
        if (total > INT64_MAX || total < INT64_MIN) throw Overflow("Hilbert coefficient overflow");
        out[d] = static_cast<std::int64_t>(total);
    }
    return out;
}

// ---------------------------------------------------------------------------
// MonomialOrder

std::vector<std::size_t> MonomialOrder::identity(std::size_t n) {
    std::vector<std::size_t> r(n);
    std::iota(r.begin(), r.end(), 0);
    return r;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> ranking)
    : kind_(kind), ranking_(std::move(ranking)), position_(ranking_.size(), ranking_.size()) {
    for (std::size_t p = 0; p < ranking_.size(); ++p) {
        const auto v = ranking_[p];
        if (v >= ranking_.size() || position_[v] != ranking_.size())
            throw BadParams("monomial order ranking is not a permutation");
        position_[v] = p;
    }
}

bool MonomialOrder::variable_greater(std::size_t a, std::size_t b) const {
    return position_.at(a) < position_.at(b);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != nvars() || b.nvars() != nvars())
        throw BadParams("monomial and order have different numbers of variables");
    if (kind_ == OrderKind::PureLex) {
        for (auto v : ranking_)
            if (a[v] != b[v]) return a[v] <=> b[v];
        return std::strong_ordering::equal;
    }
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it)
        if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    return std::strong_ordering::equal;
}

}  // namespace regquot
