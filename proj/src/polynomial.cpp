#include "regquot/polynomial.hpp"

#include <sstream>

#include "regquot/checked.hpp"

namespace regquot {

Polynomial Polynomial::term(std::int64_t c, int d) {
    Polynomial p;
    p.add_term(c, d);
    return p;
}

std::int64_t Polynomial::coeff(int d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? 0 : it->second;
}

void Polynomial::add_term(std::int64_t c, int d) {
    if (c == 0) return;
    auto& slot = coeffs_[d];
    slot = checked_add(slot, c);
    if (slot == 0) coeffs_.erase(d);
}

int Polynomial::degree() const noexcept { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

int Polynomial::lowest_degree() const noexcept { return coeffs_.empty() ? -1 : coeffs_.begin()->first; }

std::int64_t Polynomial::evaluate_at_one() const {
    std::int64_t s = 0;
    for (const auto& [d, c] : coeffs_) s = checked_add(s, c);
    return s;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [d, c] : o.coeffs_) out.add_term(c, d);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [d, c] : o.coeffs_) out.add_term(-c, d);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out;
    for (const auto& [d1, c1] : coeffs_)
        for (const auto& [d2, c2] : o.coeffs_) out.add_term(checked_mul(c1, c2), d1 + d2);
    return out;
}

Polynomial Polynomial::divide_by_one_minus_t() const {
    if (evaluate_at_one() != 0) throw BadParams("polynomial is not divisible by (1 - t)");
    // p(t) = (1 - t) q(t)  =>  q_d = sum_{e <= d} p_e.
    Polynomial q;
    std::int64_t running = 0;
    const int lo = lowest_degree(), hi = degree();
    for (int d = lo; d < hi; ++d) {
        running = checked_add(running, coeff(d));
        q.add_term(running, d);
    }
    return q;
}

std::string to_string(const Polynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : p.coeffs()) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (d == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << var;
        if (d != 1) os << '^' << d;
    }
    return os.str();
}

std::vector<std::int64_t> series_coefficients(const Polynomial& numerator, std::int64_t n, int d_max) {
    std::vector<std::int64_t> out(d_max < 0 ? 0 : static_cast<std::size_t>(d_max) + 1, 0);
    for (int d = 0; d <= d_max; ++d) {
        __int128 total = 0;
        for (const auto& [k, c] : numerator.coeffs()) {
            if (k > d) break;
            // coefficient of t^(d-k) in (1-t)^(-n)
            const std::int64_t c_series = n == 0 ? (d == k ? 1 : 0) : binomial(n - 1 + d - k, n - 1);
            total += static_cast<__int128>(c) * c_series;
        }
        if (total > INT64_MAX || total < INT64_MIN) throw Overflow("series coefficient overflow");
        out[d] = static_cast<std::int64_t>(total);
    }
    return out;
}

}  // namespace regquot
