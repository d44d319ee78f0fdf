#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace regquot {

/// Sparse univariate integer polynomial in t. No zero coefficients are stored.
class Polynomial {
public:
    Polynomial() = default;
    /// c * t^d.
    static Polynomial term(std::int64_t c, int d);
    static Polynomial one() { return term(1, 0); }

    std::int64_t coeff(int d) const;
    void add_term(std::int64_t c, int d);
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Highest degree with a nonzero coefficient; -1 for the zero polynomial.
    int degree() const noexcept;
    int lowest_degree() const noexcept;
    std::int64_t evaluate_at_one() const;
    const std::map<int, std::int64_t>& coeffs() const noexcept { return coeffs_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    /// Quotient by (1 - t); requires evaluate_at_one() == 0.
    Polynomial divide_by_one_minus_t() const;

    bool operator==(const Polynomial&) const = default;

private:
    std::map<int, std::int64_t> coeffs_;
};

/// e.g. t^4 + t^5 - t^9.
std::string to_string(const Polynomial& p, const std::string& var = "t");

/// Coefficients 0..d_max of p(t) / (1 - t)^n.
std::vector<std::int64_t> series_coefficients(const Polynomial& numerator, std::int64_t n, int d_max);

}  // namespace regquot
