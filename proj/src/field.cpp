#include "regquot/field.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "regquot/error.hpp"

namespace regquot {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw BadParams("field characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw BadParams("field characteristic must be below 2^31");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw MathError("inverse of zero");
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a % p_;
    for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
    }
    return static_cast<std::uint32_t>(result);
}

bool DenseMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::size_t rank(DenseMatrix m, const PrimeField& F) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t k = c; k < cols; ++k) std::swap(m(pivot, k), m(r, k));
        const std::uint32_t inv = F.inv(m(r, c));
        for (std::size_t k = c; k < cols; ++k) m(r, k) = F.mul(m(r, k), inv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint32_t factor = m(i, c);
            if (factor == 0) continue;
            for (std::size_t k = c; k < cols; ++k) m(i, k) = F.sub(m(i, k), F.mul(factor, m(r, k)));
        }
        ++r;
    }
    return r;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, const PrimeField& F) {
    if (a.cols() != b.rows()) throw BadParams("matrix dimensions do not match");
    DenseMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint32_t x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = F.add(out(i, j), F.mul(x, b(k, j)));
        }
    return out;
}

}  // namespace regquot
