#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace regquot {

/// Z/p for a prime p < 2^31, so products fit in 64 bits.
class PrimeField {
public:
    static constexpr std::uint32_t kDefaultCharacteristic = 32003;

    explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

    std::uint32_t characteristic() const noexcept { return p_; }

    std::uint32_t reduce(std::int64_t x) const noexcept {
        const auto r = x % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t inv(std::uint32_t a) const;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// Row-major dense matrix over a prime field.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const noexcept;

    static DenseMatrix identity(std::size_t n);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> data_;
};

/// Rank over F by Gaussian elimination on a copy.
std::size_t rank(DenseMatrix m, const PrimeField& F);

/// a * b over F.
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, const PrimeField& F);

}  // namespace regquot
