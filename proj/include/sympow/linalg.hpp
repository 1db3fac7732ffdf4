#pragma once

// Exact dense linear algebra over Q and GF(p).

#include "sympow/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sympow {

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RationalMatrix = Matrix<Rational>;

/// Rank over Q by fraction-free (Bareiss) elimination. Runs in machine
/// integers and restarts with arbitrary precision on overflow.
std::size_t rank_over_rationals(const IntMatrix& m);

/// Rank over GF(p); p must be prime and below 2^31.
std::size_t rank_mod_prime(const IntMatrix& m, std::uint32_t p);

std::size_t rank(RationalMatrix m);

/// Unique solution of the square system A x = b, or nullopt when A is singular.
std::optional<std::vector<Rational>> solve_unique(RationalMatrix a, std::vector<Rational> b);

bool is_prime(std::uint64_t n);

} // namespace sympow
