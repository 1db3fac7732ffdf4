#include "sympow/linalg.hpp"

#include "sympow/error.hpp"

namespace sympow {

namespace {

struct Overflow {};

std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw Overflow{};
    return static_cast<std::int64_t>(v);
}

std::size_t bareiss_rank_machine(IntMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    std::int64_t prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        m.swap_rows(piv, rank);
        const std::int64_t p = m(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::int64_t f = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                const __int128 v = static_cast<__int128>(m(i, j)) * p -
                                   static_cast<__int128>(f) * m(rank, j);
                m(i, j) = narrow(v / prev);
            }
            m(i, c) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::size_t bareiss_rank_big(const IntMatrix& src) {
    const std::size_t rows = src.rows();
    const std::size_t cols = src.cols();
    Matrix<BigInt> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(src(i, j));
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        m.swap_rows(piv, rank);
        const BigInt p = m(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const BigInt f = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt v = m(i, j) * p - f * m(rank, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t rank_over_rationals(const IntMatrix& m) {
    try {
        return bareiss_rank_machine(m);
    } catch (const Overflow&) {
        return bareiss_rank_big(m);
    }
}

std::size_t rank_mod_prime(const IntMatrix& src, std::uint32_t p) {
    if (p < 2 || !is_prime(p)) throw DomainError("invalid prime " + std::to_string(p));
    const std::size_t rows = src.rows();
    const std::size_t cols = src.cols();
    const std::int64_t q = p;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = ((src(i, j) % q) + q) % q;

    auto inverse = [q](std::int64_t a) {
        // Fermat: a^(q-2) mod q.
        std::int64_t result = 1;
        std::int64_t base = a;
        for (std::int64_t e = q - 2; e > 0; e >>= 1) {
            if (e & 1) result = result * base % q;
            base = base * base % q;
        }
        return result;
    };

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        m.swap_rows(piv, rank);
        const std::int64_t inv = inverse(m(rank, c));
        for (std::size_t j = c; j < cols; ++j) m(rank, j) = m(rank, j) * inv % q;
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::int64_t f = m(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) m(i, j) = ((m(i, j) - f * m(rank, j)) % q + q) % q;
        }
        ++rank;
    }
    return rank;
}

std::size_t rank(RationalMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        m.swap_rows(piv, rank);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(rank, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Rational>> solve_unique(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw DomainError("solve_unique needs a square system");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) return std::nullopt;
        a.swap_rows(piv, c);
        std::swap(b[piv], b[c]);
        const Rational inv = 1 / a(c, c);
        for (std::size_t j = c; j < n; ++j) a(c, j) *= inv;
        b[c] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
            b[i] -= f * b[c];
        }
    }
    return b;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace sympow
