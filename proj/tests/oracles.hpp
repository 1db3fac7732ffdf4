#pragma once

// Brute-force reference implementations used only by the tests. None of them
// calls into the library beyond its value types.

#include "sympow/monomial.hpp"
#include "sympow/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using sympow::Exponent;
using sympow::ExponentVector;
using sympow::MonomialIdeal;
using sympow::Rational;

/// Rank over Q (p == 0) or GF(p) by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<long>> rows, std::uint32_t p) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rk = 0;
    if (p == 0) {
        std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = rows[i][j];
        for (std::size_t c = 0; c < cols && rk < m.size(); ++c) {
            std::size_t piv = rk;
            while (piv < m.size() && m[piv][c] == 0) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[piv], m[rk]);
            for (std::size_t i = rk + 1; i < m.size(); ++i) {
                if (m[i][c] == 0) continue;
                const Rational f = m[i][c] / m[rk][c];
                for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rk][j];
            }
            ++rk;
        }
        return rk;
    }
    const long q = static_cast<long>(p);
    auto inv = [&](long a) {
        long r = 1, b = a, e = q - 2;
        while (e) {
            if (e & 1) r = r * b % q;
            b = b * b % q;
            e >>= 1;
        }
        return r;
    };
    for (auto& row : rows)
        for (auto& x : row) x = ((x % q) + q) % q;
    for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
        std::size_t piv = rk;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rk]);
        const long iv = inv(rows[rk][c]);
        for (std::size_t i = rk + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const long f = rows[i][c] * iv % q;
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = ((rows[i][j] - f * rows[rk][j]) % q + q) % q;
        }
        ++rk;
    }
    return rk;
}

/// Multigraded Betti numbers of I from the Taylor complex: (i, alpha) -> beta.
/// The degree-alpha strand of the Taylor complex tensored with k has a basis
/// of generator subsets S with lcm(S) = alpha; the face S \ s survives in the
/// differential only when it has the same lcm.
inline std::map<std::pair<int, ExponentVector>, std::size_t> taylor_betti(const MonomialIdeal& ideal,
                                                                           std::uint32_t p = 0) {
    const auto& g = ideal.gens();
    const std::size_t m = g.size();
    const std::size_t r = ideal.nvars();
    std::map<ExponentVector, std::vector<std::uint32_t>> by_lcm;
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
        ExponentVector l(r);
        for (std::size_t k = 0; k < m; ++k)
            if (s >> k & 1) l = l.lcm(g[k]);
        by_lcm[l].push_back(s);
    }
    std::map<std::pair<int, ExponentVector>, std::size_t> out;
    for (const auto& [alpha, subsets] : by_lcm) {
        std::map<int, std::vector<std::uint32_t>> by_size;
        for (auto s : subsets) by_size[__builtin_popcount(s)].push_back(s);
        auto boundary_rank = [&](int size) -> std::size_t {
            // d: C_size -> C_{size-1}
            if (!by_size.count(size) || !by_size.count(size - 1)) return 0;
            const auto& src = by_size[size];
            const auto& dst = by_size[size - 1];
            std::map<std::uint32_t, std::size_t> col;
            for (std::size_t k = 0; k < dst.size(); ++k) col[dst[k]] = k;
            std::vector<std::vector<long>> rows;
            for (auto s : src) {
                std::vector<long> row(dst.size(), 0);
                int sign = 1;
                for (std::size_t k = 0; k < m; ++k) {
                    if (!(s >> k & 1)) continue;
                    auto it = col.find(s & ~(1u << k));
                    if (it != col.end()) row[it->second] = sign;
                    sign = -sign;
                }
                rows.push_back(std::move(row));
            }
            return rank(rows, p);
        };
        for (const auto& [size, list] : by_size) {
            const std::size_t dim = list.size();
            const std::size_t homology = dim - boundary_rank(size) - boundary_rank(size + 1);
            if (homology) out[{size - 1, alpha}] = homology;
        }
    }
    return out;
}

/// Solves A x = b exactly when A (n x n) is nonsingular.
inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/// Vertices of {x : A x >= b} by trying every r-subset of rows.
inline std::set<std::vector<Rational>> vertices(const std::vector<std::vector<long>>& a, const std::vector<long>& b,
                                                std::size_t r) {
    std::set<std::vector<Rational>> out;
    std::vector<std::size_t> pick(r);
    const std::size_t m = a.size();
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == r) {
            std::vector<std::vector<Rational>> sys(r, std::vector<Rational>(r));
            std::vector<Rational> rhs(r);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < r; ++j) sys[i][j] = a[pick[i]][j];
                rhs[i] = b[pick[i]];
            }
            auto x = solve(sys, rhs);
            if (!x) return;
            for (std::size_t i = 0; i < m; ++i) {
                Rational lhs = 0;
                for (std::size_t j = 0; j < r; ++j) lhs += a[i][j] * (*x)[j];
                if (lhs < b[i]) return;
            }
            out.insert(*x);
            return;
        }
        for (std::size_t i = start; i + (r - depth) <= m; ++i) {
            pick[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// delta of a squarefree ideal: SP(I) = {x >= 0 : sum_{j in p} x_j >= 1 for each minimal prime p}.
inline Rational squarefree_delta(const std::vector<std::uint64_t>& primes, std::size_t r) {
    std::vector<std::vector<long>> a;
    std::vector<long> b;
    for (auto p : primes) {
        std::vector<long> row(r, 0);
        for (std::size_t j = 0; j < r; ++j) row[j] = (p >> j) & 1;
        a.push_back(row);
        b.push_back(1);
    }
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<long> row(r, 0);
        row[j] = 1;
        a.push_back(row);
        b.push_back(0);
    }
    Rational best = 0;
    for (const auto& v : vertices(a, b, r)) {
        Rational s = 0;
        for (const auto& x : v) s += x;
        best = std::max(best, s);
    }
    return best;
}

/// Minimal vertex covers of the generator supports, by trying every subset.
inline std::vector<std::uint64_t> minimal_primes(const MonomialIdeal& ideal) {
    const std::size_t r = ideal.nvars();
    std::vector<std::uint64_t> covers;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << r); ++s) {
        bool hits = true;
        for (const auto& g : ideal.gens()) hits = hits && (g.support() & s);
        if (hits) covers.push_back(s);
    }
    std::vector<std::uint64_t> out;
    for (auto s : covers) {
        bool minimal = true;
        for (auto t : covers) minimal = minimal && !(t != s && (t & s) == t);
        if (minimal) out.push_back(s);
    }
    return out;
}

/// x^alpha in I_Delta^(n) iff sum_{j in p} alpha_j >= n for every minimal prime p.
inline bool in_squarefree_symbolic(const std::vector<std::uint64_t>& primes, const ExponentVector& alpha, int n) {
    for (auto p : primes) {
        long s = 0;
        for (std::size_t j = 0; j < alpha.size(); ++j)
            if (p >> j & 1) s += alpha[j];
        if (s < n) return false;
    }
    return true;
}

/// Calls f on every exponent vector in [0, bound] componentwise.
template <typename F>
void for_box(const std::vector<Exponent>& bound, F&& f) {
    std::vector<Exponent> a(bound.size(), 0);
    while (true) {
        f(ExponentVector(a));
        std::size_t k = 0;
        while (k < a.size() && a[k] == bound[k]) a[k++] = 0;
        if (k == a.size()) return;
        ++a[k];
    }
}

inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t r, std::size_t max_gens, Exponent max_exp,
                                  bool squarefree = false) {
    std::uniform_int_distribution<std::size_t> count(1, max_gens);
    std::uniform_int_distribution<Exponent> expo(0, squarefree ? 1 : max_exp);
    std::vector<ExponentVector> gens;
    const std::size_t k = count(rng);
    while (gens.size() < k) {
        std::vector<Exponent> e(r);
        for (auto& x : e) x = expo(rng);
        if (std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; })) continue;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::minimize(std::move(gens), r);
}

} // namespace oracle
