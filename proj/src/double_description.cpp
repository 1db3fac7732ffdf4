#include "sympow/double_description.hpp"

#include "sympow/error.hpp"
#include "sympow/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace sympow::dd {

namespace {

class Bitset {
public:
    explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    Bitset operator&(const Bitset& o) const {
        Bitset out(*this);
        for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= o.words_[k];
        return out;
    }
    bool contains(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((o.words_[k] & ~words_[k]) != 0) return false;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    IntVector y;
    Bitset tight;
};

BigInt dot(const IntVector& a, const IntVector& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

IntVector primitive(IntVector v) {
    BigInt g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0 || g == 1) return v;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& rows) {
    if (rows.empty()) throw DomainError("cone without constraints is not pointed");
    const std::size_t d = rows.front().size();
    const std::size_t m = rows.size();
    for (const auto& row : rows)
        if (row.size() != d) throw DomainError("constraint rows of different lengths");

    // Greedily pick d linearly independent rows for the initial simplicial cone.
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < m && basis.size() < d; ++i) {
        RationalMatrix trial(basis.size() + 1, d);
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (std::size_t j = 0; j < d; ++j) trial(k, j) = rows[basis[k]][j];
        for (std::size_t j = 0; j < d; ++j) trial(basis.size(), j) = rows[i][j];
        if (rank(trial) == basis.size() + 1) basis.push_back(i);
    }
    if (basis.size() < d) throw DomainError("constraint rows do not span; cone is not pointed");

    // Rays of the initial cone are the columns of the inverse of the basis matrix.
    std::vector<Ray> rays;
    for (std::size_t k = 0; k < d; ++k) {
        RationalMatrix a(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) a(i, j) = rows[basis[i]][j];
        std::vector<Rational> rhs(d, Rational(0));
        rhs[k] = 1;
        auto sol = solve_unique(std::move(a), std::move(rhs));
        if (!sol) throw InternalError("double description: singular initial basis");
        BigInt lcm_den = 1;
        for (const auto& q : *sol) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
        IntVector y(d);
        for (std::size_t j = 0; j < d; ++j) {
            Rational scaled = (*sol)[j] * lcm_den;
            y[j] = scaled.get_num();
        }
        Ray ray{primitive(std::move(y)), Bitset(m)};
        for (std::size_t i = 0; i < d; ++i)
            if (i != k) ray.tight.set(basis[i]);
        rays.push_back(std::move(ray));
    }

    std::vector<bool> processed(m, false);
    for (auto b : basis) processed[b] = true;

    for (std::size_t row = 0; row < m; ++row) {
        if (processed[row]) continue;
        processed[row] = true;
        const IntVector& a = rows[row];
        std::vector<BigInt> value(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            value[k] = dot(a, rays[k].y);
            const int s = sgn(value[k]);
            if (s > 0) pos.push_back(k);
            else if (s < 0) neg.push_back(k);
            else rays[k].tight.set(row);
        }
        if (neg.empty()) continue;

        std::vector<Ray> next;
        next.reserve(rays.size());
        for (std::size_t k = 0; k < rays.size(); ++k)
            if (sgn(value[k]) >= 0) next.push_back(rays[k]);

        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                Bitset common = rays[p].tight & rays[n].tight;
                if (common.count() + 2 < d) continue;
                // Combinatorial adjacency test.
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == p || k == n) continue;
                    if (rays[k].tight.contains(common)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector y(d);
                for (std::size_t j = 0; j < d; ++j)
                    y[j] = value[p] * rays[n].y[j] - value[n] * rays[p].y[j];
                common.set(row);
                next.push_back(Ray{primitive(std::move(y)), std::move(common)});
            }
        }
        rays = std::move(next);
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto& ray : rays) out.push_back(std::move(ray.y));
    std::sort(out.begin(), out.end(), [](const IntVector& x, const IntVector& y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                            [](const BigInt& u, const BigInt& v) { return u < v; });
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace sympow::dd
