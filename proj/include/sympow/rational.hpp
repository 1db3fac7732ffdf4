#pragma once

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace sympow {

using Rational = mpq_class;
using BigInt = mpz_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q"; throws DomainError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

/// A point of Q^r with canonical (lowest-terms, positive denominator) entries.
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t r) : v_(r, Rational(0)) {}
    explicit RationalVector(std::vector<Rational> entries);
    RationalVector(std::initializer_list<Rational> entries)
        : RationalVector(std::vector<Rational>(entries)) {}

    std::size_t size() const noexcept { return v_.size(); }
    const Rational& operator[](std::size_t i) const { return v_[i]; }
    const std::vector<Rational>& entries() const noexcept { return v_; }

    /// |v| = v_1 + ... + v_r.
    Rational sum() const;
    RationalVector scaled(const Rational& n) const;

    friend bool operator==(const RationalVector& a, const RationalVector& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b);

private:
    std::vector<Rational> v_;
};

std::string to_string(const RationalVector& v);

} // namespace sympow
