#pragma once

// Monomials and monomial ideals in r variables.
//
// A monomial x^a is identified with its exponent vector a. A monomial ideal is
// stored by its minimal generating set G(I): an antichain under componentwise
// order, kept sorted lexicographically so equal ideals compare equal.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace sympow {

using Exponent = std::int32_t;

/// Bit i set means variable i (0-based) is in the subset.
using VarMask = std::uint64_t;

inline constexpr std::size_t kMaxVariables = 64;

class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t r) : e_(r, 0) {}
    explicit ExponentVector(std::vector<Exponent> entries);
    ExponentVector(std::initializer_list<Exponent> entries)
        : ExponentVector(std::vector<Exponent>(entries)) {}

    static ExponentVector unit(std::size_t r, std::size_t i);
    static ExponentVector from_mask(std::size_t r, VarMask mask);

    std::size_t size() const noexcept { return e_.size(); }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    std::span<const Exponent> entries() const noexcept { return e_; }

    /// Sets entry i; throws DomainError on a negative value.
    void set(std::size_t i, Exponent value);

    /// |a| = a_1 + ... + a_r.
    std::int64_t degree() const noexcept;

    /// Componentwise a <= b, i.e. x^a divides x^b.
    bool divides(const ExponentVector& other) const noexcept;

    VarMask support() const noexcept;
    bool is_squarefree() const noexcept;
    bool is_zero() const noexcept;

    /// Componentwise max (lcm of monomials).
    ExponentVector lcm(const ExponentVector& other) const;

    /// Sum with overflow check (product of monomials).
    ExponentVector operator+(const ExponentVector& other) const;

    /// Difference; throws DomainError if some entry would become negative.
    ExponentVector operator-(const ExponentVector& other) const;

    ExponentVector scaled(Exponent n) const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
        return a.e_ <=> b.e_;
    }

private:
    std::vector<Exponent> e_;
};

/// Checked exponent addition; throws DomainError on overflow.
Exponent checked_add(Exponent a, Exponent b);

class MonomialIdeal {
public:
    /// Divisibility antichain of `gens`, canonically ordered.
    /// Throws DomainError("zero ideal unsupported") on empty input.
    static MonomialIdeal minimize(std::vector<ExponentVector> gens, std::size_t r);

    /// The whole ring, represented by the single zero exponent vector.
    static MonomialIdeal unit(std::size_t r);

    /// The prime (x_i : i in vars).
    static MonomialIdeal prime(std::size_t r, VarMask vars);

    std::size_t nvars() const noexcept { return r_; }
    const std::vector<ExponentVector>& gens() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool is_unit() const noexcept;
    bool is_squarefree() const noexcept;

    bool contains(const ExponentVector& m) const;
    /// Ideal containment: every generator of `other` lies in *this.
    bool contains(const MonomialIdeal& other) const;

    /// d(I), the maximal degree of a minimal generator (0 for the unit ideal).
    std::int64_t max_gen_degree() const noexcept;
    std::int64_t min_gen_degree() const noexcept;

    /// lcm of all minimal generators.
    ExponentVector join() const;

    /// Union of the supports of the minimal generators.
    VarMask support() const noexcept;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    MonomialIdeal(std::size_t r, std::vector<ExponentVector> gens)
        : r_(r), gens_(std::move(gens)) {}

    std::size_t r_ = 0;
    std::vector<ExponentVector> gens_;
};

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Left fold with minimization after every step.
MonomialIdeal intersect(std::span<const MonomialIdeal> ideals);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, int n);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// I : (prod_{j in vars} x_j)^inf, i.e. set the exponents of `vars` to zero.
MonomialIdeal saturate_vars(const MonomialIdeal& ideal, VarMask vars);

/// I_<d>: the ideal generated by the degree-d monomials of I.
/// Throws DomainError when d is below the minimal generator degree.
MonomialIdeal component_ideal(const MonomialIdeal& ideal, std::int64_t d);

/// Ideal generated by the minimal generators of degree <= d.
/// Throws DomainError when no generator qualifies.
MonomialIdeal degree_truncation(const MonomialIdeal& ideal, std::int64_t d);

/// x^m is a minimal generator iff x^(m - e_i) is outside I for every i with m_i >= 1.
/// Throws DomainError if m is not in I.
bool is_minimal_generator(const MonomialIdeal& ideal, const ExponentVector& m);

} // namespace sympow
