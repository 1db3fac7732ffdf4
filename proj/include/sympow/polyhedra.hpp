#pragma once

// Exact rational polyhedra contained in the nonnegative orthant: Newton
// polyhedra, the polyhedron SP(I) cut out by the Newton polyhedra of the
// minimal primary components, vertex enumeration and delta(I).

#include "sympow/monomial.hpp"
#include "sympow/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sympow {

/// <a, x> >= b with integer data in primitive form (gcd of a and b is 1).
class HalfSpace {
public:
    /// Normalizes to primitive form; throws DomainError when a == 0.
    HalfSpace(std::vector<std::int64_t> a, std::int64_t b);

    const std::vector<std::int64_t>& normal() const noexcept { return a_; }
    std::int64_t rhs() const noexcept { return b_; }
    std::size_t size() const noexcept { return a_.size(); }

    /// Sum of the entries of the normal.
    std::int64_t normal_weight() const noexcept;

    bool is_orthant() const noexcept;

    Rational evaluate(const RationalVector& x) const;
    bool satisfied_by(const RationalVector& x) const { return evaluate(x) >= b_; }
    bool satisfied_by(std::span<const Exponent> x) const;

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
    friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;

private:
    std::vector<std::int64_t> a_;
    std::int64_t b_;
};

/// Intersection of halfspaces; always includes x_i >= 0 for every i.
class HPolyhedron {
public:
    HPolyhedron(std::size_t r, std::vector<HalfSpace> halfspaces);

    std::size_t dim() const noexcept { return r_; }
    const std::vector<HalfSpace>& halfspaces() const noexcept { return halfspaces_; }

    friend bool operator==(const HPolyhedron&, const HPolyhedron&) = default;

private:
    std::size_t r_;
    std::vector<HalfSpace> halfspaces_;
};

using VertexSet = std::vector<RationalVector>;

enum class VertexMethod { Auto, Subsets, DoubleDescription };

struct PolyhedraCaps {
    std::size_t max_dim = 12;
    std::size_t max_constraints = 40;
    /// Auto switches to double description above this many r-subsets.
    std::size_t subset_budget = 200'000;
    std::size_t max_box = 1'000'000;
};

/// conv(exponents of G(I)) + R_+^r as an H-representation of primitive facets.
HPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// Concatenated, deduplicated halfspace systems of NP(Q) for each component.
HPolyhedron sp_polyhedron(std::span<const MonomialIdeal> components);

/// SP(I) using the minimal primary components of I.
HPolyhedron sp_polyhedron(const MonomialIdeal& ideal);

/// Exact vertex set, sorted. Throws CapExceeded("max_dim") when r exceeds the
/// cap: callers must use the graph-combinatorial path instead.
VertexSet vertices(const HPolyhedron& p, VertexMethod method = VertexMethod::Auto,
                   const PolyhedraCaps& caps = {});

/// True iff v is feasible and r linearly independent constraints are tight at v.
bool is_vertex(const HPolyhedron& p, const RationalVector& v);

/// max |v| over the vertices of SP(I).
Rational delta(const MonomialIdeal& ideal, const PolyhedraCaps& caps = {});
Rational delta(const HPolyhedron& sp, const PolyhedraCaps& caps = {});

/// n * P: every right-hand side is multiplied by n.
HPolyhedron scale(const HPolyhedron& p, int n);

bool member(const HPolyhedron& p, const RationalVector& v);

/// Monomial integral closure: minimal lattice points of NP(I).
MonomialIdeal integral_closure(const MonomialIdeal& ideal, const PolyhedraCaps& caps = {});

/// J_n = intersection of the integral closures of Q^n over the components.
MonomialIdeal jn(std::span<const MonomialIdeal> components, int n, const PolyhedraCaps& caps = {});

/// Every facet normal a of SP(I) satisfies |a| <= r^2 d(I)^(r-1).
bool facet_bound_check(const MonomialIdeal& ideal);

} // namespace sympow
