#pragma once

// Minimal primes, minimal primary components and symbolic powers of monomial
// ideals.

#include "sympow/monomial.hpp"
#include "sympow/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sympow {

/// The monomial prime (x_i : i in vars).
struct PrimeSupport {
    std::size_t r = 0;
    VarMask vars = 0;

    std::vector<std::size_t> indices() const;
    MonomialIdeal ideal() const { return MonomialIdeal::prime(r, vars); }

    friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;
    friend auto operator<=>(const PrimeSupport&, const PrimeSupport&) = default;
};

struct PrimaryComponent {
    PrimeSupport prime;
    MonomialIdeal ideal;
};

/// Minimal primary components Q_1..Q_s of a monomial ideal.
class PrimaryDecomposition {
public:
    /// Checks that every component is primary to its prime, supported inside it,
    /// and that the primes are pairwise incomparable. Throws DomainError naming
    /// the violated condition.
    static PrimaryDecomposition validated(std::vector<PrimaryComponent> components);

    const std::vector<PrimaryComponent>& components() const noexcept { return components_; }
    std::vector<MonomialIdeal> ideals() const;

private:
    explicit PrimaryDecomposition(std::vector<PrimaryComponent> c) : components_(std::move(c)) {}
    std::vector<PrimaryComponent> components_;
};

struct SymbolicCaps {
    std::size_t max_primes = 100'000;
};

/// Minimal vertex sets meeting every generator support, in lexicographic mask order.
std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal, const SymbolicCaps& caps = {});

/// Q_p = I with x_i := 1 for i outside p, for every minimal prime p.
PrimaryDecomposition minimal_decomposition(const MonomialIdeal& ideal, const SymbolicCaps& caps = {});

/// I^(n) as the intersection over minimal primes p of the saturation of I^n by
/// the variables outside p.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int n, const SymbolicCaps& caps = {});

/// Q_1^n ∩ ... ∩ Q_s^n.
MonomialIdeal symbolic_power_from_components(const PrimaryDecomposition& decomposition, int n);

/// Facets of the simplicial complex whose Stanley-Reisner ideal is `ideal`
/// (complements of the minimal primes). Requires a squarefree ideal.
std::vector<VarMask> stanley_reisner_facets(const MonomialIdeal& ideal);

/// Minimal-generator test in I_Delta^(n) through facet-complement sums: for
/// each i with alpha_i >= 1 some facet F omits i with sum_{j not in F} alpha_j = n.
/// Throws DomainError when alpha is not in I_Delta^(n).
bool is_min_gen_squarefree_symbolic(std::span<const VarMask> facets, const ExponentVector& alpha, int n);

/// Constants and values for the finite-n degree bounds on I^(n).
struct BoundReport {
    std::size_t r = 0;
    std::size_t s = 0;        // number of minimal primes
    std::int64_t d = 0;       // d(I)
    BigInt rho;               // r^2 d(I)^(r-1)
    Rational delta;
    int n = 0;
    std::int64_t d_symbolic = 0;  // d(I^(n))
    std::int64_t d_jn = 0;        // d(J_n)
    bool squarefree = false;

    /// delta n - r rho (1 + s (r-1) d)
    Rational lower() const;
    /// delta n + r + r (r-1) d
    Rational upper() const;
    /// delta n + 2r + r (rho + (r-1) d), bounding every t_i(I^(n)).
    Rational t_bound() const;

    bool general_bounds_hold() const;
    /// d(J_n) < delta n + r
    bool jn_bound_holds() const;
    /// d(I^(n)) <= delta n; only meaningful for squarefree I.
    bool squarefree_bound_holds() const;
};

BoundReport bound_report(const MonomialIdeal& ideal, int n);

} // namespace sympow
