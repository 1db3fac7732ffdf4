#include "sympow/symbolic.hpp"

#include "sympow/error.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace sympow {

namespace {

VarMask full_mask(std::size_t r) {
    return r >= kMaxVariables ? ~VarMask{0} : (VarMask{1} << r) - 1;
}

// Removes every set that strictly contains another one; the result is sorted.
void keep_minimal_sets(std::vector<VarMask>& sets) {
    std::sort(sets.begin(), sets.end(), [](VarMask a, VarMask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VarMask> kept;
    for (VarMask s : sets) {
        const bool redundant = std::any_of(kept.begin(), kept.end(),
                                           [s](VarMask k) { return (k & ~s) == 0; });
        if (!redundant) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    sets = std::move(kept);
}

} // namespace

std::vector<std::size_t> PrimeSupport::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < r; ++i)
        if (vars >> i & 1U) out.push_back(i);
    return out;
}

PrimaryDecomposition PrimaryDecomposition::validated(std::vector<PrimaryComponent> components) {
    if (components.empty()) throw DomainError("invalid decomposition: no components");
    const std::size_t r = components.front().ideal.nvars();
    for (const auto& c : components) {
        if (c.ideal.nvars() != r || c.prime.r != r)
            throw DomainError("invalid decomposition: components live in different rings");
        if (c.prime.vars == 0) throw DomainError("invalid decomposition: empty prime");
        if ((c.ideal.support() & ~c.prime.vars) != 0)
            throw DomainError("invalid decomposition: component has a generator supported outside its prime");
        VarMask pure = 0;
        for (const auto& g : c.ideal.gens())
            if (std::popcount(g.support()) == 1) pure |= g.support();
        if ((c.prime.vars & ~pure) != 0)
            throw DomainError("invalid decomposition: component is not primary to its prime "
                              "(a prime variable has no pure power)");
    }
    for (std::size_t a = 0; a < components.size(); ++a)
        for (std::size_t b = 0; b < components.size(); ++b) {
            if (a == b) continue;
            const VarMask pa = components[a].prime.vars, pb = components[b].prime.vars;
            if ((pa & ~pb) == 0)
                throw DomainError("invalid decomposition: primes are not pairwise incomparable");
        }
    return PrimaryDecomposition(std::move(components));
}

std::vector<MonomialIdeal> PrimaryDecomposition::ideals() const {
    std::vector<MonomialIdeal> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.ideal);
    return out;
}

std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal, const SymbolicCaps& caps) {
    if (ideal.is_unit()) throw DomainError("the unit ideal has no minimal primes");
    std::vector<VarMask> supports;
    for (const auto& g : ideal.gens()) supports.push_back(g.support());
    keep_minimal_sets(supports);

    // Incremental minimal transversals: extend the hitting sets one support at a time.
    std::vector<VarMask> hitting{0};
    for (VarMask s : supports) {
        std::vector<VarMask> next;
        for (VarMask t : hitting) {
            if ((t & s) != 0) {
                next.push_back(t);
                continue;
            }
            for (VarMask rest = s; rest != 0; rest &= rest - 1) next.push_back(t | (rest & -rest));
        }
        keep_minimal_sets(next);
        if (next.size() > caps.max_primes)
            throw CapExceeded("max_primes", "more than " + std::to_string(caps.max_primes) +
                                                " minimal primes");
        hitting = std::move(next);
    }
    std::vector<PrimeSupport> out;
    for (VarMask h : hitting) out.push_back(PrimeSupport{ideal.nvars(), h});
    return out;
}

PrimaryDecomposition minimal_decomposition(const MonomialIdeal& ideal, const SymbolicCaps& caps) {
    const VarMask all = full_mask(ideal.nvars());
    std::vector<PrimaryComponent> comps;
    for (const auto& p : minimal_primes(ideal, caps))
        comps.push_back(PrimaryComponent{p, saturate_vars(ideal, all & ~p.vars)});
    return PrimaryDecomposition::validated(std::move(comps));
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int n, const SymbolicCaps& caps) {
    if (n < 1) throw DomainError("symbolic power exponent must be positive");
    const VarMask all = full_mask(ideal.nvars());
    std::vector<MonomialIdeal> localized;
    for (const auto& p : minimal_primes(ideal, caps)) {
        // Setting the outside variables to 1 is a ring map, so it commutes with
        // taking powers: saturate(I^n) = saturate(I)^n.
        localized.push_back(power(saturate_vars(ideal, all & ~p.vars), n));
    }
    return intersect(localized);
}

MonomialIdeal symbolic_power_from_components(const PrimaryDecomposition& decomposition, int n) {
    if (n < 1) throw DomainError("symbolic power exponent must be positive");
    std::vector<MonomialIdeal> powers;
    for (const auto& c : decomposition.components()) powers.push_back(power(c.ideal, n));
    return intersect(powers);
}

std::vector<VarMask> stanley_reisner_facets(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw DomainError("Stanley-Reisner facets need a squarefree ideal");
    const VarMask all = full_mask(ideal.nvars());
    std::vector<VarMask> facets;
    for (const auto& p : minimal_primes(ideal)) facets.push_back(all & ~p.vars);
    return facets;
}

bool is_min_gen_squarefree_symbolic(std::span<const VarMask> facets, const ExponentVector& alpha, int n) {
    const std::size_t r = alpha.size();
    const VarMask all = full_mask(r);
    std::vector<std::int64_t> sums;
    for (VarMask f : facets) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < r; ++j)
            if (!(f >> j & 1U)) s += alpha[j];
        if (s < n) throw DomainError("monomial is not in the symbolic power");
        sums.push_back(s);
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (alpha[i] == 0) continue;
        bool tight = false;
        for (std::size_t k = 0; k < facets.size() && !tight; ++k)
            tight = !((facets[k] & all) >> i & 1U) && sums[k] == n;
        if (!tight) return false;
    }
    return true;
}

} // namespace sympow
