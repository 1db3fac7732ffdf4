#pragma once

// Linear resolutions, componentwise linearity (Koszulness over a polynomial
// ring), Betti splittings and a one-sided Koszulness prover based on splitting
// off a variable.

#include "sympow/homology.hpp"
#include "sympow/monomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sympow {

/// reg(I) == d for an ideal generated in the single degree d.
/// Throws DomainError when the generators have mixed degrees.
bool has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rationals(),
                           const HomologyCaps& caps = {});

/// Every I_<d> has a d-linear resolution. Evaluated through the degree
/// truncations I_{<=j} (ideal of the generators of degree <= j): I is
/// componentwise linear iff reg(I_{<=j}) = j for every generator degree j.
bool is_componentwise_linear(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rationals(),
                             const HomologyCaps& caps = {});

/// Same predicate evaluated literally: I_<d> has a linear resolution for every
/// d between the minimal and maximal generator degree. Far more expensive.
bool is_componentwise_linear_by_components(const MonomialIdeal& ideal,
                                           const FieldSpec& field = FieldSpec::rationals(),
                                           const HomologyCaps& caps = {});

/// beta_i(P) = beta_i(I) + beta_i(J) + beta_{i-1}(I ∩ J) for all i.
/// Throws DomainError when P != I + J.
bool is_betti_splitting(const MonomialIdeal& p, const MonomialIdeal& i, const MonomialIdeal& j,
                        const FieldSpec& field = FieldSpec::rationals(), const HomologyCaps& caps = {});

/// One node of a Koszulness certificate.
struct SplitStep {
    enum class Rule {
        Unit,       // the whole ring
        Principal,  // one generator
        Linear,     // generated in one degree with a linear resolution
        Shift,      // I = x I', Koszul iff I' is
        Split,      // I = x I' + T with I' Koszul, T in m I'; Koszul iff T is
    };
    Rule rule;
    MonomialIdeal ideal;
    std::size_t variable = 0;        // x, for Shift and Split
    std::vector<SplitStep> children; // Shift: {I'}; Split: {I', T}
};

struct KoszulVerdict {
    bool proved = false;
    std::optional<SplitStep> certificate;
};

/// Searches for a reduction tree proving I componentwise linear. Never
/// disproves: failure to find a tree yields `proved == false` (Unknown).
/// The number of nested variable eliminations is capped at r.
KoszulVerdict koszul_split_prover(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rationals(),
                                  const HomologyCaps& caps = {});

std::string rule_name(SplitStep::Rule rule);

} // namespace sympow
