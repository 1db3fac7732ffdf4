#include "sympow/linearity.hpp"

#include "sympow/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sympow {

bool has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field, const HomologyCaps& caps) {
    const std::int64_t d = ideal.max_gen_degree();
    if (ideal.min_gen_degree() != d) throw DomainError("generators have mixed degrees");
    if (ideal.is_unit()) return true;
    return betti_table(ideal, field, caps).reg() == d;
}

bool is_componentwise_linear(const MonomialIdeal& ideal, const FieldSpec& field, const HomologyCaps& caps) {
    if (ideal.is_unit()) return true;
    std::set<std::int64_t> degrees;
    for (const auto& g : ideal.gens()) degrees.insert(g.degree());
    for (std::int64_t j : degrees) {
        if (betti_table(degree_truncation(ideal, j), field, caps).reg() != j) return false;
    }
    return true;
}

bool is_componentwise_linear_by_components(const MonomialIdeal& ideal, const FieldSpec& field,
                                           const HomologyCaps& caps) {
    if (ideal.is_unit()) return true;
    for (std::int64_t d = ideal.min_gen_degree(); d <= ideal.max_gen_degree(); ++d)
        if (!has_linear_resolution(component_ideal(ideal, d), field, caps)) return false;
    return true;
}

bool is_betti_splitting(const MonomialIdeal& p, const MonomialIdeal& i, const MonomialIdeal& j,
                        const FieldSpec& field, const HomologyCaps& caps) {
    if (!(p == sum(i, j))) throw DomainError("P is not I + J");
    const auto bp = betti_table(p, field, caps);
    const auto bi = betti_table(i, field, caps);
    const auto bj = betti_table(j, field, caps);
    const auto bij = betti_table(intersect(i, j), field, caps);
    const int top = std::max({bp.pd(), bi.pd(), bj.pd(), bij.pd() + 1});
    for (int k = 0; k <= top; ++k) {
        const std::size_t rhs = bi.total(k) + bj.total(k) + (k > 0 ? bij.total(k - 1) : 0);
        if (bp.total(k) != rhs) return false;
    }
    return true;
}

std::string rule_name(SplitStep::Rule rule) {
    switch (rule) {
    case SplitStep::Rule::Unit: return "unit";
    case SplitStep::Rule::Principal: return "principal";
    case SplitStep::Rule::Linear: return "linear";
    case SplitStep::Rule::Shift: return "shift";
    case SplitStep::Rule::Split: return "split";
    }
    return "?";
}

namespace {

class Prover {
public:
    Prover(const FieldSpec& field, const HomologyCaps& caps) : field_(field), caps_(caps) {}

    std::optional<SplitStep> prove(const MonomialIdeal& ideal, std::size_t eliminations) {
        if (eliminations > ideal.nvars()) return std::nullopt;
        if (ideal.is_unit()) return SplitStep{SplitStep::Rule::Unit, ideal, 0, {}};
        if (ideal.size() == 1) return SplitStep{SplitStep::Rule::Principal, ideal, 0, {}};
        if (auto it = failed_.find(ideal.gens()); it != failed_.end() && it->second <= eliminations)
            return std::nullopt;

        if (ideal.min_gen_degree() == ideal.max_gen_degree()) {
            try {
                if (has_linear_resolution(ideal, field_, caps_))
                    return SplitStep{SplitStep::Rule::Linear, ideal, 0, {}};
            } catch (const CapExceeded&) {
                // Fall through to the splitting search.
            }
        }

        const std::size_t r = ideal.nvars();
        for (std::size_t x = 0; x < r; ++x) {
            std::vector<ExponentVector> quotient, rest;
            for (const auto& g : ideal.gens()) {
                if (g[x] > 0) quotient.push_back(g - ExponentVector::unit(r, x));
                else rest.push_back(g);
            }
            if (quotient.empty()) continue;
            const auto inner = MonomialIdeal::minimize(std::move(quotient), r);
            if (rest.empty()) {
                if (auto sub = prove(inner, eliminations))
                    return SplitStep{SplitStep::Rule::Shift, ideal, x, {std::move(*sub)}};
                continue;
            }
            const auto tail = MonomialIdeal::minimize(std::move(rest), r);
            // T ⊆ m I': every generator of T is a proper multiple of a generator of I'.
            const bool inside = std::all_of(tail.gens().begin(), tail.gens().end(), [&](const ExponentVector& t) {
                return std::any_of(inner.gens().begin(), inner.gens().end(),
                                   [&](const ExponentVector& g) { return g.divides(t) && !(g == t); });
            });
            if (!inside) continue;
            auto left = prove(inner, eliminations);
            if (!left) continue;
            auto right = prove(tail, eliminations + 1);
            if (!right) continue;
            return SplitStep{SplitStep::Rule::Split, ideal, x, {std::move(*left), std::move(*right)}};
        }
        auto [it, fresh] = failed_.emplace(ideal.gens(), eliminations);
        if (!fresh) it->second = std::min(it->second, eliminations);
        return std::nullopt;
    }

private:
    FieldSpec field_;
    HomologyCaps caps_;
    // Smallest elimination count at which each ideal was already refuted.
    std::map<std::vector<ExponentVector>, std::size_t> failed_;
};

} // namespace

KoszulVerdict koszul_split_prover(const MonomialIdeal& ideal, const FieldSpec& field, const HomologyCaps& caps) {
    Prover prover(field, caps);
    auto cert = prover.prove(ideal, 0);
    return KoszulVerdict{cert.has_value(), std::move(cert)};
}

} // namespace sympow
