#include "sympow/error.hpp"
#include "sympow/polyhedra.hpp"
#include "sympow/symbolic.hpp"

namespace sympow {

Rational BoundReport::lower() const {
    const Rational rr(static_cast<long>(r)), ss(static_cast<long>(s)), dd(static_cast<long>(d));
    return delta * n - rr * Rational(rho) * (1 + ss * (rr - 1) * dd);
}

Rational BoundReport::upper() const {
    const Rational rr(static_cast<long>(r)), dd(static_cast<long>(d));
    return delta * n + rr + rr * (rr - 1) * dd;
}

Rational BoundReport::t_bound() const {
    const Rational rr(static_cast<long>(r)), dd(static_cast<long>(d));
    return delta * n + 2 * rr + rr * (Rational(rho) + (rr - 1) * dd);
}

bool BoundReport::general_bounds_hold() const {
    const Rational value(static_cast<long>(d_symbolic));
    return lower() <= value && value <= upper();
}

bool BoundReport::jn_bound_holds() const {
    return Rational(static_cast<long>(d_jn)) < delta * n + static_cast<long>(r);
}

bool BoundReport::squarefree_bound_holds() const {
    return Rational(static_cast<long>(d_symbolic)) <= delta * n;
}

BoundReport bound_report(const MonomialIdeal& ideal, int n) {
    if (n < 1) throw DomainError("n must be positive");
    BoundReport rep;
    const auto decomposition = minimal_decomposition(ideal);
    const auto components = decomposition.ideals();
    rep.r = ideal.nvars();
    rep.s = components.size();
    rep.d = ideal.max_gen_degree();
    mpz_ui_pow_ui(rep.rho.get_mpz_t(), static_cast<unsigned long>(rep.d),
                  static_cast<unsigned long>(rep.r - 1));
    rep.rho *= static_cast<unsigned long>(rep.r * rep.r);
    rep.delta = delta(sp_polyhedron(components));
    rep.n = n;
    rep.d_symbolic = symbolic_power_from_components(decomposition, n).max_gen_degree();
    rep.d_jn = jn(components, n).max_gen_degree();
    rep.squarefree = ideal.is_squarefree();
    return rep;
}

} // namespace sympow
