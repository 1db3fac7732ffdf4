#include "sympow/polyhedra.hpp"

#include "sympow/double_description.hpp"
#include "sympow/error.hpp"
#include "sympow/linalg.hpp"
#include "sympow/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace sympow {

namespace {

std::int64_t to_int64(const BigInt& x) {
    if (!x.fits_slong_p()) throw DomainError("polyhedron coefficient exceeds machine range");
    return x.get_si();
}

std::uint64_t binomial_saturating(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(c);
}

void check_dim(const HPolyhedron& p, const PolyhedraCaps& caps) {
    if (p.dim() > caps.max_dim)
        throw CapExceeded("max_dim", "dimension " + std::to_string(p.dim()) + " exceeds cap " +
                                         std::to_string(caps.max_dim) +
                                         "; use combinatorial fast path");
}

VertexSet vertices_by_subsets(const HPolyhedron& p, const PolyhedraCaps& caps) {
    const std::size_t r = p.dim();
    const auto& hs = p.halfspaces();
    const std::size_t m = hs.size();
    if (m > caps.max_constraints)
        throw CapExceeded("max_constraints", std::to_string(m) + " constraints exceed cap " +
                                                 std::to_string(caps.max_constraints));
    std::set<RationalVector> found;
    if (m < r) return {};
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        RationalMatrix a(r, r);
        std::vector<Rational> b(r);
        for (std::size_t k = 0; k < r; ++k) {
            for (std::size_t j = 0; j < r; ++j) a(k, j) = static_cast<long>(hs[idx[k]].normal()[j]);
            b[k] = static_cast<long>(hs[idx[k]].rhs());
        }
        if (auto sol = solve_unique(std::move(a), std::move(b))) {
            RationalVector v(std::move(*sol));
            if (member(p, v)) found.insert(std::move(v));
        }
        // Next combination.
        std::size_t k = r;
        while (k > 0 && idx[k - 1] == m - r + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return VertexSet(found.begin(), found.end());
}

VertexSet vertices_by_double_description(const HPolyhedron& p) {
    const std::size_t r = p.dim();
    // Homogenize: (t, x) with <a,x> - b t >= 0 and t >= 0.
    std::vector<dd::IntVector> rows;
    for (const auto& h : p.halfspaces()) {
        dd::IntVector row(r + 1);
        row[0] = static_cast<long>(-h.rhs());
        for (std::size_t j = 0; j < r; ++j) row[j + 1] = static_cast<long>(h.normal()[j]);
        rows.push_back(std::move(row));
    }
    dd::IntVector t_row(r + 1, BigInt(0));
    t_row[0] = 1;
    rows.push_back(std::move(t_row));

    std::set<RationalVector> found;
    for (const auto& ray : dd::extreme_rays(rows)) {
        if (sgn(ray[0]) <= 0) continue;
        std::vector<Rational> x(r);
        for (std::size_t j = 0; j < r; ++j) x[j] = Rational(ray[j + 1], ray[0]);
        found.insert(RationalVector(std::move(x)));
    }
    return VertexSet(found.begin(), found.end());
}

} // namespace

// ---------------------------------------------------------------------------

HalfSpace::HalfSpace(std::vector<std::int64_t> a, std::int64_t b) : a_(std::move(a)), b_(b) {
    if (std::all_of(a_.begin(), a_.end(), [](std::int64_t x) { return x == 0; }))
        throw DomainError("halfspace with zero normal");
    std::int64_t g = std::abs(b_);
    for (auto x : a_) g = std::gcd(g, std::abs(x));
    if (g > 1) {
        for (auto& x : a_) x /= g;
        b_ /= g;
    }
}

std::int64_t HalfSpace::normal_weight() const noexcept {
    return std::accumulate(a_.begin(), a_.end(), std::int64_t{0});
}

bool HalfSpace::is_orthant() const noexcept {
    if (b_ != 0) return false;
    int ones = 0;
    for (auto x : a_) {
        if (x == 1) ++ones;
        else if (x != 0) return false;
    }
    return ones == 1;
}

Rational HalfSpace::evaluate(const RationalVector& x) const {
    if (x.size() != a_.size()) throw DomainError("point dimension does not match halfspace");
    Rational s(0);
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != 0) s += x[i] * static_cast<long>(a_[i]);
    return s;
}

bool HalfSpace::satisfied_by(std::span<const Exponent> x) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) s += a_[i] * x[i];
    return s >= b_;
}

HPolyhedron::HPolyhedron(std::size_t r, std::vector<HalfSpace> halfspaces) : r_(r) {
    for (const auto& h : halfspaces)
        if (h.size() != r) throw DomainError("halfspace dimension does not match polyhedron");
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<std::int64_t> e(r, 0);
        e[i] = 1;
        halfspaces.emplace_back(std::move(e), 0);
    }
    std::sort(halfspaces.begin(), halfspaces.end());
    halfspaces.erase(std::unique(halfspaces.begin(), halfspaces.end()), halfspaces.end());
    halfspaces_ = std::move(halfspaces);
}

HPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
    const std::size_t r = ideal.nvars();
    // Cone over the V-representation: rows (1, g) for generators, (0, e_i) for rays.
    // A ray (c, a) of its dual is the valid inequality <a, x> >= -c.
    std::vector<dd::IntVector> rows;
    for (const auto& g : ideal.gens()) {
        dd::IntVector row(r + 1);
        row[0] = 1;
        for (std::size_t j = 0; j < r; ++j) row[j + 1] = g[j];
        rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < r; ++i) {
        dd::IntVector row(r + 1, BigInt(0));
        row[i + 1] = 1;
        rows.push_back(std::move(row));
    }
    std::vector<HalfSpace> hs;
    for (const auto& ray : dd::extreme_rays(rows)) {
        std::vector<std::int64_t> a(r);
        bool zero = true;
        for (std::size_t j = 0; j < r; ++j) {
            a[j] = to_int64(ray[j + 1]);
            zero = zero && a[j] == 0;
        }
        if (zero) continue;
        hs.emplace_back(std::move(a), -to_int64(ray[0]));
    }
    return HPolyhedron(r, std::move(hs));
}

HPolyhedron sp_polyhedron(std::span<const MonomialIdeal> components) {
    if (components.empty()) throw DomainError("no components");
    const std::size_t r = components.front().nvars();
    std::vector<HalfSpace> hs;
    for (const auto& q : components) {
        if (q.nvars() != r) throw DomainError("components live in different rings");
        const auto np = newton_polyhedron(q);
        hs.insert(hs.end(), np.halfspaces().begin(), np.halfspaces().end());
    }
    return HPolyhedron(r, std::move(hs));
}

HPolyhedron sp_polyhedron(const MonomialIdeal& ideal) {
    const auto components = minimal_decomposition(ideal).ideals();
    return sp_polyhedron(components);
}

VertexSet vertices(const HPolyhedron& p, VertexMethod method, const PolyhedraCaps& caps) {
    check_dim(p, caps);
    if (method == VertexMethod::Auto) {
        const bool small = p.halfspaces().size() <= caps.max_constraints &&
                           binomial_saturating(p.halfspaces().size(), p.dim()) <= caps.subset_budget;
        method = small ? VertexMethod::Subsets : VertexMethod::DoubleDescription;
    }
    VertexSet out = method == VertexMethod::Subsets ? vertices_by_subsets(p, caps)
                                                    : vertices_by_double_description(p);
    for (const auto& v : out)
        if (!is_vertex(p, v)) throw InternalError("vertex enumeration returned a non-vertex " + to_string(v));
    return out;
}

bool is_vertex(const HPolyhedron& p, const RationalVector& v) {
    if (!member(p, v)) return false;
    std::vector<const HalfSpace*> tight;
    for (const auto& h : p.halfspaces())
        if (h.evaluate(v) == h.rhs()) tight.push_back(&h);
    RationalMatrix a(tight.size(), p.dim());
    for (std::size_t i = 0; i < tight.size(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j) a(i, j) = static_cast<long>(tight[i]->normal()[j]);
    return rank(std::move(a)) == p.dim();
}

Rational delta(const HPolyhedron& sp, const PolyhedraCaps& caps) {
    const auto vs = vertices(sp, VertexMethod::Auto, caps);
    if (vs.empty()) throw InternalError("polyhedron without vertices");
    Rational best = vs.front().sum();
    for (const auto& v : vs) best = std::max(best, v.sum());
    return best;
}

Rational delta(const MonomialIdeal& ideal, const PolyhedraCaps& caps) {
    return delta(sp_polyhedron(ideal), caps);
}

HPolyhedron scale(const HPolyhedron& p, int n) {
    if (n < 1) throw DomainError("scale factor must be positive");
    std::vector<HalfSpace> hs;
    for (const auto& h : p.halfspaces()) {
        std::int64_t b;
        if (__builtin_mul_overflow(h.rhs(), static_cast<std::int64_t>(n), &b))
            throw DomainError("right-hand side overflow");
        hs.emplace_back(h.normal(), b);
    }
    return HPolyhedron(p.dim(), std::move(hs));
}

bool member(const HPolyhedron& p, const RationalVector& v) {
    if (v.size() != p.dim()) throw DomainError("point dimension does not match polyhedron");
    return std::all_of(p.halfspaces().begin(), p.halfspaces().end(),
                       [&](const HalfSpace& h) { return h.satisfied_by(v); });
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal, const PolyhedraCaps& caps) {
    const std::size_t r = ideal.nvars();
    if (ideal.is_unit()) return ideal;
    const HPolyhedron np = newton_polyhedron(ideal);
    const ExponentVector top = ideal.join();

    std::uint64_t box = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (__builtin_mul_overflow(box, static_cast<std::uint64_t>(top[i]) + 1, &box) || box > caps.max_box)
            throw CapExceeded("max_box", "integral closure box exceeds cap " + std::to_string(caps.max_box));
    }

    std::vector<ExponentVector> points;
    std::vector<Exponent> x(r, 0);
    while (true) {
        if (std::all_of(np.halfspaces().begin(), np.halfspaces().end(),
                        [&](const HalfSpace& h) { return h.satisfied_by(x); }))
            points.emplace_back(x);
        std::size_t i = 0;
        while (i < r && x[i] == top[i]) x[i++] = 0;
        if (i == r) break;
        ++x[i];
    }
    return MonomialIdeal::minimize(std::move(points), r);
}

MonomialIdeal jn(std::span<const MonomialIdeal> components, int n, const PolyhedraCaps& caps) {
    if (n < 1) throw DomainError("n must be positive");
    if (components.empty()) throw DomainError("no components");
    std::vector<MonomialIdeal> closures;
    for (const auto& q : components) closures.push_back(integral_closure(power(q, n), caps));
    return intersect(closures);
}

bool facet_bound_check(const MonomialIdeal& ideal) {
    const std::size_t r = ideal.nvars();
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(ideal.max_gen_degree()),
                  static_cast<unsigned long>(r - 1));
    bound *= static_cast<unsigned long>(r * r);
    const HPolyhedron sp = sp_polyhedron(ideal);
    return std::all_of(sp.halfspaces().begin(), sp.halfspaces().end(), [&](const HalfSpace& h) {
        return BigInt(static_cast<long>(h.normal_weight())) <= bound;
    });
}

} // namespace sympow
