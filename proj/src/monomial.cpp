#include "sympow/monomial.hpp"

#include "sympow/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace sympow {

namespace {

void check_lengths(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw DomainError("exponent vectors of different lengths " + std::to_string(a.size()) +
                          " and " + std::to_string(b.size()));
}

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars())
        throw DomainError("ideals live in rings with " + std::to_string(a.nvars()) + " and " +
                          std::to_string(b.nvars()) + " variables");
}

// Enumerates all exponent vectors of total degree `d` in r variables.
template <typename F>
void for_each_monomial_of_degree(std::size_t r, std::int64_t d, F&& f) {
    if (r == 0) {
        if (d == 0) f(ExponentVector(0));
        return;
    }
    std::vector<Exponent> e(r, 0);
    // Recursive composition enumeration.
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
        if (i + 1 == r) {
            e[i] = static_cast<Exponent>(left);
            f(ExponentVector(e));
            return;
        }
        for (std::int64_t k = left; k >= 0; --k) {
            e[i] = static_cast<Exponent>(k);
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, d);
}

} // namespace

Exponent checked_add(Exponent a, Exponent b) {
    Exponent out;
    if (__builtin_add_overflow(a, b, &out)) throw DomainError("exponent overflow");
    return out;
}

ExponentVector::ExponentVector(std::vector<Exponent> entries) : e_(std::move(entries)) {
    for (Exponent x : e_)
        if (x < 0) throw DomainError("negative exponent " + std::to_string(x));
}

ExponentVector ExponentVector::unit(std::size_t r, std::size_t i) {
    if (i >= r) throw DomainError("variable index out of range");
    ExponentVector v(r);
    v.e_[i] = 1;
    return v;
}

ExponentVector ExponentVector::from_mask(std::size_t r, VarMask mask) {
    ExponentVector v(r);
    for (std::size_t i = 0; i < r; ++i)
        if (mask >> i & 1U) v.e_[i] = 1;
    return v;
}

void ExponentVector::set(std::size_t i, Exponent value) {
    if (value < 0) throw DomainError("negative exponent " + std::to_string(value));
    e_.at(i) = value;
}

std::int64_t ExponentVector::degree() const noexcept {
    std::int64_t d = 0;
    for (Exponent x : e_) d += x;
    return d;
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
    const std::size_t n = e_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

VarMask ExponentVector::support() const noexcept {
    VarMask m = 0;
    for (std::size_t i = 0; i < e_.size() && i < kMaxVariables; ++i)
        if (e_[i] != 0) m |= VarMask{1} << i;
    return m;
}

bool ExponentVector::is_squarefree() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x <= 1; });
}

bool ExponentVector::is_zero() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

ExponentVector ExponentVector::lcm(const ExponentVector& other) const {
    check_lengths(*this, other);
    ExponentVector out(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = std::max(e_[i], other.e_[i]);
    return out;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
    check_lengths(*this, other);
    ExponentVector out(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = checked_add(e_[i], other.e_[i]);
    return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
    check_lengths(*this, other);
    ExponentVector out(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        out.e_[i] = e_[i] - other.e_[i];
        if (out.e_[i] < 0) throw DomainError("monomial quotient is not a monomial");
    }
    return out;
}

ExponentVector ExponentVector::scaled(Exponent n) const {
    if (n < 0) throw DomainError("negative scale factor");
    ExponentVector out(*this);
    for (auto& x : out.e_)
        if (__builtin_mul_overflow(x, n, &x)) throw DomainError("exponent overflow");
    return out;
}

// ---------------------------------------------------------------------------

MonomialIdeal MonomialIdeal::minimize(std::vector<ExponentVector> gens, std::size_t r) {
    if (gens.empty()) throw DomainError("zero ideal unsupported");
    if (r > kMaxVariables)
        throw DomainError("at most " + std::to_string(kMaxVariables) + " variables supported");
    for (const auto& g : gens)
        if (g.size() != r)
            throw DomainError("generator of length " + std::to_string(g.size()) +
                              " in a ring with " + std::to_string(r) + " variables");

    // Candidates in order of increasing degree can only be divided by earlier ones.
    std::vector<std::pair<std::int64_t, std::size_t>> order;
    order.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) order.emplace_back(gens[i].degree(), i);
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return gens[a.second] < gens[b.second];
    });

    std::vector<ExponentVector> kept;
    std::vector<VarMask> kept_support;
    for (const auto& [deg, idx] : order) {
        const ExponentVector& cand = gens[idx];
        const VarMask cs = cand.support();
        bool redundant = false;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            if ((kept_support[k] & ~cs) != 0) continue;
            if (kept[k].divides(cand)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            kept.push_back(cand);
            kept_support.push_back(cs);
        }
    }
    std::sort(kept.begin(), kept.end());
    return MonomialIdeal(r, std::move(kept));
}

MonomialIdeal MonomialIdeal::unit(std::size_t r) {
    return MonomialIdeal(r, {ExponentVector(r)});
}

MonomialIdeal MonomialIdeal::prime(std::size_t r, VarMask vars) {
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i < r; ++i)
        if (vars >> i & 1U) gens.push_back(ExponentVector::unit(r, i));
    return minimize(std::move(gens), r);
}

bool MonomialIdeal::is_unit() const noexcept {
    return gens_.size() == 1 && gens_.front().is_zero();
}

bool MonomialIdeal::is_squarefree() const noexcept {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const ExponentVector& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
    if (m.size() != r_) throw DomainError("monomial length does not match the ring");
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const ExponentVector& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    check_same_ring(*this, other);
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const ExponentVector& g) { return contains(g); });
}

std::int64_t MonomialIdeal::max_gen_degree() const noexcept {
    std::int64_t d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

std::int64_t MonomialIdeal::min_gen_degree() const noexcept {
    std::int64_t d = std::numeric_limits<std::int64_t>::max();
    for (const auto& g : gens_) d = std::min(d, g.degree());
    return d;
}

ExponentVector MonomialIdeal::join() const {
    ExponentVector j(r_);
    for (const auto& g : gens_) j = j.lcm(g);
    return j;
}

VarMask MonomialIdeal::support() const noexcept {
    VarMask m = 0;
    for (const auto& g : gens_) m |= g.support();
    return m;
}

// ---------------------------------------------------------------------------

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<ExponentVector> lcms;
    lcms.reserve(a.size() * b.size());
    for (const auto& g : a.gens())
        for (const auto& h : b.gens()) lcms.push_back(g.lcm(h));
    return MonomialIdeal::minimize(std::move(lcms), a.nvars());
}

MonomialIdeal intersect(std::span<const MonomialIdeal> ideals) {
    if (ideals.empty()) throw DomainError("intersection of an empty family");
    MonomialIdeal acc = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
    return acc;
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<ExponentVector> prods;
    prods.reserve(a.size() * b.size());
    for (const auto& g : a.gens())
        for (const auto& h : b.gens()) prods.push_back(g + h);
    return MonomialIdeal::minimize(std::move(prods), a.nvars());
}

MonomialIdeal power(const MonomialIdeal& ideal, int n) {
    if (n < 0) throw DomainError("negative power");
    MonomialIdeal acc = MonomialIdeal::unit(ideal.nvars());
    for (int k = 0; k < n; ++k) acc = multiply(acc, ideal);
    return acc;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<ExponentVector> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal::minimize(std::move(gens), a.nvars());
}

MonomialIdeal saturate_vars(const MonomialIdeal& ideal, VarMask vars) {
    const std::size_t r = ideal.nvars();
    if (r < kMaxVariables && (vars >> r) != 0) throw DomainError("variable subset out of range");
    std::vector<ExponentVector> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.gens()) {
        ExponentVector h = g;
        for (std::size_t i = 0; i < r; ++i)
            if (vars >> i & 1U) h.set(i, 0);
        gens.push_back(std::move(h));
    }
    return MonomialIdeal::minimize(std::move(gens), r);
}

MonomialIdeal component_ideal(const MonomialIdeal& ideal, std::int64_t d) {
    if (d < ideal.min_gen_degree())
        throw DomainError("component in degree " + std::to_string(d) + " is the zero ideal");
    const std::size_t r = ideal.nvars();
    std::vector<ExponentVector> gens;
    for (const auto& g : ideal.gens()) {
        const std::int64_t gd = g.degree();
        if (gd > d) continue;
        for_each_monomial_of_degree(r, d - gd, [&](const ExponentVector& m) { gens.push_back(g + m); });
    }
    return MonomialIdeal::minimize(std::move(gens), r);
}

MonomialIdeal degree_truncation(const MonomialIdeal& ideal, std::int64_t d) {
    std::vector<ExponentVector> gens;
    for (const auto& g : ideal.gens())
        if (g.degree() <= d) gens.push_back(g);
    if (gens.empty())
        throw DomainError("no minimal generator of degree <= " + std::to_string(d));
    return MonomialIdeal::minimize(std::move(gens), ideal.nvars());
}

bool is_minimal_generator(const MonomialIdeal& ideal, const ExponentVector& m) {
    if (!ideal.contains(m)) throw DomainError("monomial is not in the ideal");
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        ExponentVector lower = m;
        lower.set(i, m[i] - 1);
        if (ideal.contains(lower)) return false;
    }
    return true;
}

} // namespace sympow
