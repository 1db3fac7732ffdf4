#include "sympow/graph.hpp"

#include "sympow/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

namespace sympow {

namespace {

int popcount(VarMask m) { return std::popcount(m); }

VarMask bit(std::size_t i) { return VarMask{1} << i; }

} // namespace

Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(labels)) {
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    idx.reserve(edges.size());
    if (labels_.size() > kMaxVariables) throw DomainError("at most 64 vertices supported");
    for (const auto& [a, b] : edges) idx.emplace_back(index_of(a), index_of(b));
    build(std::move(idx));
}

Graph::Graph(std::vector<std::string> labels, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : labels_(std::move(labels)) {
    if (labels_.size() > kMaxVariables) throw DomainError("at most 64 vertices supported");
    build(std::move(edges));
}

void Graph::build(std::vector<std::pair<std::size_t, std::size_t>> edges) {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("duplicate vertex label");
    adjacency_.assign(labels_.size(), 0);
    for (auto& [a, b] : edges) {
        if (a >= labels_.size() || b >= labels_.size()) throw DomainError("edge endpoint out of range");
        if (a == b) throw DomainError("loop at vertex " + labels_[a]);
        if (a > b) std::swap(a, b);
        if (adjacency_[a] & bit(b))
            throw DomainError("duplicate edge " + labels_[a] + "-" + labels_[b]);
        adjacency_[a] |= bit(b);
        adjacency_[b] |= bit(a);
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
}

Graph Graph::complete(std::size_t m) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < m; ++i) labels.push_back("v" + std::to_string(i + 1));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) edges.emplace_back(i, j);
    return Graph(std::move(labels), std::move(edges));
}

VarMask Graph::all() const noexcept {
    return labels_.size() == 64 ? ~VarMask{0} : bit(labels_.size()) - 1;
}

VarMask Graph::open_neighbourhood(VarMask s) const {
    VarMask n = 0;
    for (VarMask rest = s; rest; rest &= rest - 1) n |= adjacency_[std::countr_zero(rest)];
    return n & ~s;
}

bool Graph::is_independent(VarMask s) const {
    for (VarMask rest = s; rest; rest &= rest - 1)
        if (adjacency_[std::countr_zero(rest)] & s) return false;
    return true;
}

bool Graph::has_isolated_vertex() const {
    return std::any_of(adjacency_.begin(), adjacency_.end(), [](VarMask m) { return m == 0; });
}

std::size_t Graph::degree(std::size_t v) const { return static_cast<std::size_t>(popcount(adjacency_.at(v))); }

bool Graph::induced_has_no_bipartite_component(VarMask s) const {
    VarMask unseen = s;
    std::vector<int> colour(labels_.size(), -1);
    while (unseen) {
        const std::size_t root = static_cast<std::size_t>(std::countr_zero(unseen));
        bool bipartite = true;
        std::deque<std::size_t> queue{root};
        colour[root] = 0;
        unseen &= ~bit(root);
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (VarMask nb = adjacency_[u] & s; nb; nb &= nb - 1) {
                const std::size_t w = static_cast<std::size_t>(std::countr_zero(nb));
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[u];
                    unseen &= ~bit(w);
                    queue.push_back(w);
                } else if (colour[w] == colour[u]) {
                    bipartite = false;
                }
            }
        }
        if (bipartite) return false;
    }
    return true;
}

std::size_t Graph::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw DomainError("unknown vertex " + label);
    return static_cast<std::size_t>(it - labels_.begin());
}

MonomialIdeal cover_ideal(const Graph& g) {
    if (g.edges().empty()) throw DomainError("edgeless graph has the unit cover ideal");
    std::vector<MonomialIdeal> primes;
    for (const auto& [a, b] : g.edges()) primes.push_back(MonomialIdeal::prime(g.size(), bit(a) | bit(b)));
    return intersect(primes);
}

Graph corona(const Graph& g, int s) {
    if (s < 1) throw DomainError("corona needs s >= 1");
    auto labels = g.labels();
    auto edges = g.edges();
    const std::size_t n = g.size();
    if (n * static_cast<std::size_t>(s + 1) > kMaxVariables) throw DomainError("at most 64 vertices supported");
    for (std::size_t v = 0; v < n; ++v) {
        for (int k = 1; k <= s; ++k) {
            labels.push_back(g.labels()[v] + "_p" + std::to_string(k));
            edges.emplace_back(v, labels.size() - 1);
        }
    }
    return Graph(std::move(labels), std::move(edges));
}

Rational delta_formula(const Graph& g, const GraphCaps& caps) {
    if (g.size() == 0) throw DomainError("empty graph");
    if (g.has_isolated_vertex()) throw DomainError("graph has an isolated vertex");

    const VarMask everything = g.all();
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    std::uint64_t visited = 0;

    // S is built from `chosen`; `free` holds vertices that may still join it.
    auto recurse = [&](auto&& self, VarMask chosen, VarMask free) -> void {
        if (!free) {
            if (++visited > caps.max_independent_sets)
                throw CapExceeded("max_independent_sets", "too many independent sets");
            const VarMask nbhd = g.open_neighbourhood(chosen);
            if (g.induced_has_no_bipartite_component(everything & ~(chosen | nbhd)))
                best = std::max<std::int64_t>(best, popcount(nbhd) - popcount(chosen));
            return;
        }
        std::size_t pick = 0;
        int top = -1;
        for (VarMask rest = free; rest; rest &= rest - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(rest));
            const int d = popcount(g.neighbours(v) & free);
            if (d > top) top = d, pick = v;
        }
        self(self, chosen | bit(pick), free & ~(bit(pick) | g.neighbours(pick)));
        self(self, chosen, free & ~bit(pick));
    };
    recurse(recurse, 0, everything);
    if (best == std::numeric_limits<std::int64_t>::min())
        throw InternalError("no independent set qualifies");
    Rational value(static_cast<long>(g.size()) + best, 2);
    value.canonicalize();
    return value;
}

MonomialIdeal symbolic_power_cover(const Graph& g, int n, bool direct) {
    if (n < 1) throw DomainError("symbolic power exponent must be positive");
    auto edgewise = [&](int k) {
        if (g.edges().empty()) throw DomainError("edgeless graph has the unit cover ideal");
        std::vector<MonomialIdeal> parts;
        for (const auto& [a, b] : g.edges())
            parts.push_back(power(MonomialIdeal::prime(g.size(), bit(a) | bit(b)), k));
        return intersect(parts);
    };
    if (direct || n == 1) return edgewise(n);
    const auto j2 = edgewise(2);
    const auto even = power(j2, n / 2);
    return n % 2 == 0 ? even : multiply(edgewise(1), even);
}

std::vector<ExponentVector> cover_symbolic_generators(const Graph& g, int n,
                                                      std::optional<std::int64_t> degree,
                                                      std::uint64_t max_nodes) {
    if (n < 1) throw DomainError("symbolic power exponent must be positive");
    if (g.has_isolated_vertex()) throw DomainError("graph has an isolated vertex");
    const std::size_t r = g.size();

    // Breadth-first order from the vertex of largest degree keeps neighbourhoods
    // closing early.
    std::vector<std::size_t> order;
    std::vector<bool> placed(r, false);
    while (order.size() < r) {
        std::size_t root = r;
        for (std::size_t v = 0; v < r; ++v)
            if (!placed[v] && (root == r || g.degree(v) > g.degree(root))) root = v;
        std::deque<std::size_t> queue{root};
        placed[root] = true;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (VarMask nb = g.neighbours(u); nb; nb &= nb - 1) {
                const auto w = static_cast<std::size_t>(std::countr_zero(nb));
                if (!placed[w]) placed[w] = true, queue.push_back(w);
            }
        }
    }
    std::vector<std::size_t> position(r);
    for (std::size_t k = 0; k < r; ++k) position[order[k]] = k;
    // closes[k]: vertices whose closed neighbourhood is fully assigned once order[k] is.
    std::vector<std::vector<std::size_t>> closes(r);
    for (std::size_t u = 0; u < r; ++u) {
        std::size_t last = position[u];
        for (VarMask nb = g.neighbours(u); nb; nb &= nb - 1)
            last = std::max(last, position[static_cast<std::size_t>(std::countr_zero(nb))]);
        closes[last].push_back(u);
    }

    std::vector<Exponent> alpha(r, 0);
    std::vector<ExponentVector> out;
    std::uint64_t nodes = 0;
    auto fixed_point = [&](std::size_t u) {
        Exponent low = n;
        for (VarMask nb = g.neighbours(u); nb; nb &= nb - 1)
            low = std::min(low, alpha[static_cast<std::size_t>(std::countr_zero(nb))]);
        return alpha[u] == std::max<Exponent>(0, n - low);
    };
    auto recurse = [&](auto&& self, std::size_t k, std::int64_t deg) -> void {
        if (++nodes > max_nodes) throw CapExceeded("max_search_nodes", "generator enumeration too large");
        if (degree && deg > *degree) return;
        if (k == r) {
            if (!degree || deg == *degree) out.emplace_back(alpha);
            return;
        }
        const std::size_t v = order[k];
        Exponent low = 0;
        for (VarMask nb = g.neighbours(v); nb; nb &= nb - 1) {
            const auto w = static_cast<std::size_t>(std::countr_zero(nb));
            if (position[w] < k) low = std::max<Exponent>(low, n - alpha[w]);
        }
        for (Exponent a = low; a <= n; ++a) {
            alpha[v] = a;
            if (std::all_of(closes[k].begin(), closes[k].end(), fixed_point)) self(self, k + 1, deg + a);
        }
        alpha[v] = 0;
    };
    recurse(recurse, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool is_cover_symbolic_min_gen(const Graph& g, const std::vector<Exponent>& alpha, int n) {
    for (const auto& [a, b] : g.edges())
        if (alpha[a] + alpha[b] < n) return false;
    for (std::size_t u = 0; u < g.size(); ++u) {
        if (alpha[u] == 0) continue;
        bool tight = false;
        for (VarMask nb = g.neighbours(u); nb && !tight; nb &= nb - 1)
            tight = alpha[u] + alpha[static_cast<std::size_t>(std::countr_zero(nb))] == n;
        if (!tight) return false;
    }
    return true;
}

} // namespace

bool SymbolicProfile::consistent() const { return Rational(d1) <= 2 * delta && e <= d1; }

SymbolicProfile compute_e(const Graph& g, const GraphCaps& caps) {
    SymbolicProfile p;
    p.r = g.size();
    p.delta = delta_formula(g, caps);
    const auto j = cover_ideal(g);
    p.d1 = j.max_gen_degree();
    Rational half_r(static_cast<long>(p.r), 2);
    half_r.canonicalize();
    if (p.delta == Rational(p.d1) || p.delta == half_r) {
        p.e = p.d1;
        p.fast_path = true;
        return p;
    }
    const Rational twice = 2 * p.delta;
    if (twice.get_den() != 1) throw InternalError("2 delta is not an integer");
    const auto top = cover_symbolic_generators(g, 2, twice.get_num().get_si(), caps.max_search_nodes);
    std::uint64_t checks = 0;
    std::int64_t e = -1;
    std::vector<Exponent> product(p.r);
    for (const auto& m2 : j.gens()) {
        if (m2.degree() <= e) continue;
        for (const auto& m1 : top) {
            if (++checks > caps.max_pair_checks) throw CapExceeded("max_pair_checks", "too many pairs for e");
            for (std::size_t i = 0; i < p.r; ++i) product[i] = m1[i] + m2[i];
            if (is_cover_symbolic_min_gen(g, product, 3)) {
                e = m2.degree();
                break;
            }
        }
    }
    if (e < 0) throw InternalError("no pair (m1, m2) qualifies");
    p.e = e;
    return p;
}

std::int64_t d_symbolic_formula(const SymbolicProfile& profile, int n) {
    if (n < 1) throw DomainError("symbolic power exponent must be positive");
    const std::int64_t s = n / 2;
    const Rational even = profile.delta * 2 * static_cast<long>(s);
    if (even.get_den() != 1) throw InternalError("2 delta is not an integer");
    const std::int64_t base = even.get_num().get_si();
    if (n % 2 == 0) return base;
    if (s < profile.d1 - profile.e) throw DomainError("formula not guaranteed");
    return base + profile.e;
}

bool vertex_structure_validator(const Graph& g, const RationalVector& v) {
    if (v.size() != g.size()) return false;
    const Rational half(1, 2);
    VarMask s0 = 0, s1 = 0, sh = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) s0 |= bit(i);
        else if (v[i] == 1) s1 |= bit(i);
        else if (v[i] == half) sh |= bit(i);
        else return false;
    }
    if (!g.is_independent(s0)) return false;
    if (s1 != g.open_neighbourhood(s0)) return false;
    if (!g.induced_has_no_bipartite_component(sh)) return false;
    for (std::size_t u = 0; u < g.size(); ++u) {
        if (g.degree(u) != 1 || (s0 & bit(u))) continue;
        if (g.neighbours(u) & s1) return false;
    }
    return true;
}

} // namespace sympow
