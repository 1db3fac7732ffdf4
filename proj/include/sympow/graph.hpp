#pragma once

// Simple graphs and the combinatorics of their cover ideals
// J(G) = ∩_{ij in E(G)} (x_i, x_j).

#include "sympow/monomial.hpp"
#include "sympow/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sympow {

/// Simple undirected graph on labelled vertices 0..n-1 (at most 64).
class Graph {
public:
    Graph() = default;
    /// Throws DomainError on duplicate labels, loops, duplicate edges or unknown endpoints.
    Graph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges);
    Graph(std::vector<std::string> labels, std::vector<std::pair<std::size_t, std::size_t>> edges);

    static Graph complete(std::size_t m);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Edges (i, j) with i < j, sorted.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
    VarMask neighbours(std::size_t v) const { return adjacency_.at(v); }
    VarMask all() const noexcept;

    /// N(S): vertices outside S adjacent to S.
    VarMask open_neighbourhood(VarMask s) const;
    /// N[S] = S ∪ N(S).
    VarMask closed_neighbourhood(VarMask s) const { return s | open_neighbourhood(s); }
    bool is_independent(VarMask s) const;
    bool has_isolated_vertex() const;
    std::size_t degree(std::size_t v) const;

    /// Every connected component of the induced graph on `s` contains an odd
    /// cycle. Vacuously true when s is empty.
    bool induced_has_no_bipartite_component(VarMask s) const;

    std::size_t index_of(const std::string& label) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void build(std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::vector<std::string> labels_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<VarMask> adjacency_;
};

struct GraphCaps {
    std::uint64_t max_independent_sets = 2'000'000;
    std::uint64_t max_pair_checks = 10'000'000;
    std::uint64_t max_search_nodes = 1'000'000'000;
};

/// Intersection of the edge primes; throws DomainError for an edgeless graph.
MonomialIdeal cover_ideal(const Graph& g);

/// cg(G, s): s pendant edges at every vertex. Leaves of v are labelled v_p1..v_ps
/// and listed after the base vertices.
Graph corona(const Graph& g, int s);

/// r/2 + max{|N(S)| - |S|}/2 over independent S with G \ N[S] free of
/// bipartite components. Throws DomainError when G has an isolated vertex.
Rational delta_formula(const Graph& g, const GraphCaps& caps = {});

/// J^(n) via J^(2s) = (J^(2))^s and J^(2s+1) = J (J^(2))^s, or directly as
/// the intersection of the n-th powers of the edge primes.
MonomialIdeal symbolic_power_cover(const Graph& g, int n, bool direct = false);

/// G(J^(n)) by backtracking on the characterization of minimal generators:
/// alpha_u = max(0, n - min_{v in N(u)} alpha_v) for every vertex u. With
/// `degree` set, only generators of that degree are returned. Sorted.
std::vector<ExponentVector> cover_symbolic_generators(const Graph& g, int n,
                                                      std::optional<std::int64_t> degree = std::nullopt,
                                                      std::uint64_t max_nodes = 1'000'000'000);

struct SymbolicProfile {
    Rational delta;
    std::int64_t d1 = 0;  // d(J)
    std::int64_t e = 0;
    std::size_t r = 0;
    bool fast_path = false;

    /// d1 <= 2 delta and e <= d1.
    bool consistent() const;
};

/// delta, d(J) and e, where e is the largest degree of m2 in G(J) such that
/// m1 m2 lies in G(J^(3)) for some m1 in G(J^(2)) of degree 2 delta. When
/// delta = d(J) or delta = r/2 the value e = d(J) is returned without search.
SymbolicProfile compute_e(const Graph& g, const GraphCaps& caps = {});

/// Predicted d(J^(n)): 2 s delta for n = 2s, 2 s delta + e for n = 2s + 1 with
/// s >= d1 - e. Throws DomainError("formula not guaranteed") below that.
std::int64_t d_symbolic_formula(const SymbolicProfile& profile, int n);

/// Coordinates in {0, 1/2, 1}; S_0 independent; S_1 = N(S_0); G[S_1/2] has no
/// bipartite component; no leaf outside S_0 hangs off a vertex of S_1.
bool vertex_structure_validator(const Graph& g, const RationalVector& v);

} // namespace sympow
