#pragma once

// Multigraded Betti numbers of monomial ideals through upper Koszul simplicial
// complexes: beta_{i,a}(I) = dim H~_{i-1}(K^a(I); k).

#include "sympow/monomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sympow {

/// Coefficient field: the rationals or GF(p).
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    /// Throws DomainError unless p is a prime below 2^31.
    static FieldSpec prime(std::uint32_t p);
    /// "q" or "zp:P".
    static FieldSpec parse(const std::string& text);

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint32_t characteristic() const noexcept { return p_; }
    /// "QQ" or "ZZ/p".
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// A finite simplicial complex on vertices {0..n-1}, stored by its facets.
/// The void complex (no faces) and the irrelevant complex {∅} are distinct.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(std::size_t n) { return SimplicialComplex(n, {}); }
    static SimplicialComplex irrelevant(std::size_t n) { return SimplicialComplex(n, {0}); }
    /// Downward closure of `faces`; an empty list gives the void complex.
    static SimplicialComplex from_faces(std::size_t n, std::vector<VarMask> faces);

    std::size_t n_vertices() const noexcept { return n_; }
    const std::vector<VarMask>& facets() const noexcept { return facets_; }
    bool is_void() const noexcept { return facets_.empty(); }
    bool contains(VarMask face) const noexcept;
    VarMask vertex_set() const noexcept;
    /// A vertex lying in every facet, if any.
    std::optional<std::size_t> cone_apex() const noexcept;
    /// All faces, grouped by cardinality (index 0 holds the empty face).
    std::vector<std::vector<VarMask>> faces_by_size() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(std::size_t n, std::vector<VarMask> facets) : n_(n), facets_(std::move(facets)) {}
    std::size_t n_;
    std::vector<VarMask> facets_;
};

/// K^a(I) = { squarefree t : x^(a - t) in I } on the vertex set supp(a).
SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const ExponentVector& alpha);

/// Ranks of H~_{-1}, H~_0, ..., H~_{n-1}. All zero for the void complex.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, const FieldSpec& field);

/// Same, computed on the full face poset without the nerve reduction.
std::vector<std::size_t> reduced_homology_ranks_direct(const SimplicialComplex& complex,
                                                       const FieldSpec& field);

struct BettiEntry {
    int i = 0;
    ExponentVector degree;
    std::size_t beta = 0;

    friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

class BettiTable {
public:
    BettiTable(std::size_t r, FieldSpec field, std::vector<BettiEntry> entries);

    std::size_t nvars() const noexcept { return r_; }
    const FieldSpec& field() const noexcept { return field_; }
    /// Sorted by homological index, then degree.
    const std::vector<BettiEntry>& entries() const noexcept { return entries_; }

    std::size_t beta(int i, const ExponentVector& degree) const;
    /// Total Betti number beta_i.
    std::size_t total(int i) const;
    /// Graded Betti numbers beta_{i,j} keyed by (i, j).
    std::map<std::pair<int, std::int64_t>, std::size_t> graded() const;

    /// t_i: largest total degree at index i; nullopt when beta_i = 0.
    std::optional<std::int64_t> t(int i) const;
    std::int64_t reg() const;
    int pd() const;
    /// depth(R/I) = r - pd(I) - 1.
    std::int64_t depth_quotient() const;

private:
    std::size_t r_;
    FieldSpec field_;
    std::vector<BettiEntry> entries_;
};

struct HomologyCaps {
    std::uint64_t max_box = 1'000'000;
    unsigned threads = 1;
};

/// Multigraded Betti table over the box [0, join of generators], skipping
/// degrees outside I and degrees whose upper Koszul complex is a cone.
BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rationals(),
                       const HomologyCaps& caps = {});

/// beta_{i,a}(I) for every i at a single degree, without cone pruning.
std::vector<std::size_t> betti_at(const MonomialIdeal& ideal, const ExponentVector& alpha,
                                  const FieldSpec& field = FieldSpec::rationals());

} // namespace sympow
