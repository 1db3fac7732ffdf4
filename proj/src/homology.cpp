#include "sympow/homology.hpp"

#include "sympow/error.hpp"
#include "sympow/linalg.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <unordered_set>

namespace sympow {

namespace {

std::size_t boundary_rank(const std::vector<VarMask>& domain, const std::vector<VarMask>& codomain,
                          const FieldSpec& field) {
    if (domain.empty() || codomain.empty()) return 0;
    IntMatrix m(codomain.size(), domain.size());
    for (std::size_t col = 0; col < domain.size(); ++col) {
        const VarMask face = domain[col];
        int position = 0;
        for (VarMask rest = face; rest != 0; rest &= rest - 1, ++position) {
            const VarMask v = rest & -rest;
            const auto it = std::lower_bound(codomain.begin(), codomain.end(), face & ~v);
            m(static_cast<std::size_t>(it - codomain.begin()), col) = (position % 2 == 0) ? 1 : -1;
        }
    }
    return field.is_rational() ? rank_over_rationals(m) : rank_mod_prime(m, field.characteristic());
}

// Facets of the nerve of the cover of a complex by its facets.
std::vector<VarMask> nerve_facets(const std::vector<VarMask>& facets) {
    const std::size_t k = facets.size();
    std::vector<VarMask> faces;
    // Depth-first over index subsets, keeping only those with nonempty intersection.
    auto rec = [&](auto&& self, std::size_t next, VarMask chosen, VarMask meet) -> void {
        bool extended = false;
        for (std::size_t j = next; j < k; ++j) {
            const VarMask m = meet & facets[j];
            if (m == 0) continue;
            extended = true;
            self(self, j + 1, chosen | (VarMask{1} << j), m);
        }
        if (!extended) faces.push_back(chosen);
    };
    rec(rec, 0, 0, ~VarMask{0});
    return faces;
}

} // namespace

// ---------------------------------------------------------------------------

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1U << 31) || !is_prime(p)) throw DomainError("invalid prime " + std::to_string(p));
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "QQ") return rationals();
    if (text.rfind("zp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.size() > 10 ||
            !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw DomainError("invalid prime field '" + text + "'");
        const unsigned long long p = std::stoull(digits);
        if (p > UINT32_MAX) throw DomainError("invalid prime " + digits);
        return prime(static_cast<std::uint32_t>(p));
    }
    throw DomainError("unknown field '" + text + "' (expected q or zp:P)");
}

std::string FieldSpec::name() const {
    return is_rational() ? "QQ" : "ZZ/" + std::to_string(p_);
}

// ---------------------------------------------------------------------------

SimplicialComplex SimplicialComplex::from_faces(std::size_t n, std::vector<VarMask> faces) {
    std::sort(faces.begin(), faces.end(), [](VarMask a, VarMask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<VarMask> facets;
    for (VarMask f : faces) {
        const bool covered = std::any_of(facets.begin(), facets.end(),
                                         [f](VarMask g) { return (f & ~g) == 0; });
        if (!covered) facets.push_back(f);
    }
    std::sort(facets.begin(), facets.end());
    return SimplicialComplex(n, std::move(facets));
}

bool SimplicialComplex::contains(VarMask face) const noexcept {
    return std::any_of(facets_.begin(), facets_.end(), [face](VarMask f) { return (face & ~f) == 0; });
}

VarMask SimplicialComplex::vertex_set() const noexcept {
    VarMask v = 0;
    for (VarMask f : facets_) v |= f;
    return v;
}

std::optional<std::size_t> SimplicialComplex::cone_apex() const noexcept {
    if (facets_.empty()) return std::nullopt;
    VarMask meet = ~VarMask{0};
    for (VarMask f : facets_) meet &= f;
    if (meet == 0) return std::nullopt;
    return static_cast<std::size_t>(std::countr_zero(meet));
}

std::vector<std::vector<VarMask>> SimplicialComplex::faces_by_size() const {
    std::vector<std::vector<VarMask>> groups(n_ + 1);
    if (facets_.empty()) return groups;
    const VarMask verts = vertex_set();
    if (std::popcount(verts) <= 20) {
        // Walk all submasks of the vertex set.
        for (VarMask s = verts;; s = (s - 1) & verts) {
            if (contains(s)) groups[static_cast<std::size_t>(std::popcount(s))].push_back(s);
            if (s == 0) break;
        }
    } else {
        std::unordered_set<VarMask> seen;
        for (VarMask f : facets_)
            for (VarMask s = f;; s = (s - 1) & f) {
                if (seen.insert(s).second) groups[static_cast<std::size_t>(std::popcount(s))].push_back(s);
                if (s == 0) break;
            }
    }
    for (auto& g : groups) std::sort(g.begin(), g.end());
    return groups;
}

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const ExponentVector& alpha) {
    const std::size_t r = ideal.nvars();
    if (alpha.size() != r) throw DomainError("degree length does not match the ring");
    const VarMask supp = alpha.support();
    std::vector<VarMask> faces;
    for (const auto& g : ideal.gens()) {
        if (!g.divides(alpha)) continue;
        // x^(a - t) is divisible by g iff t avoids the coordinates where g is tight.
        VarMask tight = 0;
        for (std::size_t j = 0; j < r; ++j)
            if (alpha[j] > 0 && g[j] == alpha[j]) tight |= VarMask{1} << j;
        faces.push_back(supp & ~tight);
    }
    return SimplicialComplex::from_faces(r, std::move(faces));
}

std::vector<std::size_t> reduced_homology_ranks_direct(const SimplicialComplex& complex,
                                                       const FieldSpec& field) {
    const std::size_t n = complex.n_vertices();
    std::vector<std::size_t> ranks(n + 1, 0);
    if (complex.is_void()) return ranks;
    const auto groups = complex.faces_by_size();
    // boundary[k] = rank of the map from size-k faces to size-(k-1) faces.
    std::vector<std::size_t> boundary(n + 2, 0);
    for (std::size_t k = 1; k <= n; ++k) boundary[k] = boundary_rank(groups[k], groups[k - 1], field);
    for (std::size_t k = 0; k <= n; ++k)
        ranks[k] = groups[k].size() - boundary[k] - boundary[k + 1];
    return ranks;
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, const FieldSpec& field) {
    const std::size_t n = complex.n_vertices();
    const auto& facets = complex.facets();
    if (complex.is_void() || complex.cone_apex()) return std::vector<std::size_t>(n + 1, 0);
    if (facets.front() == 0) return reduced_homology_ranks_direct(complex, field);
    // The nerve of the facet cover is homotopy equivalent and smaller when there
    // are fewer facets than vertices.
    const auto verts = static_cast<std::size_t>(std::popcount(complex.vertex_set()));
    if (facets.size() < verts && facets.size() < kMaxVariables) {
        const auto nerve = SimplicialComplex::from_faces(facets.size(), nerve_facets(facets));
        auto small = reduced_homology_ranks(nerve, field);
        small.resize(n + 1, 0);
        return small;
    }
    return reduced_homology_ranks_direct(complex, field);
}

// ---------------------------------------------------------------------------

BettiTable::BettiTable(std::size_t r, FieldSpec field, std::vector<BettiEntry> entries)
    : r_(r), field_(field), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const BettiEntry& a, const BettiEntry& b) {
        return a.i != b.i ? a.i < b.i : a.degree < b.degree;
    });
}

std::size_t BettiTable::beta(int i, const ExponentVector& degree) const {
    for (const auto& e : entries_)
        if (e.i == i && e.degree == degree) return e.beta;
    return 0;
}

std::size_t BettiTable::total(int i) const {
    std::size_t s = 0;
    for (const auto& e : entries_)
        if (e.i == i) s += e.beta;
    return s;
}

std::map<std::pair<int, std::int64_t>, std::size_t> BettiTable::graded() const {
    std::map<std::pair<int, std::int64_t>, std::size_t> out;
    for (const auto& e : entries_) out[{e.i, e.degree.degree()}] += e.beta;
    return out;
}

std::optional<std::int64_t> BettiTable::t(int i) const {
    std::optional<std::int64_t> best;
    for (const auto& e : entries_)
        if (e.i == i) best = std::max(best.value_or(e.degree.degree()), e.degree.degree());
    return best;
}

std::int64_t BettiTable::reg() const {
    if (entries_.empty()) throw DomainError("empty Betti table");
    std::int64_t best = entries_.front().degree.degree() - entries_.front().i;
    for (const auto& e : entries_) best = std::max(best, e.degree.degree() - e.i);
    return best;
}

int BettiTable::pd() const {
    if (entries_.empty()) throw DomainError("empty Betti table");
    return entries_.back().i;
}

std::int64_t BettiTable::depth_quotient() const {
    return static_cast<std::int64_t>(r_) - pd() - 1;
}

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field, const HomologyCaps& caps) {
    if (ideal.is_unit()) throw DomainError("Betti table of the unit ideal requested");
    const std::size_t r = ideal.nvars();
    const ExponentVector top = ideal.join();
    std::uint64_t box = 1;
    for (std::size_t i = 0; i < r; ++i)
        if (__builtin_mul_overflow(box, static_cast<std::uint64_t>(top[i]) + 1, &box) || box > caps.max_box)
            throw CapExceeded("max_box", "Betti degree box exceeds cap " + std::to_string(caps.max_box) +
                                             "; restrict the ideal or raise --cap max_box");

    const auto& gens = ideal.gens();
    auto scan = [&](std::uint64_t begin, std::uint64_t end, std::vector<BettiEntry>& out) {
        std::vector<Exponent> a(r);
        std::vector<VarMask> faces;
        faces.reserve(gens.size());
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::uint64_t rest = idx;
            VarMask supp = 0;
            for (std::size_t j = 0; j < r; ++j) {
                const auto width = static_cast<std::uint64_t>(top[j]) + 1;
                a[j] = static_cast<Exponent>(rest % width);
                rest /= width;
                if (a[j] > 0) supp |= VarMask{1} << j;
            }
            faces.clear();
            VarMask tight_union = 0;
            for (const auto& g : gens) {
                bool divides = true;
                VarMask tight = 0;
                for (std::size_t j = 0; j < r && divides; ++j) {
                    if (g[j] > a[j]) divides = false;
                    else if (a[j] > 0 && g[j] == a[j]) tight |= VarMask{1} << j;
                }
                if (!divides) continue;
                tight_union |= tight;
                faces.push_back(supp & ~tight);
            }
            // Outside I, or a cone: some support vertex lies in every facet.
            if (faces.empty() || tight_union != supp) continue;
            const auto complex = SimplicialComplex::from_faces(r, faces);
            const auto ranks = reduced_homology_ranks(complex, field);
            for (std::size_t k = 0; k < ranks.size(); ++k)
                if (ranks[k] != 0) out.push_back(BettiEntry{static_cast<int>(k), ExponentVector(a), ranks[k]});
        }
    };

    std::vector<BettiEntry> entries;
    const unsigned threads = std::max(1U, caps.threads);
    if (threads == 1) {
        scan(0, box, entries);
    } else {
        std::vector<std::vector<BettiEntry>> parts(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t begin = box * t / threads, end = box * (t + 1) / threads;
            pool.emplace_back([&, t, begin, end] { scan(begin, end, parts[t]); });
        }
        for (auto& th : pool) th.join();
        for (auto& p : parts) entries.insert(entries.end(), p.begin(), p.end());
    }
    return BettiTable(r, field, std::move(entries));
}

std::vector<std::size_t> betti_at(const MonomialIdeal& ideal, const ExponentVector& alpha,
                                  const FieldSpec& field) {
    return reduced_homology_ranks_direct(upper_koszul(ideal, alpha), field);
}

} // namespace sympow
