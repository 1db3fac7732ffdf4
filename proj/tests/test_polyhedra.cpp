#include "oracles.hpp"
#include "test_support.hpp"

#include "sympow/double_description.hpp"
#include "sympow/error.hpp"
#include "sympow/graph.hpp"
#include "sympow/linalg.hpp"
#include "sympow/polyhedra.hpp"
#include "sympow/symbolic.hpp"

#include <doctest.h>

#include <random>

using namespace sympow;
using testing::parse;

namespace {

RationalVector rv(std::initializer_list<Rational> v) { return RationalVector(v); }

Rational q(long a, long b = 1) {
    Rational x(a, b);
    x.canonicalize();
    return x;
}

HPolyhedron orthant_with(std::size_t r, std::vector<HalfSpace> extra) { return HPolyhedron(r, std::move(extra)); }

} // namespace

TEST_SUITE("polyhedra") {

TEST_CASE("rationals") {
    CHECK(to_string(q(9, 2)) == "9/2");
    CHECK(to_string(q(4, 2)) == "2");
    CHECK(parse_rational("-6/4") == q(-3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK(rv({q(1, 2), 1}).sum() == q(3, 2));
}

TEST_CASE("linear algebra") {
    IntMatrix m(3, 3);
    const std::int64_t data[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = data[i][j];
    CHECK(rank_over_rationals(m) == 2);
    CHECK(rank_mod_prime(m, 3) == 1);
    CHECK(rank_mod_prime(m, 5) == 2);
    CHECK_THROWS(rank_mod_prime(m, 4));
    IntMatrix big(2, 2);
    big(0, 0) = std::int64_t{1} << 40;
    big(0, 1) = (std::int64_t{1} << 40) + 1;
    big(1, 0) = (std::int64_t{1} << 40) - 1;
    big(1, 1) = std::int64_t{1} << 40;
    CHECK(rank_over_rationals(big) == 2);  // determinant 1, needs the arbitrary-precision path
    IntMatrix two(2, 2);
    two(0, 0) = 2, two(0, 1) = 0, two(1, 0) = 0, two(1, 1) = 2;
    CHECK(rank_mod_prime(two, 2) == 0);
    CHECK(rank_over_rationals(two) == 2);
}

TEST_CASE("linear algebra agrees with the oracle") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> entry(-2, 2), dim(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        IntMatrix m(rows, cols);
        std::vector<std::vector<long>> plain(rows, std::vector<long>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = plain[i][j] = entry(rng) * (entry(rng) == 0 ? 0 : 1);
        CHECK(rank_over_rationals(m) == oracle::rank(plain, 0));
        CHECK(rank_mod_prime(m, 3) == oracle::rank(plain, 3));
    }
}

TEST_CASE("halfspaces are primitive") {
    const HalfSpace h({2, 4}, 6);
    CHECK(h.normal() == std::vector<std::int64_t>{1, 2});
    CHECK(h.rhs() == 3);
    CHECK_THROWS_AS(HalfSpace({0, 0}, 1), DomainError);
}

TEST_CASE("newton_polyhedron") {
    CHECK(newton_polyhedron(parse("x y", "x, y")) == orthant_with(2, {HalfSpace({1, 1}, 1)}));
    CHECK(newton_polyhedron(parse("x y", "x^2, y^3")) == orthant_with(2, {HalfSpace({3, 2}, 6)}));
    const auto q = parse("x y z", "x, z");
    CHECK(newton_polyhedron(power(q, 4)) == scale(newton_polyhedron(q), 4));
    CHECK(scale(newton_polyhedron(parse("x y", "x, y")), 2) == newton_polyhedron(parse("x y", "x^2, x*y, y^2")));
}

TEST_CASE("sp_polyhedron") {
    const auto edge = cover_ideal(Graph({"a", "b"}, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
    CHECK(sp_polyhedron(edge) == orthant_with(2, {HalfSpace({1, 1}, 1)}));
    const auto k3 = cover_ideal(Graph::complete(3));
    CHECK(sp_polyhedron(k3) ==
          orthant_with(3, {HalfSpace({1, 1, 0}, 1), HalfSpace({1, 0, 1}, 1), HalfSpace({0, 1, 1}, 1)}));
    const std::vector<MonomialIdeal> one = {power(parse("x y", "x, y"), 2)};
    CHECK(sp_polyhedron(one) == newton_polyhedron(one.front()));
}

TEST_CASE("vertices") {
    const auto edge = sp_polyhedron(parse("a b", "a, b"));
    CHECK(vertices(edge) == VertexSet{rv({0, 1}), rv({1, 0})});
    const auto k3 = sp_polyhedron(cover_ideal(Graph::complete(3)));
    CHECK(vertices(k3) == VertexSet{rv({0, 1, 1}), rv({q(1, 2), q(1, 2), q(1, 2)}), rv({1, 0, 1}), rv({1, 1, 0})});
    const auto path = sp_polyhedron(parse("a b c", "b, a*c"));
    CHECK(vertices(path) == VertexSet{rv({0, 1, 0}), rv({1, 0, 1})});
    HPolyhedron wide(13, {});
    CHECK_THROWS_WITH_AS(vertices(wide), doctest::Contains("combinatorial fast path"), CapExceeded);
}

TEST_CASE("delta") {
    CHECK(delta(cover_ideal(Graph::complete(3))) == 2);
    CHECK(delta(cover_ideal(corona(Graph::complete(3), 2))) == q(9, 2));
    CHECK(delta(parse("a b c", "b, a*c")) == 2);
}

TEST_CASE("subset enumeration and double description agree") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t r = 2 + trial % 3;
        const auto i = oracle::random_ideal(rng, r, 5, 3);
        if (i.is_unit()) continue;
        const auto p = sp_polyhedron(i);
        const auto a = vertices(p, VertexMethod::Subsets);
        const auto b = vertices(p, VertexMethod::DoubleDescription);
        CHECK(a == b);
        for (const auto& v : a) CHECK(is_vertex(p, v));
    }
}

TEST_CASE("vertices agree with the brute-force oracle on squarefree ideals") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 3 + trial % 3;
        const auto i = oracle::random_ideal(rng, r, 6, 1, true);
        if (i.is_unit()) continue;
        CHECK(delta(i) == oracle::squarefree_delta(oracle::minimal_primes(i), r));
    }
}

TEST_CASE("scaling multiplies vertices") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        const auto i = oracle::random_ideal(rng, 3, 4, 3);
        if (i.is_unit()) continue;
        const auto p = sp_polyhedron(i);
        CHECK(scale(p, 1) == p);
        for (int n = 2; n <= 3; ++n) {
            VertexSet scaled;
            for (const auto& v : vertices(p)) scaled.push_back(v.scaled(n));
            std::sort(scaled.begin(), scaled.end());
            CHECK(vertices(scale(p, n)) == scaled);
        }
    }
    CHECK(scale(sp_polyhedron(parse("a b", "a, b")), 3) == orthant_with(2, {HalfSpace({1, 1}, 3)}));
}

TEST_CASE("member") {
    const auto np = newton_polyhedron(parse("x y", "x^2, y^2"));
    CHECK(member(np, rv({1, 1})));
    CHECK_FALSE(member(newton_polyhedron(parse("x y", "x, y")), rv({0, 0})));
    const auto i = parse("x y z", "x^3*y, y^2*z, x*z^4");
    const auto p = newton_polyhedron(i);
    for (const auto& g : i.gens()) {
        std::vector<Rational> v(g.entries().begin(), g.entries().end());
        CHECK(member(p, RationalVector(v)));
    }
}

TEST_CASE("integral_closure") {
    CHECK(integral_closure(parse("x y", "x^2, y^2")) == parse("x y", "x^2, x*y, y^2"));
    CHECK(integral_closure(parse("x y", "x, y")) == parse("x y", "x, y"));
    CHECK(integral_closure(parse("x y", "x^2, x*y, y^2")) == parse("x y", "x^2, x*y, y^2"));
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 30; ++trial) {
        const auto i = oracle::random_ideal(rng, 3, 4, 4);
        if (i.is_unit()) continue;
        const auto c = integral_closure(i);
        CHECK(c.contains(i));
        CHECK(integral_closure(c) == c);
    }
    PolyhedraCaps tight;
    tight.max_box = 10;
    CHECK_THROWS_AS(integral_closure(parse("x y", "x^9, y^9"), tight), CapExceeded);
}

TEST_CASE("jn") {
    const std::vector<MonomialIdeal> single = {parse("x y", "x, y")};
    CHECK(jn(single, 2) == parse("x y", "x^2, x*y, y^2"));
    const auto k3 = cover_ideal(Graph::complete(3));
    const auto comps = minimal_decomposition(k3).ideals();
    CHECK(jn(comps, 1) == k3);
    CHECK(jn(comps, 2).contains(symbolic_power(k3, 2)));
}

TEST_CASE("facet_bound_check") {
    CHECK(facet_bound_check(cover_ideal(Graph::complete(3))));
    CHECK(facet_bound_check(cover_ideal(corona(Graph::complete(3), 1))));
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 30; ++trial) {
        const auto i = oracle::random_ideal(rng, 3, 4, 3);
        if (!i.is_unit()) CHECK(facet_bound_check(i));
    }
}

TEST_CASE("double description on a cube cone") {
    std::vector<dd::IntVector> rows;
    for (int i = 0; i < 3; ++i) {
        dd::IntVector row(3, BigInt(0));
        row[i] = 1;
        rows.push_back(row);
    }
    const auto rays = dd::extreme_rays(rows);
    CHECK(rays.size() == 3);
    CHECK(dd::primitive({BigInt(4), BigInt(-6)}) == dd::IntVector{BigInt(2), BigInt(-3)});
}

} // TEST_SUITE
