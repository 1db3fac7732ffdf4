#include "oracles.hpp"
#include "test_support.hpp"

#include "sympow/error.hpp"
#include "sympow/graph.hpp"
#include "sympow/polyhedra.hpp"
#include "sympow/scenarios.hpp"
#include "sympow/symbolic.hpp"

#include <doctest.h>

#include <random>

using namespace sympow;
using testing::parse;

namespace {

std::vector<VarMask> masks(const std::vector<PrimeSupport>& primes) {
    std::vector<VarMask> out;
    for (const auto& p : primes) out.push_back(p.vars);
    return out;
}

PrimaryComponent component(std::size_t r, VarMask vars, const MonomialIdeal& q) { return {{r, vars}, q}; }

} // namespace

TEST_SUITE("symbolic") {

TEST_CASE("minimal_primes") {
    CHECK(masks(minimal_primes(parse("x y z", "x*y, x*z, y*z"))) == std::vector<VarMask>{0b011, 0b101, 0b110});
    CHECK(masks(minimal_primes(parse("x", "x"))) == std::vector<VarMask>{0b1});
    CHECK(masks(minimal_primes(parse("a b c", "b, a*c"))) == std::vector<VarMask>{0b011, 0b110});
    CHECK_THROWS_AS(minimal_primes(MonomialIdeal::unit(2)), DomainError);
}

TEST_CASE("minimal primes agree with exhaustive search") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const auto i = oracle::random_ideal(rng, 5, 7, 2);
        if (i.is_unit()) continue;
        auto expected = oracle::minimal_primes(i);
        auto got = masks(minimal_primes(i));
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("symbolic_power") {
    const auto tri = parse("x y z", "x*y, x*z, y*z");
    CHECK(symbolic_power(tri, 2) == parse("x y z", "x^2*y^2, x^2*z^2, y^2*z^2, x*y*z"));
    const auto m = parse("x y", "x, y");
    for (int n = 1; n <= 4; ++n) CHECK(symbolic_power(m, n) == power(m, n));
    const auto s3 = scenarios::alternating_ideal();
    CHECK(symbolic_power(s3, 1) == s3);
}

TEST_CASE("symbolic_power_from_components") {
    const std::size_t r = 3;
    auto d = PrimaryDecomposition::validated({component(r, 0b011, parse("x y z", "x, y")),
                                              component(r, 0b101, parse("x y z", "x, z")),
                                              component(r, 0b110, parse("x y z", "y, z"))});
    CHECK(symbolic_power_from_components(d, 2) == parse("x y z", "x^2*y^2, x^2*z^2, y^2*z^2, x*y*z"));

    // The defining intersection of the five-variable ideal, with its given components.
    const auto squares = power(parse("x y z u v", "x^2, y^2, z^2"), 2);
    const auto cubes = parse("x y z u v", "x^3, y^3, u");
    const auto lin = parse("x y z u v", "z, v");
    auto s3 = PrimaryDecomposition::validated(
        {component(5, 0b00111, squares), component(5, 0b01011, cubes), component(5, 0b10100, lin)});
    CHECK(symbolic_power_from_components(s3, 1) == scenarios::alternating_ideal());
    for (int n = 1; n <= 3; ++n)
        CHECK(symbolic_power_from_components(s3, n) == symbolic_power(scenarios::alternating_ideal(), n));

    auto single = PrimaryDecomposition::validated({component(2, 0b11, parse("x y", "x^2, y^3"))});
    CHECK(symbolic_power_from_components(single, 3) == power(parse("x y", "x^2, y^3"), 3));
}

TEST_CASE("invalid decompositions name the violation") {
    CHECK_THROWS_WITH_AS(PrimaryDecomposition::validated({component(2, 0b01, parse("x y", "x, y"))}),
                         doctest::Contains("invalid decomposition"), DomainError);
    CHECK_THROWS_WITH_AS(PrimaryDecomposition::validated({component(2, 0b11, parse("x y", "x*y, x^2"))}),
                         doctest::Contains("primary"), DomainError);
    CHECK_THROWS_WITH_AS(PrimaryDecomposition::validated({component(2, 0b01, parse("x y", "x")),
                                                          component(2, 0b11, parse("x y", "x, y"))}),
                         doctest::Contains("incomparable"), DomainError);
}

TEST_CASE("supplied components coincide with the computed ones") {
    const auto squares = power(parse("x y z u v", "x^2, y^2, z^2"), 2);
    const auto cubes = parse("x y z u v", "x^3, y^3, u");
    const auto lin = parse("x y z u v", "z, v");
    const auto computed = minimal_decomposition(scenarios::alternating_ideal()).ideals();
    CHECK(computed.size() == 3);
    for (const auto& q : {squares, cubes, lin})
        CHECK(std::find(computed.begin(), computed.end(), q) != computed.end());
}

TEST_CASE("powers sit between ordinary powers and J_n") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 25; ++trial) {
        const auto i = oracle::random_ideal(rng, 3, 4, 3);
        if (i.is_unit()) continue;
        const auto comps = minimal_decomposition(i).ideals();
        for (int n = 1; n <= 3; ++n) {
            const auto s = symbolic_power(i, n);
            CHECK(s.contains(power(i, n)));
            CHECK(jn(comps, n).contains(s));
            CHECK(s == symbolic_power_from_components(minimal_decomposition(i), n));
        }
    }
}

TEST_CASE("squarefree symbolic powers match the facet description") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 3 + trial % 3;
        const auto i = oracle::random_ideal(rng, r, 5, 1, true);
        if (i.is_unit()) continue;
        const auto primes = oracle::minimal_primes(i);
        const auto facets = stanley_reisner_facets(i);
        for (int n = 1; n <= 3; ++n) {
            const auto s = symbolic_power(i, n);
            oracle::for_box(std::vector<Exponent>(r, n), [&](const ExponentVector& a) {
                const bool in = oracle::in_squarefree_symbolic(primes, a, n);
                CHECK(s.contains(a) == in);
                if (in) CHECK(is_min_gen_squarefree_symbolic(facets, a, n) == is_minimal_generator(s, a));
            });
        }
    }
}

TEST_CASE("is_min_gen_squarefree_symbolic") {
    const auto facets = stanley_reisner_facets(parse("x y z", "x*y, x*z, y*z"));
    CHECK(is_min_gen_squarefree_symbolic(facets, ExponentVector{1, 1, 1}, 2));
    CHECK(is_min_gen_squarefree_symbolic(facets, ExponentVector{2, 2, 0}, 2));
    CHECK_FALSE(is_min_gen_squarefree_symbolic(facets, ExponentVector{2, 2, 1}, 2));
    CHECK_THROWS_AS(is_min_gen_squarefree_symbolic(facets, ExponentVector{1, 0, 0}, 2), DomainError);
    CHECK_THROWS_AS(stanley_reisner_facets(parse("x y", "x^2")), DomainError);
}

TEST_CASE("raising powers of minimal generators") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 3 + trial % 4;
        const auto i = oracle::random_ideal(rng, r, 5, 1, true);
        if (i.is_unit()) continue;
        for (int n = 1; n <= 3; ++n) {
            const auto s = symbolic_power(i, n);
            for (const auto& g : i.gens()) {
                const auto raised = g.scaled(n);
                CHECK(std::find(s.gens().begin(), s.gens().end(), raised) != s.gens().end());
            }
        }
    }
}

TEST_CASE("degree bounds") {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 20; ++trial) {
        const auto i = oracle::random_ideal(rng, 3, 4, 2, trial % 2 == 0);
        if (i.is_unit()) continue;
        for (int n = 1; n <= 3; ++n) {
            const auto b = bound_report(i, n);
            CHECK(b.general_bounds_hold());
            CHECK(b.jn_bound_holds());
            if (b.squarefree) CHECK(b.squarefree_bound_holds());
        }
    }
    const auto tri = bound_report(parse("x y z", "x*y, x*z, y*z"), 2);
    CHECK(tri.d_symbolic == 4);
    CHECK(tri.delta == 2);
    CHECK(tri.rho == 9 * 4);
}

} // TEST_SUITE
