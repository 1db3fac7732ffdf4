#include "oracles.hpp"
#include "test_support.hpp"

#include "sympow/error.hpp"
#include "sympow/monomial.hpp"

#include <doctest.h>

#include <limits>
#include <random>

using namespace sympow;
using testing::ideal;
using testing::parse;

TEST_SUITE("monomial") {

TEST_CASE("exponent vectors") {
    CHECK_THROWS_AS(ExponentVector({1, -1}), DomainError);
    const ExponentVector a{2, 0, 1};
    CHECK(a.degree() == 3);
    CHECK(a.support() == 0b101);
    CHECK(ExponentVector({1, 0, 1}).divides(a));
    CHECK_FALSE(a.divides(ExponentVector({1, 5, 5})));
    CHECK(a.lcm(ExponentVector({0, 3, 0})) == ExponentVector({2, 3, 1}));
    CHECK_THROWS_AS(ExponentVector({1, 0, 0}) - a, DomainError);
    CHECK(a - ExponentVector({1, 0, 1}) == ExponentVector({1, 0, 0}));
    CHECK_THROWS_AS(ExponentVector({std::numeric_limits<Exponent>::max()}) + ExponentVector({1}), DomainError);
}

TEST_CASE("minimize") {
    CHECK(parse("x", "x, x^2") == parse("x", "x"));
    CHECK(parse("x y", "x*y, x, y^2") == ideal(2, {{1, 0}, {0, 2}}));
    const auto four = parse("x y z", "x*y*z, x^2*y^2, x^2*z^2, y^2*z^2");
    CHECK(four.size() == 4);
    CHECK_THROWS_WITH_AS(MonomialIdeal::minimize({}, 2), "zero ideal unsupported", DomainError);
    CHECK(MonomialIdeal::minimize({ExponentVector{0, 0}, ExponentVector{1, 0}}, 2).is_unit());
}

TEST_CASE("minimize is idempotent and order independent") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto i = oracle::random_ideal(rng, 4, 10, 4);
        auto gens = i.gens();
        CHECK(MonomialIdeal::minimize(gens, 4) == i);
        std::shuffle(gens.begin(), gens.end(), rng);
        gens.push_back(gens.front() + ExponentVector::unit(4, 2));
        CHECK(MonomialIdeal::minimize(gens, 4) == i);
        CHECK(std::is_sorted(i.gens().begin(), i.gens().end()));
        for (const auto& g : i.gens()) CHECK(is_minimal_generator(i, g));
    }
}

TEST_CASE("contains") {
    const auto xy = parse("x y z", "x, y");
    CHECK(xy.contains(ExponentVector{1, 1, 0}));
    CHECK_FALSE(parse("x y", "x^2, y^2").contains(ExponentVector{1, 1}));
    CHECK(parse("x y z", "x*y, x*z, y*z").contains(ExponentVector{1, 1, 1}));
    CHECK(xy.contains(parse("x y z", "x*y, y*z")));
}

TEST_CASE("intersect") {
    CHECK(intersect(parse("x y", "x"), parse("x y", "y")) == parse("x y", "x*y"));
    CHECK(intersect(parse("x y z", "x, y"), parse("x y z", "x, z")) == parse("x y z", "x, y*z"));
    const std::vector<MonomialIdeal> parts = {power(parse("x y z", "x, y"), 2), power(parse("x y z", "x, z"), 2),
                                              power(parse("x y z", "y, z"), 2)};
    CHECK(intersect(parts) == parse("x y z", "x^2*y^2, x^2*z^2, y^2*z^2, x*y*z"));
}

TEST_CASE("intersection membership matches both sides on a box") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = oracle::random_ideal(rng, 3, 4, 3);
        const auto b = oracle::random_ideal(rng, 3, 4, 3);
        const auto c = intersect(a, b);
        CHECK(c == intersect(b, a));
        oracle::for_box({4, 4, 4}, [&](const ExponentVector& m) {
            CHECK(c.contains(m) == (a.contains(m) && b.contains(m)));
            CHECK(sum(a, b).contains(m) == (a.contains(m) || b.contains(m)));
        });
    }
}

TEST_CASE("multiply and power") {
    const auto m = parse("x y", "x, y");
    CHECK(multiply(m, m) == parse("x y", "x^2, x*y, y^2"));
    CHECK(power(parse("x y z", "x, y*z"), 2) == parse("x y z", "x^2, x*y*z, y^2*z^2"));
    CHECK(power(m, 0).is_unit());
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = oracle::random_ideal(rng, 3, 4, 2);
        const auto b = oracle::random_ideal(rng, 3, 4, 2);
        const auto c = oracle::random_ideal(rng, 3, 3, 2);
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        CHECK(power(a, 3) == multiply(power(a, 1), power(a, 2)));
    }
}

TEST_CASE("saturate_vars") {
    CHECK(saturate_vars(parse("x y z", "x^2*y, z"), 0b010) == parse("x y z", "x^2, z"));
    CHECK(saturate_vars(parse("x y z", "x*y, x*z, y*z"), 0b100) == parse("x y z", "x, y"));
    const auto i = parse("x y z", "x^2*y, z^3");
    CHECK(saturate_vars(i, 0) == i);
}

TEST_CASE("max_gen_degree") {
    CHECK(parse("x y z", "x*y, x*z, y*z").max_gen_degree() == 2);
    CHECK(parse("x y z", "x^2*y^2, x^2*z^2, y^2*z^2, x*y*z").max_gen_degree() == 4);
    CHECK(MonomialIdeal::unit(3).max_gen_degree() == 0);
}

TEST_CASE("component_ideal") {
    CHECK(component_ideal(parse("x y", "x, y^2"), 2) == parse("x y", "x^2, x*y, y^2"));
    CHECK(component_ideal(parse("x y", "x, y"), 1) == parse("x y", "x, y"));
    CHECK(component_ideal(parse("a b c d", "b*c, a*b*d, a*c*d"), 2) == parse("a b c d", "b*c"));
    CHECK_THROWS_AS(component_ideal(parse("x y", "x^2, y^3"), 1), DomainError);
}

TEST_CASE("component ideal consistency") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        const auto i = oracle::random_ideal(rng, 3, 5, 3);
        const auto lo = i.min_gen_degree();
        for (std::int64_t d = lo; d <= i.max_gen_degree(); ++d) {
            // I_<d+1> ⊆ m I_<d> + (generators of degree d + 1)
            const auto next = component_ideal(i, d + 1);
            auto bound = multiply(component_ideal(i, d), MonomialIdeal::prime(3, 0b111));
            std::vector<ExponentVector> extra;
            for (const auto& g : i.gens())
                if (g.degree() == d + 1) extra.push_back(g);
            if (!extra.empty()) bound = sum(bound, MonomialIdeal::minimize(extra, 3));
            CHECK(bound.contains(next));
            for (const auto& g : next.gens()) CHECK(g.degree() == d + 1);
        }
    }
}

TEST_CASE("is_minimal_generator") {
    const auto sq = parse("x y z", "x^2*y^2, x^2*z^2, y^2*z^2, x*y*z");
    CHECK(is_minimal_generator(sq, ExponentVector{1, 1, 1}));
    CHECK_FALSE(is_minimal_generator(parse("x y", "x, y"), ExponentVector{2, 1}));
    CHECK(is_minimal_generator(parse("x y", "x, y"), ExponentVector{1, 0}));
    CHECK_THROWS_AS(is_minimal_generator(sq, ExponentVector{1, 1, 0}), DomainError);
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        const auto i = oracle::random_ideal(rng, 3, 5, 3);
        oracle::for_box({3, 3, 3}, [&](const ExponentVector& m) {
            if (!i.contains(m)) return;
            const bool listed = std::find(i.gens().begin(), i.gens().end(), m) != i.gens().end();
            CHECK(is_minimal_generator(i, m) == listed);
        });
    }
}

} // TEST_SUITE
