#include "sympow/scenarios.hpp"

#include "sympow/error.hpp"
#include "sympow/linearity.hpp"
#include "sympow/polyhedra.hpp"
#include "sympow/symbolic.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace sympow::scenarios {

namespace {

std::string str(const Rational& q) { return to_string(q); }
std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(bool b) { return b ? "true" : "false"; }

template <typename T>
void expect(Report& report, std::string label, const T& expected, const T& actual) {
    report.checks.push_back({std::move(label), str(expected), str(actual), expected == actual});
}

MonomialIdeal ideal(std::size_t r, std::initializer_list<std::initializer_list<Exponent>> gens) {
    std::vector<ExponentVector> v;
    for (const auto& g : gens) v.emplace_back(std::vector<Exponent>(g));
    return MonomialIdeal::minimize(std::move(v), r);
}

Graph graph(std::vector<std::string> labels, const std::string& edges) {
    std::vector<std::pair<std::string, std::string>> list;
    std::istringstream in(edges);
    std::string token;
    while (in >> token) {
        const auto dash = token.find('-');
        list.emplace_back(token.substr(0, dash), token.substr(dash + 1));
    }
    return Graph(std::move(labels), list);
}

void triangle_square(Report& rep, const Options&) {
    const auto j = cover_ideal(triangle());
    const auto expected = ideal(3, {{2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {1, 1, 1}});
    const auto got = symbolic_power(j, 2);
    rep.checks.push_back({"I^(2) = (x^2y^2, x^2z^2, y^2z^2, xyz)", "4 generators",
                          std::to_string(got.size()) + " generators", got == expected});
}

void depth_alternation(Report& rep, const Options& opt) {
    const auto i = alternating_ideal();
    for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(kDefaultPrime)}) {
        for (int n = 1; n <= 4; ++n) {
            const auto table = betti_table(symbolic_power(i, n), field, opt.homology);
            const std::string tag = "n=" + std::to_string(n) + " over " + field.name();
            expect<std::int64_t>(rep, "pd I^(n), " + tag, n % 2 ? 3 : 2, table.pd());
            expect<std::int64_t>(rep, "depth R/I^(n), " + tag, n % 2 ? 1 : 2, table.depth_quotient());
        }
    }
}

void corona_k3_2(Report& rep, const Options& opt) {
    const auto g = corona(Graph::complete(3), 2);
    for (int n = 1; n <= 3; ++n) {
        const auto p = symbolic_power_cover(g, n);
        const std::int64_t want = 4 * n + n / 2;
        const std::string tag = "n=" + std::to_string(n);
        expect<std::int64_t>(rep, "d(J^(n)), " + tag, want, p.max_gen_degree());
        expect<std::int64_t>(rep, "reg J^(n), " + tag, want, betti_table(p, FieldSpec::rationals(), opt.homology).reg());
        expect(rep, "J^(n) componentwise linear, " + tag, true,
               is_componentwise_linear(p, FieldSpec::rationals(), opt.homology));
    }
}

void corona_delta(Report& rep, const Options& opt) {
    for (auto [m, s] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
        const auto g = corona(Graph::complete(static_cast<std::size_t>(m)), s);
        const std::string tag = "(m,s)=(" + std::to_string(m) + "," + std::to_string(s) + ")";
        const auto j = cover_ideal(g);
        Rational want(m * (s + 1), 2);
        want.canonicalize();
        expect<std::int64_t>(rep, "d(J), " + tag, m + s - 1, j.max_gen_degree());
        expect(rep, "delta by formula, " + tag, want, delta_formula(g, opt.graph));
        if (g.size() <= 12) expect(rep, "delta by vertices, " + tag, want, delta(j));
    }
}

void star_g2_scenario(Report& rep, const Options& opt) {
    const auto j = cover_ideal(star_g2());
    expect(rep, "J(G_2) = (bc, abd, acd)", true, j == ideal(4, {{0, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}}));
    expect(rep, "J(G_2) componentwise linear", true, is_componentwise_linear(j, FieldSpec::rationals(), opt.homology));
    expect(rep, "J(G_2)^(2) componentwise linear", false,
           is_componentwise_linear(symbolic_power(j, 2), FieldSpec::rationals(), opt.homology));
}

void reg_growth(Report& rep, const Options& opt) {
    const auto i = reg_growth_ideal();
    for (int n = 1; n <= 4; ++n) {
        const auto p = symbolic_power(i, n);
        const std::string tag = "n=" + std::to_string(n);
        expect<std::int64_t>(rep, "reg I^(n), " + tag, 4 * n + (n + 1) / 2,
                             betti_table(p, FieldSpec::rationals(), opt.homology).reg());
        expect(rep, "I^(n) componentwise linear, " + tag, true,
               is_componentwise_linear(p, FieldSpec::rationals(), opt.homology));
    }
}

void eighteen_vertex_scenario(Report& rep, const Options& opt) {
    const auto g = eighteen_vertex();
    expect(rep, "delta(J) by formula", Rational(19, 2), delta_formula(g, opt.graph));
    expect<std::int64_t>(rep, "d(J)", 9, cover_ideal(g).max_gen_degree());
    const auto profile = compute_e(g, opt.graph);
    expect<std::int64_t>(rep, "e", 8, profile.e);
    for (int n = 3; n <= 9; n += 2)
        expect<std::int64_t>(rep, "predicted d(J^(" + std::to_string(n) + "))", 19 * (n / 2) + 8,
                             d_symbolic_formula(profile, n));
    if (!opt.slow) return;
    auto top_degree = [&](int n) {
        std::int64_t d = 0;
        for (const auto& m : cover_symbolic_generators(g, n, std::nullopt, opt.graph.max_search_nodes))
            d = std::max(d, m.degree());
        return d;
    };
    expect<std::int64_t>(rep, "d(J^(2)) by edge primes", 19, symbolic_power_cover(g, 2, true).max_gen_degree());
    expect<std::int64_t>(rep, "d(J^(3)) by edge primes", 27, symbolic_power_cover(g, 3, true).max_gen_degree());
    for (int n = 2; n <= 5; ++n)
        expect<std::int64_t>(rep, "d(J^(" + std::to_string(n) + ")) by generator search",
                             n % 2 ? 19 * (n / 2) + 8 : 19 * (n / 2), top_degree(n));
}

void corona_k3_1_linear(Report& rep, const Options& opt) {
    const auto g = corona(Graph::complete(3), 1);
    for (int n = 1; n <= 3; ++n) {
        const auto p = symbolic_power_cover(g, n);
        const std::string tag = "n=" + std::to_string(n);
        expect<std::int64_t>(rep, "min generator degree, " + tag, 3 * n, p.min_gen_degree());
        expect<std::int64_t>(rep, "max generator degree, " + tag, 3 * n, p.max_gen_degree());
        expect(rep, "linear resolution, " + tag, true,
               has_linear_resolution(p, FieldSpec::rationals(), opt.homology));
    }
}

struct Entry {
    const char* title;
    std::function<void(Report&, const Options&)> body;
};

const std::map<std::string, Entry>& registry() {
    static const std::map<std::string, Entry> table = {
        {"triangle-square", {"symbolic square of the triangle cover ideal", triangle_square}},
        {"depth-alternation", {"pd and depth of I^(n) alternate with the parity of n", depth_alternation}},
        {"corona-K3-2", {"reg J^(n) = d(J^(n)) = 4n + floor(n/2) for cg(K_3,2)", corona_k3_2}},
        {"corona-delta", {"d(J) and delta for cg(K_m,s)", corona_delta}},
        {"star-G2", {"J(G_2) is componentwise linear, J(G_2)^(2) is not", star_g2_scenario}},
        {"reg-growth", {"reg I^(n) = 4n + floor((n+1)/2)", reg_growth}},
        {"eighteen-vertex", {"delta, d and e for the 18-vertex graph", eighteen_vertex_scenario}},
        {"corona-K3-1-linear", {"J^(n) of cg(K_3,1) has a 3n-linear resolution", corona_k3_1_linear}},
    };
    return table;
}

} // namespace

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<std::string> names() {
    return {"triangle-square", "depth-alternation", "corona-K3-2", "corona-delta",
            "star-G2",         "reg-growth",       "eighteen-vertex",  "corona-K3-1-linear"};
}

Report run(const std::string& name, const Options& options) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw DomainError("unknown scenario '" + name + "'");
    Report report{name, it->second.title, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    it->second.body(report, options);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Graph triangle() { return graph({"x", "y", "z"}, "x-y x-z y-z"); }

Graph star_g2() { return graph({"a", "b", "c", "d"}, "a-b a-c b-c b-d c-d"); }

Graph eighteen_vertex() {
    return graph({"x1", "x2", "x3", "x4", "x5", "y1", "y2", "y3", "y4", "y5",
                  "z1", "z2", "z3", "z4", "z5", "u", "v", "w"},
                 "x1-x2 x1-x3 x1-x4 x1-x5 x2-x3 x2-x4 x2-x5 x3-x4 x3-x5 x4-x5 "
                 "x1-y1 x1-z1 x2-y2 x2-z2 x3-y3 x3-z3 x4-y4 x4-z4 x5-y5 x5-z5 "
                 "x3-u x4-u y5-u u-v u-w v-w");
}

MonomialIdeal alternating_ideal() {
    const auto squares = power(ideal(5, {{2, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 2, 0, 0}}), 2);
    const auto cubes = ideal(5, {{3, 0, 0, 0, 0}, {0, 3, 0, 0, 0}, {0, 0, 0, 1, 0}});
    const auto linear = ideal(5, {{0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}});
    return intersect(intersect(squares, cubes), linear);
}

MonomialIdeal reg_growth_ideal() {
    const auto a = ideal(4, {{1, 0, 0, 0}, {0, 2, 0, 0}});
    const auto b = ideal(4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
    const auto c = ideal(4, {{0, 0, 2, 0}, {0, 0, 1, 2}, {0, 0, 0, 3}});
    return intersect(intersect(a, b), c);
}

} // namespace sympow::scenarios
