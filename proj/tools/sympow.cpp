// Command-line front end.

#include "sympow/error.hpp"
#include "sympow/graph.hpp"
#include "sympow/homology.hpp"
#include "sympow/io.hpp"
#include "sympow/linearity.hpp"
#include "sympow/polyhedra.hpp"
#include "sympow/scenarios.hpp"
#include "sympow/symbolic.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using namespace sympow;

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kCap = 3 };

struct Settings {
    unsigned threads = 1;
    std::vector<std::string> caps;
    std::string field = "q";

    HomologyCaps homology;
    PolyhedraCaps polyhedra;
    GraphCaps graph;
    SymbolicCaps symbolic;

    void resolve() {
        homology = {};
        polyhedra = {};
        graph = {};
        symbolic = {};
        homology.threads = std::max(1u, threads);
        for (const auto& spec : caps) {
            const auto eq = spec.find('=');
            if (eq == std::string::npos) throw DomainError("--cap expects name=value, got '" + spec + "'");
            const std::string name = spec.substr(0, eq);
            std::uint64_t value = 0;
            try {
                std::size_t used = 0;
                value = std::stoull(spec.substr(eq + 1), &used);
                if (used != spec.size() - eq - 1) throw std::invalid_argument(spec);
            } catch (const std::logic_error&) {
                throw DomainError("--cap value must be a nonnegative integer: '" + spec + "'");
            }
            if (name == "max_box") homology.max_box = polyhedra.max_box = value;
            else if (name == "max_dim") polyhedra.max_dim = value;
            else if (name == "max_constraints") polyhedra.max_constraints = value;
            else if (name == "subset_budget") polyhedra.subset_budget = value;
            else if (name == "max_independent_sets") graph.max_independent_sets = value;
            else if (name == "max_pair_checks") graph.max_pair_checks = value;
            else if (name == "max_search_nodes") graph.max_search_nodes = value;
            else if (name == "max_primes") symbolic.max_primes = value;
            else throw DomainError("unknown cap '" + name + "'");
        }
    }
};

void print_ideal(const io::IdealFile& file, const MonomialIdeal& ideal) {
    std::cout << io::emit_ideal(file.vars, ideal);
}

int run_verify(const std::vector<std::string>& which, bool slow, const Settings& s) {
    std::vector<std::string> list = which;
    if (list.size() == 1 && list.front() == "all") list = scenarios::names();
    scenarios::Options options{slow, s.homology, s.graph};
    bool ok = true;
    for (const auto& name : list) {
        const auto report = scenarios::run(name, options);
        std::cout << "== " << report.name << ": " << report.title << "\n";
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.label << ": expected " << c.expected
                      << ", got " << c.actual << "\n";
        }
        std::cout << (report.passed() ? "PASS " : "FAIL ") << report.name << " (" << report.seconds << " s)\n";
        ok = ok && report.passed();
    }
    return ok ? kOk : kMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic powers, Newton polyhedra and Betti numbers of monomial ideals"};
    app.require_subcommand(1);
    Settings settings;
    app.add_option("--threads", settings.threads, "Worker threads for Betti tables")->check(CLI::PositiveNumber);
    app.add_option("--cap", settings.caps, "Override an enumeration cap, name=value");
    app.add_option("--field", settings.field, "Coefficient field: q or zp:P");

    int result = kOk;
    std::string file;

    auto* ideal = app.add_subcommand("ideal", "Monomial ideal commands");
    ideal->require_subcommand(1);

    auto* show = ideal->add_subcommand("show", "Print the minimal generators");
    show->add_option("file", file)->required();
    show->callback([&] {
        settings.resolve();
        const auto f = io::parse_ideal(io::read_file(file));
        print_ideal(f, f.ideal);
    });

    int power_n = 1;
    auto* symbolic = ideal->add_subcommand("symbolic", "Print G(I^(n)) and d(I^(n))");
    symbolic->add_option("-n", power_n, "Exponent")->required()->check(CLI::PositiveNumber);
    symbolic->add_option("file", file)->required();
    symbolic->callback([&] {
        settings.resolve();
        const auto f = io::parse_ideal(io::read_file(file));
        const auto p = symbolic_power(f.ideal, power_n, settings.symbolic);
        print_ideal(f, p);
        std::cout << "# d = " << p.max_gen_degree() << "\n";
    });

    auto* idelta = ideal->add_subcommand("delta", "Print delta(I)");
    idelta->add_option("file", file)->required();
    idelta->callback([&] {
        settings.resolve();
        const auto f = io::parse_ideal(io::read_file(file));
        std::cout << to_string(delta(f.ideal, settings.polyhedra)) << "\n";
    });

    auto* betti = ideal->add_subcommand("betti", "Multigraded Betti table as JSON");
    betti->add_option("--field", settings.field, "Coefficient field: q or zp:P");
    betti->add_option("file", file)->required();
    betti->callback([&] {
        settings.resolve();
        const auto f = io::parse_ideal(io::read_file(file));
        const auto table = betti_table(f.ideal, FieldSpec::parse(settings.field), settings.homology);
        std::cout << io::to_json(table).dump() << "\n";
    });

    bool prove = false;
    auto* cwl = ideal->add_subcommand("cwl", "Componentwise linearity");
    cwl->add_flag("--prove", prove, "Also search for a splitting certificate");
    cwl->add_option("file", file)->required();
    cwl->callback([&] {
        settings.resolve();
        const auto f = io::parse_ideal(io::read_file(file));
        const auto field = FieldSpec::parse(settings.field);
        std::cout << (is_componentwise_linear(f.ideal, field, settings.homology) ? "true" : "false") << "\n";
        if (prove) {
            const auto verdict = koszul_split_prover(f.ideal, field, settings.homology);
            if (verdict.proved) std::cout << io::to_json(f.vars, *verdict.certificate).dump(2) << "\n";
            else std::cout << "certificate: unknown\n";
        }
    });

    auto* graph = app.add_subcommand("graph", "Graph and cover ideal commands");
    graph->require_subcommand(1);

    auto* cover = graph->add_subcommand("cover", "Print the cover ideal J(G)");
    cover->add_option("file", file)->required();
    cover->callback([&] {
        settings.resolve();
        const auto g = io::parse_graph(io::read_file(file));
        std::cout << io::emit_ideal(g.labels(), cover_ideal(g));
    });

    int pendants = 1;
    auto* cor = graph->add_subcommand("corona", "Print cg(G, s) as a graph file");
    cor->add_option("-s", pendants, "Pendant edges per vertex")->required()->check(CLI::PositiveNumber);
    cor->add_option("file", file)->required();
    cor->callback([&] {
        settings.resolve();
        std::cout << io::emit_graph(corona(io::parse_graph(io::read_file(file)), pendants));
    });

    bool cross_check = false;
    auto* gdelta = graph->add_subcommand("delta", "delta(J(G)) by the independent-set formula");
    gdelta->add_flag("--cross-check", cross_check, "Compare with the polyhedral value");
    gdelta->add_option("file", file)->required();
    gdelta->callback([&] {
        settings.resolve();
        const auto g = io::parse_graph(io::read_file(file));
        const auto value = delta_formula(g, settings.graph);
        std::cout << to_string(value) << "\n";
        if (cross_check) {
            const auto poly = delta(cover_ideal(g), settings.polyhedra);
            std::cout << "polyhedral " << to_string(poly) << (poly == value ? " (agrees)" : " (MISMATCH)") << "\n";
            if (poly != value) result = kMismatch;
        }
    });

    int table_n = 6;
    auto* profile = graph->add_subcommand("profile", "delta, d(J), e and predicted d(J^(n))");
    profile->add_option("-N", table_n, "Largest n in the table")->check(CLI::PositiveNumber);
    profile->add_option("file", file)->required();
    profile->callback([&] {
        settings.resolve();
        const auto g = io::parse_graph(io::read_file(file));
        const auto p = compute_e(g, settings.graph);
        std::cout << "delta " << to_string(p.delta) << "\nd " << p.d1 << "\ne " << p.e << "\n";
        for (int n = 1; n <= table_n; ++n) {
            std::cout << "n=" << n << " ";
            try {
                std::cout << d_symbolic_formula(p, n) << "\n";
            } catch (const DomainError&) {
                std::cout << (n == 1 ? std::to_string(p.d1) : "not guaranteed") << "\n";
            }
        }
    });

    std::vector<std::string> which;
    bool slow = false;
    auto* verify = app.add_subcommand("verify", "Run named reproduction scenarios");
    verify->add_flag("--slow", slow, "Include long-running checks");
    verify->add_option("scenario", which, "Scenario names, or 'all'")->required();
    verify->callback([&] {
        settings.resolve();
        result = run_verify(which, slow, settings);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "error: cap '" << e.cap() << "' exceeded: " << e.what() << "\n";
        return kCap;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kMismatch;
    }
    return result;
}
