#include "sympow/io.hpp"

#include "sympow/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace sympow::io {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#') continue;
        out.push_back({number, raw});
    }
    return out;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Whitespace-separated words with their 1-based columns.
std::vector<std::pair<int, std::string>> words(const std::string& s) {
    std::vector<std::pair<int, std::string>> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size()) break;
        const std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        out.emplace_back(static_cast<int>(start) + 1, s.substr(start, i - start));
    }
    return out;
}

void check_identifier(const std::string& w, int line, int col) {
    if (w.empty() || !is_ident_start(w[0]))
        throw ParseError(line, col, "expected an identifier, got '" + w + "'");
    for (std::size_t k = 0; k < w.size(); ++k)
        if (!is_ident_char(w[k]))
            throw ParseError(line, col + static_cast<int>(k), std::string("unexpected character '") + w[k] + "'");
}

ExponentVector parse_monomial(const Line& line, const std::map<std::string, std::size_t>& index) {
    const std::string& s = line.text;
    const std::size_t r = index.size();
    std::vector<Exponent> e(r, 0);
    std::size_t i = 0;
    auto col = [&](std::size_t k) { return static_cast<int>(k) + 1; };
    auto skip_space = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    };
    skip_space();
    if (i < s.size() && s[i] == '1') {
        ++i;
        skip_space();
        if (i != s.size()) throw ParseError(line.number, col(i), "unexpected text after '1'");
        return ExponentVector(std::move(e));
    }
    while (true) {
        skip_space();
        if (i >= s.size() || !is_ident_start(s[i])) throw ParseError(line.number, col(i), "expected a variable");
        const std::size_t start = i;
        while (i < s.size() && is_ident_char(s[i])) ++i;
        const std::string name = s.substr(start, i - start);
        auto it = index.find(name);
        if (it == index.end()) throw ParseError(line.number, col(start), "undeclared variable '" + name + "'");
        std::int64_t power = 1;
        skip_space();
        if (i < s.size() && s[i] == '^') {
            ++i;
            skip_space();
            const std::size_t digits = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (digits == i) throw ParseError(line.number, col(digits), "expected an exponent");
            if (i - digits > 9) throw ParseError(line.number, col(digits), "exponent too large");
            power = std::stoll(s.substr(digits, i - digits));
            if (power < 1) throw ParseError(line.number, col(digits), "exponent must be positive");
        }
        const std::int64_t total = e[it->second] + power;
        if (total > std::numeric_limits<Exponent>::max())
            throw ParseError(line.number, col(start), "exponent too large");
        e[it->second] = static_cast<Exponent>(total);
        skip_space();
        if (i >= s.size()) break;
        if (s[i] != '*') throw ParseError(line.number, col(i), std::string("unexpected character '") + s[i] + "'");
        ++i;
    }
    return ExponentVector(std::move(e));
}

} // namespace

IdealFile parse_ideal(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "missing 'vars' header");
    const auto header = words(lines.front().text);
    if (header.front().second != "vars")
        throw ParseError(lines.front().number, header.front().first, "expected 'vars'");
    IdealFile out{{}, MonomialIdeal::unit(0)};
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 1; k < header.size(); ++k) {
        const auto& [c, w] = header[k];
        check_identifier(w, lines.front().number, c);
        if (!index.emplace(w, out.vars.size()).second)
            throw ParseError(lines.front().number, c, "duplicate variable '" + w + "'");
        out.vars.push_back(w);
    }
    if (out.vars.empty()) throw ParseError(lines.front().number, 1, "no variables declared");
    if (out.vars.size() > kMaxVariables) throw ParseError(lines.front().number, 1, "at most 64 variables supported");
    std::vector<ExponentVector> gens;
    for (std::size_t k = 1; k < lines.size(); ++k) gens.push_back(parse_monomial(lines[k], index));
    if (gens.empty()) throw ParseError(lines.back().number + 1, 1, "zero ideal unsupported");
    out.ideal = MonomialIdeal::minimize(std::move(gens), out.vars.size());
    return out;
}

std::string format_monomial(const std::vector<std::string>& vars, const ExponentVector& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars.at(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string emit_ideal(const std::vector<std::string>& vars, const MonomialIdeal& ideal) {
    std::string out = "vars";
    for (const auto& v : vars) out += ' ' + v;
    out += '\n';
    for (const auto& g : ideal.gens()) out += format_monomial(vars, g) + '\n';
    return out;
}

Graph parse_graph(const std::string& text) {
    const auto lines = content_lines(text);
    std::vector<std::string> labels;
    std::map<std::string, std::size_t> index;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    bool have_vertices = false;
    for (const auto& line : lines) {
        const auto ws = words(line.text);
        const auto& [kc, keyword] = ws.front();
        if (keyword == "vertices") {
            if (have_vertices) throw ParseError(line.number, kc, "duplicate 'vertices' line");
            have_vertices = true;
            for (std::size_t k = 1; k < ws.size(); ++k) {
                const auto& [c, w] = ws[k];
                check_identifier(w, line.number, c);
                if (!index.emplace(w, labels.size()).second)
                    throw ParseError(line.number, c, "duplicate vertex '" + w + "'");
                labels.push_back(w);
            }
            if (labels.size() > kMaxVariables) throw ParseError(line.number, kc, "at most 64 vertices supported");
        } else if (keyword == "edges") {
            if (!have_vertices) throw ParseError(line.number, kc, "'edges' before 'vertices'");
            for (std::size_t k = 1; k < ws.size(); ++k) {
                const auto& [c, w] = ws[k];
                const auto dash = w.find('-');
                if (dash == std::string::npos) throw ParseError(line.number, c, "expected an edge 'a-b'");
                const std::string a = w.substr(0, dash), b = w.substr(dash + 1);
                check_identifier(a, line.number, c);
                check_identifier(b, line.number, c + static_cast<int>(dash) + 1);
                auto ia = index.find(a), ib = index.find(b);
                if (ia == index.end()) throw ParseError(line.number, c, "undeclared vertex '" + a + "'");
                if (ib == index.end())
                    throw ParseError(line.number, c + static_cast<int>(dash) + 1, "undeclared vertex '" + b + "'");
                if (ia->second == ib->second) throw ParseError(line.number, c, "loop at '" + a + "'");
                const auto key = std::minmax(ia->second, ib->second);
                if (!seen.emplace(key, true).second) throw ParseError(line.number, c, "duplicate edge '" + w + "'");
                edges.emplace_back(ia->second, ib->second);
            }
        } else {
            throw ParseError(line.number, kc, "expected 'vertices' or 'edges'");
        }
    }
    if (!have_vertices) throw ParseError(1, 1, "missing 'vertices' line");
    return Graph(std::move(labels), std::move(edges));
}

std::string emit_graph(const Graph& g) {
    std::string out = "vertices";
    for (const auto& v : g.labels()) out += ' ' + v;
    out += "\nedges";
    for (const auto& [a, b] : g.edges()) out += ' ' + g.labels()[a] + '-' + g.labels()[b];
    return out + '\n';
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nlohmann::json to_json(const BettiTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : table.entries()) {
        entries.push_back({{"i", e.i},
                           {"degree", std::vector<Exponent>(e.degree.entries().begin(), e.degree.entries().end())},
                           {"beta", e.beta}});
    }
    return {{"field", table.field().name()},
            {"entries", entries},
            {"reg", table.reg()},
            {"pd", table.pd()},
            {"depth_quotient", table.depth_quotient()}};
}

nlohmann::json to_json(const std::vector<std::string>& vars, const MonomialIdeal& ideal) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : ideal.gens()) gens.push_back(format_monomial(vars, g));
    return {{"vars", vars}, {"gens", gens}, {"d", ideal.max_gen_degree()}};
}

nlohmann::json to_json(const std::vector<std::string>& vars, const SplitStep& step) {
    nlohmann::json node = {{"rule", rule_name(step.rule)}, {"ideal", to_json(vars, step.ideal)["gens"]}};
    if (step.rule == SplitStep::Rule::Shift || step.rule == SplitStep::Rule::Split) {
        node["variable"] = vars.at(step.variable);
        nlohmann::json kids = nlohmann::json::array();
        for (const auto& c : step.children) kids.push_back(to_json(vars, c));
        node["children"] = kids;
    }
    return node;
}

} // namespace sympow::io
