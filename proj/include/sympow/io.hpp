#pragma once

// Text formats for ideals and graphs, and JSON rendering of results.
//
// Ideal file:            Graph file:
//   vars x y z             vertices a b c
//   x^2*y                  edges a-b b-c
//   y*z^3
//
// Blank lines and lines starting with '#' are ignored. A generator "1" denotes
// the unit ideal.

#include "sympow/graph.hpp"
#include "sympow/homology.hpp"
#include "sympow/linearity.hpp"
#include "sympow/monomial.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sympow::io {

struct IdealFile {
    std::vector<std::string> vars;
    MonomialIdeal ideal;
};

/// Throws ParseError with a 1-based line and column.
IdealFile parse_ideal(const std::string& text);
/// Canonical text: header, then one minimal generator per line in lex order.
std::string emit_ideal(const std::vector<std::string>& vars, const MonomialIdeal& ideal);
std::string format_monomial(const std::vector<std::string>& vars, const ExponentVector& m);

Graph parse_graph(const std::string& text);
std::string emit_graph(const Graph& g);

std::string read_file(const std::string& path);

nlohmann::json to_json(const BettiTable& table);
nlohmann::json to_json(const std::vector<std::string>& vars, const MonomialIdeal& ideal);
nlohmann::json to_json(const std::vector<std::string>& vars, const SplitStep& step);

} // namespace sympow::io
