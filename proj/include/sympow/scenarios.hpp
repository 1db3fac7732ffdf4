#pragma once

// Named reproduction scenarios with their expected values, and the inputs they
// are built from.

#include "sympow/graph.hpp"
#include "sympow/homology.hpp"
#include "sympow/monomial.hpp"

#include <string>
#include <vector>

namespace sympow::scenarios {

struct Check {
    std::string label;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Report {
    std::string name;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;

    bool passed() const;
};

struct Options {
    bool slow = false;
    HomologyCaps homology;
    GraphCaps graph;
};

std::vector<std::string> names();
/// Throws DomainError for an unknown name.
Report run(const std::string& name, const Options& options = {});

// Inputs.

/// Vertices x y z, all three edges.
Graph triangle();
/// K_4 on a b c d without the edge ad.
Graph star_g2();
/// 18 vertices x1..x5 y1..y5 z1..z5 u v w and 26 edges.
Graph eighteen_vertex();
/// (x^2,y^2,z^2)^2 ∩ (x^3,y^3,u) ∩ (z,v) in variables x y z u v.
MonomialIdeal alternating_ideal();
/// (x,y^2) ∩ (x,a) ∩ (a^2,ab^2,b^3) in variables x y a b.
MonomialIdeal reg_growth_ideal();

} // namespace sympow::scenarios
