#pragma once

// Double description conversion for pointed polyhedral cones.

#include "sympow/rational.hpp"

#include <vector>

namespace sympow::dd {

using IntVector = std::vector<BigInt>;

/// Extreme rays of the cone {y : <row, y> >= 0 for every row}, as primitive
/// integer vectors in lexicographic order. The rows must span the whole space
/// (equivalently, the cone is pointed); otherwise DomainError is thrown.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& rows);

/// Divides by the gcd of the entries. The zero vector is returned unchanged.
IntVector primitive(IntVector v);

} // namespace sympow::dd
