#pragma once

#include "frieze/frieze.hpp"

namespace frieze {

/// c_{i,k} c_{j,l} == c_{i,l} c_{j,k} + c_{i,j} c_{k,l} for vertices
/// 1 <= i <= j <= k <= l <= m; coinciding vertices read as 0.
bool ptolemy_holds(const FriezeMap& f, int i, int j, int k, int l);

/// All strictly increasing quadruples i < j < k < l, OpenMP-parallel over i.
/// Violations are reported in lexicographic (i, j, k, l) order.
ValidationReport verify_all_ptolemy(const FriezeMap& f);

/// Single-threaded reference for verify_all_ptolemy.
ValidationReport verify_all_ptolemy_serial(const FriezeMap& f);

}  // namespace frieze
