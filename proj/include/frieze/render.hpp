#pragma once

#include <array>
#include <optional>
#include <string>

#include "frieze/frieze.hpp"
#include "frieze/triangulation.hpp"

namespace frieze {

/// One glide period: row i lists c_{i,i}, ..., c_{i,i+m}, right-aligned in
/// columns of equal width and shifted right by one column per row.
std::string render_ascii(const FriezeMap& f);

/// Regular m-gon with every edge and diagonal drawn and labelled "1". A marked
/// triangle gets its sides highlighted and labelled with their frieze values.
/// Throws std::invalid_argument for m > 64.
std::string render_svg(const Triangulation& t,
                       const std::optional<std::array<int, 3>>& marked = std::nullopt);

/// Regular m-gon with every pair drawn and labelled by its entry.
std::string render_svg(const FriezeMap& f);

}  // namespace frieze
