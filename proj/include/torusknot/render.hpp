#pragma once

#include <string>

#include "torusknot/atlas.hpp"

namespace torusknot {

inline constexpr Int kDefaultMaxCells = 10000;

// ATLAS_MAX_CELLS when set to a positive integer, otherwise kDefaultMaxCells.
Int max_render_cells();

// Throws std::length_error with guidance when the window exceeds the cell limit.
void check_window(const Window& w, Int limit = max_render_cells());

// Glyph for one lattice point: 'E' extra knot, '*' torsion tower, '2' two or
// more knots, 'o' one knot.
char glyph(const LatticePoint& p);

// Rows are tb descending, columns rot ascending; an empty range prints its header only.
std::string render_ascii(const MountainRange& range);

// One circle per lattice point, each with a <title> carrying its metadata.
std::string render_svg(const MountainRange& range);

}  // namespace torusknot
