#pragma once

#include <string>

#include "skewtab/puzzles.hpp"

namespace skewtab {

// SVG 1.1 documents; 20px lattice unit, red/blue/green path overlay.
std::string svg_tiling(const LozengeTiling& t, bool with_paths = true);
std::string svg_puzzle(const KTPuzzle& p);

}  // namespace skewtab
