#pragma once

#include <string>

#include "ncores/abacus.hpp"

namespace ncores {

/// One line per row (residues top to bottom), one filled/empty circle per
/// column 0..max(f)+1.
std::string render_abacus_ascii(const AbacusFunction& f);

/// Standalone SVG of the same diagram: filled circles for black beads,
/// stroked circles for white ones.
std::string render_abacus_svg(const AbacusFunction& f);

}  // namespace ncores
