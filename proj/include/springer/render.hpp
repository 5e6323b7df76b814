#pragma once

#include <string>

#include "springer/link_pattern.hpp"

namespace springer {

// Arc diagram: vertices 1..n on a baseline, one arc per pred link. The
// ASCII form stacks square arcs at height proportional to their span; the
// SVG form is a self-contained document with semicircular arcs.
std::string render_ascii(const LinkPattern& pi);
std::string render_svg(const LinkPattern& pi);

} // namespace springer
