#pragma once

#include <string>

#include "cores/lattice.hpp"

namespace cores {

// Standalone SVG of A_n: every point labeled, filled with its color under
// parameter c, occupied points drawn solid and the rest hollow. Throws
// DomainError unless 0 <= n <= 40, c is 0 or 1, and the ideal (if any)
// belongs to A_n.
std::string render_diagram_svg(int n, int c, const OrderIdeal* ideal = nullptr);

}  // namespace cores
