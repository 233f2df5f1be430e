#include "cores/diagram.hpp"

#include <sstream>

#include "cores/errors.hpp"

namespace cores {

std::string render_diagram_svg(int n, int c, const OrderIdeal* ideal) {
  if (n < 0 || n > 40) throw DomainError("diagrams are drawn for 0 <= n <= 40");
  if (c != 0 && c != 1) throw DomainError("coloring parameter must be 0 or 1");
  if (ideal && ideal->order() != n) throw DomainError("ideal belongs to a different lattice");

  constexpr int cell = 44;
  constexpr int pad = 30;
  const int side = pad * 2 + cell * std::max(n - 1, 0);
  const char* fills[2] = {"#2b6cb0", "#c53030"};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side + 24
      << "\" viewBox=\"0 0 " << side << ' ' << side + 24 << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << pad << "\" y=\"" << side + 14
      << "\" font-family=\"sans-serif\" font-size=\"12\">A_" << n << ", c = " << c;
  if (ideal) svg << ", " << ideal->size() << " occupied";
  svg << "</text>\n";
  for (const auto& p : reading_order(n)) {
    const int x = pad + cell * p.i;
    const int y = pad + cell * (n - 1 - p.j);
    const int col = color(c, p);
    const bool occupied = ideal && ideal->contains(p);
    svg << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"16\" stroke=\"" << fills[col]
        << "\" stroke-width=\"2\" fill=\"" << (occupied ? fills[col] : "white") << "\"/>\n";
    svg << "<text x=\"" << x << "\" y=\"" << y + 4
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" fill=\""
        << (occupied ? "white" : "black") << "\">" << label(n, p) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cores
