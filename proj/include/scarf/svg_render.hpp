#pragma once

#include <sstream>

#include "scarf/parse.hpp"
#include "scarf/staircase.hpp"

namespace scarf {

/// Two-variable staircase plot: one colored rectangle per unit cell,
/// grouped by partition piece, with the staircase boundary drawn on top.
/// The metadata block records each piece's corner and area in cell units.
/// Output is byte-deterministic: integer coordinates only.
inline std::string render_staircase_svg(const MonomialIdeal& m, const Permutation& sigma) {
  if (m.n != 2)
    throw std::invalid_argument("SVG rendering is only supported for two variables");
  require_artinian(m, "render_staircase_svg");
  require_permutation(sigma, 2);

  static const char* palette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                                  "#b07aa1", "#edc948", "#76b7b2", "#ff9da7",
                                  "#9c755f", "#bab0ac"};
  const int unit = 40;
  const int margin = 50;
  const ExponentVector box = bounding_box(m);
  const int width = box[0] * unit + 2 * margin;
  const int height = box[1] * unit + 2 * margin;
  const auto parts = partition_bruteforce(m, sigma);

  const auto px = [&](int cell_x) { return margin + cell_x * unit; };
  const auto py = [&](int cell_y) { return height - margin - (cell_y + 1) * unit; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "<metadata>{\"ideal\":\"" << format_ideal(m) << "\",\"sigma\":[" << sigma[0] + 1
      << "," << sigma[1] + 1 << "],\"parts\":[";
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (p) svg << ",";
    svg << "{\"corner\":[" << parts[p].corner[0] << "," << parts[p].corner[1]
        << "],\"area\":" << volume(parts[p].cells) << "}";
  }
  svg << "]}</metadata>\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  for (std::size_t p = 0; p < parts.size(); ++p) {
    svg << "<g fill=\"" << palette[p % 10] << "\" stroke=\"white\" stroke-width=\"1\">\n";
    for (const ExponentVector& cell : parts[p].cells)
      svg << "  <rect x=\"" << px(cell[0]) << "\" y=\"" << py(cell[1]) << "\" width=\"" << unit
          << "\" height=\"" << unit << "\"/>\n";
    svg << "</g>\n";
  }

  // Staircase outline: walk the profile from the top of the x2-axis to the
  // end of the x1-axis. column_height[x] = cells above x1-coordinate x.
  std::vector<int> column_height(box[0], 0);
  for (const auto& part : parts)
    for (const ExponentVector& cell : part.cells)
      column_height[cell[0]] = std::max(column_height[cell[0]], cell[1] + 1);
  svg << "<path fill=\"none\" stroke=\"black\" stroke-width=\"3\" d=\"";
  svg << "M " << px(0) << " " << py(column_height[0] - 1);
  int y = column_height[0];
  for (int x = 0; x < box[0]; ++x) {
    if (column_height[x] != y) {
      svg << " V " << py(column_height[x] - 1);
      y = column_height[x];
    }
    svg << " H " << px(x + 1);
  }
  svg << " V " << py(-1) << "\"/>\n";

  svg << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - 20
      << "\" y2=\"" << height - margin << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << margin
      << "\" y2=\"20\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<text x=\"" << width - 18 << "\" y=\"" << height - margin + 4
      << "\" font-size=\"14\">x1</text>\n";
  svg << "<text x=\"" << margin - 8 << "\" y=\"14\" font-size=\"14\">x2</text>\n";
  for (const auto& part : parts) {
    svg << "<circle cx=\"" << px(part.corner[0]) << "\" cy=\"" << py(part.corner[1] - 1)
        << "\" r=\"4\" fill=\"black\"/>\n";
    svg << "<text x=\"" << px(part.corner[0]) + 6 << "\" y=\"" << py(part.corner[1] - 1) - 6
        << "\" font-size=\"12\">(" << part.corner[0] << "," << part.corner[1] << ")</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace scarf
