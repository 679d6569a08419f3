#pragma once

// SVG 1.1 drawing of an analyzed surface: Seifert disks as vertical lines,
// bands as horizontal bars in letter order, alpha^- arcs dashed on the left
// of their disk, alpha^+ arcs solid on the right, cusp arrows at arc
// midpoints and maximal endpoints as filled dots.

#include <sstream>
#include <string>

#include "tautbraid/pipeline.hpp"

namespace tautbraid {

inline std::string render_svg(const Analysis& a) {
  if (a.degenerate) throw Error(ErrorKind::Degenerate, "nothing to draw for the unknot");
  const FiberSurface& f = a.surface;
  const int n = f.band_count();
  const int gap = 160, top = 40, row = 30;
  auto x_of = [&](int disk) { return 80 + gap * disk; };
  auto y_of = [&](int letter) { return top + 20 + row * letter; };
  const int width = x_of(f.disk_count - 1) + 80;
  const int height = y_of(n) + 20;

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
    << "<title>" << to_string(a.word) << "</title>\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (int d = 0; d < f.disk_count; ++d)
    o << "<line class=\"disk\" x1=\"" << x_of(d) << "\" y1=\"" << top << "\" x2=\"" << x_of(d) << "\" y2=\"" << height - 10
      << "\" stroke=\"black\" stroke-width=\"3\"/>\n"
      << "<text x=\"" << x_of(d) - 10 << "\" y=\"" << top - 12 << "\" font-size=\"14\">S" << d + 1 << "</text>\n";
  for (int j = 0; j < n; ++j) {
    int lo = f.lower_disk(j);
    o << "<rect class=\"band\" x=\"" << x_of(lo) << "\" y=\"" << y_of(j) - 4 << "\" width=\"" << gap
      << "\" height=\"8\" fill=\"#cccccc\" stroke=\"black\"/>\n"
      << "<text x=\"" << x_of(lo) + gap / 2 - 8 << "\" y=\"" << y_of(j) - 7 << "\" font-size=\"10\">b" << j + 1 << "</text>\n";
  }

  const auto& arcs = a.evaluation.arcs;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const CuspedArc& arc = arcs[i];
    for (bool plus : {false, true}) {
      const Chord& c = plus ? arc.arc.plus : arc.arc.minus;
      const auto& rot = f.rotation[static_cast<std::size_t>(c.disk)];
      int y0 = y_of(rot[static_cast<std::size_t>(c.first)]) - 10;
      int y1 = y_of(rot[static_cast<std::size_t>(c.last)]) + 10;
      int x = x_of(c.disk);
      int bulge = (plus ? 1 : -1) * (18 + 6 * static_cast<int>(i % 4));
      const char* colour = plus ? "#1c7ed6" : "#d6336c";
      o << "<path class=\"" << (plus ? "plus" : "minus") << "\" d=\"M " << x << " " << y0 << " C " << x + bulge << " " << y0
        << " " << x + bulge << " " << y1 << " " << x << " " << y1 << "\" fill=\"none\" stroke=\"" << colour
        << "\" stroke-width=\"1.5\"" << (plus ? "" : " stroke-dasharray=\"4 3\"") << "/>\n";
      int mx = x + bulge * 3 / 4, my = (y0 + y1) / 2;
      int dir = arc.cusp == Cusp::Left ? -1 : 1;
      o << "<path class=\"cusp\" d=\"M " << mx << " " << my - 4 << " L " << mx + 6 * dir << " " << my << " L " << mx << " "
        << my + 4 << " Z\" fill=\"" << colour << "\"/>\n";
      int ey = arc.cusp == Cusp::Left ? y0 : y1;
      o << "<circle class=\"maximal\" cx=\"" << x << "\" cy=\"" << ey << "\" r=\"4\" fill=\"" << colour << "\"/>\n";
    }
  }
  o << "<text x=\"10\" y=\"" << height - 2 << "\" font-size=\"11\">" << to_string(a.cusping) << "</text>\n";
  o << "</svg>\n";
  return o.str();
}

}  // namespace tautbraid
