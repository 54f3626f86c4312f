#include "mosaickit/render.hpp"

#include <array>
#include <sstream>

namespace mosaickit {

namespace {

using Block = std::array<std::string, 3>;

Block traditional_block(TileCode code) {
  Block b = {"     ", "     ", "     "};
  const int mask = port_mask(code);
  if (mask & 1) b[0][2] = '|';
  if (mask & 4) b[2][2] = '|';
  if (mask & 8) b[1][0] = b[1][1] = '-';
  if (mask & 2) b[1][3] = b[1][4] = '-';
  switch (code) {
    case 1: case 2: case 3: case 4: b[1][2] = '+'; break;
    case 5: b[1][2] = '-'; break;
    case 6: b[1][2] = '|'; break;
    case 7: b[1] = "-' .-"; break;
    case 8: b[1] = "-. '-"; break;
    case 9: b[1] = "- | -"; break;
    case 10: b[1] = "-----"; break;
    default: break;
  }
  return b;
}

Block corner_block(TileCode code) {
  Block b = {"     ", "     ", "     "};
  const int mask = port_mask(code);
  if (mask & 1) b[0][4] = '/';
  if (mask & 2) b[2][4] = '\\';
  if (mask & 4) b[2][0] = '/';
  if (mask & 8) b[0][0] = '\\';
  static const std::array<const char*, kTileCount> kCenter = {
      "     ", " >   ", "  ^  ", "   < ", "  v  ", "  \\  ",
      "  /  ", "  =  ", " > < ", "\\ / \\", "/ \\ /"};
  b[1] = kCenter[code];
  return b;
}

struct Point {
  int x;
  int y;
};

Point port_point(Flavor f, Port p) {
  static constexpr std::array<Point, 4> kTrad = {{{20, 0}, {40, 20}, {20, 40}, {0, 20}}};
  static constexpr std::array<Point, 4> kCorner = {{{40, 0}, {40, 40}, {0, 40}, {0, 0}}};
  return (f == Flavor::traditional ? kTrad : kCorner)[index(p)];
}

}  // namespace

std::string render_ascii(const Mosaic& m) {
  std::ostringstream os;
  for (int i = 1; i <= m.size(); ++i) {
    std::array<std::string, 3> rows;
    for (int j = 1; j <= m.size(); ++j) {
      const Block b = m.flavor() == Flavor::traditional ? traditional_block(m.at(i, j))
                                                        : corner_block(m.at(i, j));
      for (int r = 0; r < 3; ++r) rows[r] += b[r];
    }
    for (const auto& r : rows) os << r << '\n';
  }
  return os.str();
}

std::string render_svg(const Mosaic& m) {
  constexpr int kCell = 40;
  const int side = m.size() * kCell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
     << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  os << "<g class=\"grid\" fill=\"none\" stroke=\"#ccc\" stroke-width=\"0.5\">\n";
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      os << "<rect x=\"" << j * kCell << "\" y=\"" << i * kCell << "\" width=\"" << kCell
         << "\" height=\"" << kCell << "\"/>\n";
    }
  }
  os << "</g>\n<g class=\"strands\" fill=\"none\" stroke=\"black\" stroke-width=\"3\" "
        "stroke-linecap=\"round\">\n";
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) {
      const TileCode code = m.at(i, j);
      const auto& t = tile_pairing(code);
      const int x0 = (j - 1) * kCell;
      const int y0 = (i - 1) * kCell;
      auto at = [&](Port p) {
        const Point q = port_point(m.flavor(), p);
        return Point{x0 + q.x, y0 + q.y};
      };
      if (t.over_strand) {
        const Strand over = t.strands[*t.over_strand];
        const Strand under = t.strands[1 - *t.over_strand];
        const Point a = at(over.a), b = at(over.b), c = at(under.a), d = at(under.b);
        // Under strand stops short of the centre on both sides.
        auto lerp = [](Point u, Point v, double s) {
          return std::pair<double, double>{u.x + (v.x - u.x) * s, u.y + (v.y - u.y) * s};
        };
        const auto c1 = lerp(c, d, 0.35);
        const auto d1 = lerp(c, d, 0.65);
        os << "<g class=\"crossing\">"
           << "<path d=\"M" << c.x << ' ' << c.y << " L" << c1.first << ' ' << c1.second << "\"/>"
           << "<path d=\"M" << d1.first << ' ' << d1.second << " L" << d.x << ' ' << d.y << "\"/>"
           << "<path d=\"M" << a.x << ' ' << a.y << " L" << b.x << ' ' << b.y << "\"/>"
           << "</g>\n";
        continue;
      }
      for (int s = 0; s < t.strand_count; ++s) {
        const Point a = at(t.strands[s].a), b = at(t.strands[s].b);
        os << "<path d=\"M" << a.x << ' ' << a.y << " Q" << x0 + kCell / 2 << ' ' << y0 + kCell / 2
           << ' ' << b.x << ' ' << b.y << "\"/>\n";
      }
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render(const Mosaic& m, RenderFormat format) {
  return format == RenderFormat::ascii ? render_ascii(m) : render_svg(m);
}

}  // namespace mosaickit
