#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "mvknuth/errors.hpp"
#include "mvknuth/io.hpp"

namespace mvknuth {

namespace {

struct Pt {
  double x = 0;
  double y = 0;
};

constexpr double kScale = 60.0;
constexpr double kLegend = 300.0;
constexpr double kPi = 3.14159265358979323846;

// Coordinates in the plane orthogonal to (1,...,1). For n = 3 the unit vectors eps_i go
// to three directions 120 degrees apart, so the pairing with eps_a - eps_b is 2/3 of the
// dot product with the image of eps_a - eps_b.
Pt project(const Coweight& mu) {
  const auto c = mu.coords();
  if (c.size() == 1) return {};
  if (c.size() == 2) return {static_cast<double>(c[0] - c[1]), 0};
  Pt p;
  for (std::size_t i = 0; i < 3; ++i) {
    const double angle = kPi / 2 + 2 * kPi * static_cast<double>(i) / 3;
    p.x += c[i] * std::cos(angle);
    p.y += c[i] * std::sin(angle);
  }
  return p;
}

Pt unit_image(int n, int i) {
  Coweight e = Coweight::epsilon(n, i);
  return project(e);
}

std::string colour(CrossingDirection d) {
  switch (d) {
    case CrossingDirection::Positive:
      return "#c0392b";
    case CrossingDirection::Negative:
      return "#2471a3";
    case CrossingDirection::Contained:
      return "#7d7d7d";
  }
  return "#000";
}

}  // namespace

std::string polyline_svg(const Gallery& g) {
  const int n = g.rank();
  if (n > 3) throw InvalidValue("polyline drawing needs n <= 3");
  const Polyline line = polyline(g);
  const CrossingReport report = crossing_report(g);

  std::vector<Pt> pts;
  for (const Coweight& mu : line) pts.push_back(project(mu));
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const Pt& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double margin = 2.0;
  xmin -= margin;
  xmax += margin;
  ymin -= margin;
  ymax += margin;
  const double width = (xmax - xmin) * kScale, height = (ymax - ymin) * kScale;
  auto sx = [&](double x) { return (x - xmin) * kScale; };
  auto sy = [&](double y) { return (ymax - y) * kScale; };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::ostringstream legend;
  legend << std::fixed << std::setprecision(2);
  double ly = 20;
  legend << "<g font-size=\"11\" font-family=\"monospace\">\n";
  legend << "<text x=\"" << width + 10 << "\" y=\"" << ly << "\" font-weight=\"bold\">walls through segment starts</text>\n";
  for (const auto& [name, d] : {std::pair("positive", CrossingDirection::Positive),
                                std::pair("negative", CrossingDirection::Negative),
                                std::pair("contained", CrossingDirection::Contained)}) {
    ly += 14;
    legend << "<text x=\"" << width + 10 << "\" y=\"" << ly << "\" fill=\"" << colour(d) << "\">" << name << "</text>\n";
  }
  for (std::size_t j = 0; j < report.segments.size(); ++j) {
    ly += 18;
    legend << "<text x=\"" << width + 10 << "\" y=\"" << ly << "\">" << j + 1 << ":</text>\n";
    double lx = width + 34;
    for (const WallCrossing& c : report.segments[j]) {
      const std::string label = to_string(c.wall);
      if (lx + 7.0 * static_cast<double>(label.size()) > width + kLegend - 6) {
        lx = width + 34;
        ly += 14;
      }
      legend << "<text x=\"" << lx << "\" y=\"" << ly << "\" fill=\"" << colour(c.direction) << "\">" << label
         << "</text>\n";
      lx += 7.0 * static_cast<double>(label.size()) + 8;
    }
  }
  legend << "</g>\n";
  const double total_height = std::max(height, ly + 16);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + kLegend << "\" height=\"" << total_height
     << "\" viewBox=\"0 0 " << width + kLegend << ' ' << total_height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<svg width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
     << "\">\n";

  // Walls (alpha, k) with alpha positive meeting the drawing window.
  const double reach = std::max(xmax - xmin, ymax - ymin);
  std::set<AffineRoot> crossed;
  for (const auto& seg : report.segments) {
    for (const WallCrossing& c : seg) crossed.insert(c.wall);
  }
  os << "<g stroke-width=\"1\">\n";
  for (const Root& alpha : positive_roots(n)) {
    const Pt ea = unit_image(n, alpha.a), eb = unit_image(n, alpha.b);
    const Pt d{ea.x - eb.x, ea.y - eb.y};
    const double norm2 = d.x * d.x + d.y * d.y;
    const int kmax = static_cast<int>(std::ceil(reach * 2)) + 2;
    for (int k = -kmax; k <= kmax; ++k) {
      // Points x with (alpha, x) + k = 0; the pairing is (2/3) x.d for n = 3 and x.d / 2 for n = 2.
      const double factor = n == 3 ? 1.5 : 2.0;
      const Pt base{-k * factor * d.x / norm2, -k * factor * d.y / norm2};
      Pt dir{-d.y, d.x};
      if (n == 2) dir = {0, 1};
      const double len = std::hypot(dir.x, dir.y);
      dir = {dir.x / len, dir.y / len};
      const Pt from{base.x - reach * dir.x, base.y - reach * dir.y};
      const Pt to{base.x + reach * dir.x, base.y + reach * dir.y};
      const bool hit = crossed.contains(AffineRoot{alpha, k});
      os << "<line x1=\"" << sx(from.x) << "\" y1=\"" << sy(from.y) << "\" x2=\"" << sx(to.x) << "\" y2=\""
         << sy(to.y) << "\" stroke=\"" << (hit ? "#555" : "#ddd") << "\""
         << (hit ? "" : " stroke-dasharray=\"3,3\"") << "/>\n";
    }
  }
  os << "</g>\n";

  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2.5\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << sx(pts[i].x) << ',' << sy(pts[i].y);
  os << "\"/>\n";

  // Each segment gets its number beside its middle; the walls it meets are listed in the
  // legend on the right.
  for (std::size_t j = 0; j < report.segments.size(); ++j) {
    const Pt a{sx(pts[j].x), sy(pts[j].y)}, b{sx(pts[j + 1].x), sy(pts[j + 1].y)};
    const bool flip = std::pair(a.x, a.y) > std::pair(b.x, b.y);
    Pt normal = flip ? Pt{b.y - a.y, a.x - b.x} : Pt{a.y - b.y, b.x - a.x};
    const double len = std::hypot(normal.x, normal.y);
    normal = len > 0 ? Pt{normal.x / len, normal.y / len} : Pt{1, 0};
    const double side = j % 2 == 0 ? 1.0 : -1.0;
    const double along = j % 2 == 0 ? 0.4 : 0.6;
    const Pt anchor{a.x + along * (b.x - a.x) + side * 11 * normal.x,
                    a.y + along * (b.y - a.y) + side * 11 * normal.y + 4};
    os << "<text x=\"" << anchor.x << "\" y=\"" << anchor.y << "\" font-size=\"10\" font-style=\"italic\" "
       << "text-anchor=\"middle\" fill=\"#444\">" << j + 1 << "</text>\n";
  }
  std::vector<std::string> names(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::size_t first = 0;
    while (line[first] != line[i]) ++first;
    names[first] += (names[first].empty() ? "" : ",") + std::to_string(i);
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << "<circle cx=\"" << sx(pts[i].x) << "\" cy=\"" << sy(pts[i].y) << "\" r=\"4\" fill=\""
       << (i == 0 ? "#27ae60" : "black") << "\"/>\n";
    if (names[i].empty()) continue;
    os << "<text x=\"" << sx(pts[i].x) - 8 << "\" y=\"" << sy(pts[i].y) - 8 << "\" font-size=\"11\" text-anchor=\"end\">"
       << names[i] << "</text>\n";
  }
  os << "</svg>\n" << legend.str() << "</svg>\n";
  return os.str();
}

}  // namespace mvknuth
