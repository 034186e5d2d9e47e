#include "frieze/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace frieze {

std::string render_ascii(const FriezeMap& f) {
  const int m = f.size();
  std::vector<std::vector<std::string>> cells(m);
  std::size_t width = 1;
  for (int i = 0; i < m; ++i) {
    for (long j = i; j <= i + m; ++j) {
      cells[i].push_back(f.at(i, j).to_string());
      width = std::max(width, cells[i].back().size());
    }
  }
  std::ostringstream os;
  for (int i = 0; i < m; ++i) {
    os << std::string(i * (width + 1), ' ');
    for (std::size_t c = 0; c < cells[i].size(); ++c) {
      if (c > 0) os << ' ';
      os << std::string(width - cells[i][c].size(), ' ') << cells[i][c];
    }
    os << '\n';
  }
  return os.str();
}

namespace {

constexpr double kCentre = 220.0;
constexpr double kRadius = 180.0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

struct Canvas {
  int m;
  std::ostringstream body;

  // Vertex 1 at the top, then counterclockwise on screen.
  double x(int v) const { return kCentre - kRadius * std::sin(2 * M_PI * (v - 1) / m); }
  double y(int v) const { return kCentre - kRadius * std::cos(2 * M_PI * (v - 1) / m); }

  void segment(int p, int q, const std::string& label, const char* cls) {
    body << "  <line class=\"" << cls << "\" x1=\"" << fmt(x(p)) << "\" y1=\""
         << fmt(y(p)) << "\" x2=\"" << fmt(x(q)) << "\" y2=\"" << fmt(y(q))
         << "\"/>\n";
    body << "  <text class=\"" << cls << "-label\" x=\"" << fmt((x(p) + x(q)) / 2)
         << "\" y=\"" << fmt((y(p) + y(q)) / 2) << "\">" << label << "</text>\n";
  }

  std::string finish() {
    std::ostringstream os;
    for (int v = 1; v <= m; ++v) {
      const double dx = x(v) - kCentre, dy = y(v) - kCentre;
      os << "  <circle cx=\"" << fmt(x(v)) << "\" cy=\"" << fmt(y(v)) << "\" r=\"3\"/>\n";
      os << "  <text class=\"vertex\" x=\"" << fmt(kCentre + dx * 1.12) << "\" y=\""
         << fmt(kCentre + dy * 1.12) << "\">" << v << "</text>\n";
    }
    const std::string size = fmt(2 * kCentre);
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size +
           "\" height=\"" + size + "\" viewBox=\"0 0 " + size + " " + size + "\">\n" +
           "  <style>line{stroke:#333;stroke-width:1.5}line.marked{stroke:#c00;"
           "stroke-width:3}text{font:13px sans-serif;text-anchor:middle;"
           "dominant-baseline:middle}text.marked-label{fill:#c00}</style>\n" +
           body.str() + os.str() + "</svg>\n";
  }
};

void guard(int m) {
  if (m > 64) throw std::invalid_argument("render_svg: m = " + std::to_string(m) + " exceeds 64");
}

}  // namespace

std::string render_svg(const Triangulation& t, const std::optional<std::array<int, 3>>& marked) {
  guard(t.size());
  const int m = t.size();
  Canvas c{m, {}};
  auto is_marked = [&](int p, int q) {
    if (!marked) return false;
    const auto& v = *marked;
    return std::count(v.begin(), v.end(), p) + std::count(v.begin(), v.end(), q) == 2;
  };
  for (int v = 1; v <= m; ++v) {
    const int w = v % m + 1;
    if (!is_marked(v, w)) c.segment(std::min(v, w), std::max(v, w), "1", "edge");
  }
  for (const auto& d : t.diagonals()) {
    if (!is_marked(d.p, d.q)) c.segment(d.p, d.q, "1", "diagonal");
  }
  if (marked) {
    const auto& v = *marked;
    for (int s = 0; s < 3; ++s) {
      const int p = v[s], q = v[(s + 1) % 3];
      c.segment(p, q, cc_labels_from(t, p)[q - 1].get_str(), "marked");
    }
  }
  return c.finish();
}

std::string render_svg(const FriezeMap& f) {
  guard(f.size());
  const int m = f.size();
  Canvas c{m, {}};
  for (int p = 1; p <= m; ++p) {
    for (int q = p + 1; q <= m; ++q) {
      const bool edge = q == p + 1 || (p == 1 && q == m);
      c.segment(p, q, f.at(p, q).to_string(), edge ? "edge" : "diagonal");
    }
  }
  return c.finish();
}

}  // namespace frieze
