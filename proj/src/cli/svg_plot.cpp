#include "fht/cli/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "fht/errors.hpp"

namespace fht::cli {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 500;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

struct Box {
  double left, top, width, height;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

void draw_panel(std::ostringstream& svg, const Panel& panel, const Box& box) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : panel.series) {
    for (double v : s.x) xmin = std::min(xmin, v), xmax = std::max(xmax, v);
    for (double v : s.y) {
      if (std::isfinite(v)) ymin = std::min(ymin, v), ymax = std::max(ymax, v);
    }
  }
  if (!(xmin < xmax)) xmin -= 1.0, xmax += 1.0;
  if (!(ymin < ymax)) {
    const double pad = std::isfinite(ymin) && ymin != 0.0 ? 0.1 * std::abs(ymin) : 1.0;
    ymin = (std::isfinite(ymin) ? ymin : 0.0) - pad;
    ymax = (std::isfinite(ymax) ? ymax : 0.0) + pad;
  }
  const auto px = [&](double x) { return box.left + (x - xmin) / (xmax - xmin) * box.width; };
  const auto py = [&](double y) { return box.top + (ymax - y) / (ymax - ymin) * box.height; };

  svg << "<text x=\"" << box.left + box.width / 2 << "\" y=\"" << box.top - 10
      << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(panel.title) << "</text>\n";
  svg << "<rect x=\"" << box.left << "\" y=\"" << box.top << "\" width=\"" << box.width
      << "\" height=\"" << box.height << "\" fill=\"none\" stroke=\"#444\"/>\n";
  const double bottom = box.top + box.height;
  svg << "<text x=\"" << box.left << "\" y=\"" << bottom + 16 << "\" font-size=\"11\">"
      << num(xmin) << "</text>\n";
  svg << "<text x=\"" << box.left + box.width << "\" y=\"" << bottom + 16
      << "\" text-anchor=\"end\" font-size=\"11\">" << num(xmax) << "</text>\n";
  svg << "<text x=\"" << box.left - 4 << "\" y=\"" << box.top + 10
      << "\" text-anchor=\"end\" font-size=\"11\">" << num(ymax) << "</text>\n";
  svg << "<text x=\"" << box.left - 4 << "\" y=\"" << bottom
      << "\" text-anchor=\"end\" font-size=\"11\">" << num(ymin) << "</text>\n";
  if (ymin < 0.0 && ymax > 0.0) {
    svg << "<line x1=\"" << box.left << "\" y1=\"" << py(0.0) << "\" x2=\""
        << box.left + box.width << "\" y2=\"" << py(0.0)
        << "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
  }

  for (std::size_t k = 0; k < panel.series.size(); ++k) {
    const auto& s = panel.series[k];
    const char* color = kColors[k % std::size(kColors)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      svg << num(px(s.x[i])) << ',' << num(py(s.y[i])) << ' ';
    }
    svg << "\"/>\n";
    const double ly = box.top + 16.0 + 16.0 * static_cast<double>(k);
    svg << "<line x1=\"" << box.left + 8 << "\" y1=\"" << ly - 4 << "\" x2=\"" << box.left + 28
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << box.left + 32 << "\" y=\"" << ly << "\" font-size=\"11\">"
        << escape(s.label) << "</text>\n";
  }
}

}  // namespace

std::string render_svg(const std::string& title, const Panel& left, const Panel& right) {
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"16\">"
      << escape(title) << "</text>\n";
  draw_panel(svg, left, Box{60, 70, 310, 380});
  draw_panel(svg, right, Box{460, 70, 310, 380});
  svg << "</svg>\n";
  return svg.str();
}

void write_svg(const std::filesystem::path& path, const std::string& title,
               const Panel& left, const Panel& right) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << render_svg(title, left, right);
}

}  // namespace fht::cli
