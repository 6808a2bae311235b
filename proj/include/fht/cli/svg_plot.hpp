#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace fht::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct Panel {
  std::string title;
  std::vector<Series> series;
};

/// Self-contained 800x500 SVG with two side-by-side panels of polylines.
std::string render_svg(const std::string& title, const Panel& left, const Panel& right);

void write_svg(const std::filesystem::path& path, const std::string& title,
               const Panel& left, const Panel& right);

}  // namespace fht::cli
