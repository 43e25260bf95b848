#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fsqm::cli {

struct Series {
    std::string label;
    /// Each polyline is drawn separately, so gaps in a curve stay open.
    std::vector<std::vector<std::pair<double, double>>> polylines;
};

struct Plot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    bool zero_line = false; ///< horizontal y = 0 axis
};

/// Standalone SVG document. Output depends only on the plot contents.
std::string render_svg(const Plot& plot);

} // namespace fsqm::cli
