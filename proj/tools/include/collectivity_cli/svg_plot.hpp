#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace collectivity::cli {

/// Self-contained SVG 1.1 line plots: polylines, axes with tick labels and
/// a legend. No external renderer; meant for quick visual inspection, not
/// for bit-exact comparison.
struct Series {
    std::string label;
    std::string color = "#1f77b4";
    bool dashed = false;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string comment;  // emitted as an XML comment (config provenance)
    std::string title;
    std::string x_label;
    std::string y_label;
    bool y_log = false;  // log10 axis; non-positive samples are dropped
    int width = 720;
    int height = 480;
};

std::string render_line_plot(const PlotSpec& spec, const std::vector<Series>& series);

void write_line_plot(const std::filesystem::path& path, const PlotSpec& spec,
                     const std::vector<Series>& series);

}  // namespace collectivity::cli
