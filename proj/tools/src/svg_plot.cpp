#include "collectivity_cli/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "collectivity_cli/csv.hpp"

namespace collectivity::cli {

namespace {

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    bool ok() const { return lo < hi; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

// Round tick spacing to 1/2/5 * 10^k.
std::vector<double> ticks(const Range& r, int target = 6) {
    std::vector<double> out;
    const double span = r.hi - r.lo;
    if (!(span > 0.0)) return out;
    double step = std::pow(10.0, std::floor(std::log10(span / target)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (span / (step * m) <= target) {
            step *= m;
            break;
        }
    }
    const double first = std::ceil(r.lo / step) * step;
    for (double v = first; v <= r.hi + 0.5 * step; v += step) out.push_back(v);
    return out;
}

}  // namespace

std::string render_line_plot(const PlotSpec& spec, const std::vector<Series>& series) {
    const double ml = 70, mr = 20, mt = 40, mb = 55;
    const double pw = spec.width - ml - mr;
    const double ph = spec.height - mt - mb;

    auto ty = [&](double v) { return spec.y_log ? std::log10(v) : v; };

    Range xr, yr;
    for (const Series& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (spec.y_log && !(s.y[i] > 0.0)) continue;
            xr.add(s.x[i]);
            yr.add(ty(s.y[i]));
        }
    if (!xr.ok()) xr = {0.0, 1.0};
    if (!yr.ok()) yr = {0.0, 1.0};
    if (xr.hi == xr.lo) xr.hi = xr.lo + 1.0;
    if (yr.hi == yr.lo) yr.hi = yr.lo + 1.0;

    auto px = [&](double v) { return ml + (v - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double v) { return mt + ph - (ty(v) - yr.lo) / (yr.hi - yr.lo) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << spec.width << "\" height=\"" << spec.height << "\">\n";
    if (!spec.comment.empty()) svg << "<!-- " << spec.comment << " -->\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes box and ticks
    svg << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\""
        << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double t : ticks(xr)) {
        const double x = ml + (t - xr.lo) / (xr.hi - xr.lo) * pw;
        svg << "<line x1=\"" << x << "\" y1=\"" << mt + ph << "\" x2=\"" << x << "\" y2=\""
            << mt + ph + 5 << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << x << "\" y=\"" << mt + ph + 20
            << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt(t) << "</text>\n";
    }
    for (double t : ticks(yr)) {
        const double y = mt + ph - (t - yr.lo) / (yr.hi - yr.lo) * ph;
        svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << y << "\" x2=\"" << ml << "\" y2=\"" << y
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << ml - 8 << "\" y=\"" << y + 4
            << "\" font-size=\"11\" text-anchor=\"end\">"
            << (spec.y_log ? "1e" + fmt(t) : fmt(t)) << "</text>\n";
    }

    svg << "<text x=\"" << ml + pw / 2 << "\" y=\"20\" font-size=\"14\" text-anchor=\"middle\">"
        << spec.title << "</text>\n"
        << "<text x=\"" << ml + pw / 2 << "\" y=\"" << spec.height - 12
        << "\" font-size=\"12\" text-anchor=\"middle\">" << spec.x_label << "</text>\n"
        << "<text x=\"16\" y=\"" << mt + ph / 2 << "\" font-size=\"12\" text-anchor=\"middle\""
        << " transform=\"rotate(-90 16 " << mt + ph / 2 << ")\">" << spec.y_label << "</text>\n";

    for (const Series& s : series) {
        svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.3\"";
        if (s.dashed) svg << " stroke-dasharray=\"6 4\"";
        svg << " points=\"";
        bool in_segment = false;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (spec.y_log && !(s.y[i] > 0.0)) {
                in_segment = false;
                continue;
            }
            if (in_segment) svg << ' ';
            svg << fmt(px(s.x[i])) << ',' << fmt(py(s.y[i]));
            in_segment = true;
        }
        svg << "\"/>\n";
    }

    double ly = mt + 14;
    for (const Series& s : series) {
        svg << "<line x1=\"" << ml + pw - 130 << "\" y1=\"" << ly << "\" x2=\"" << ml + pw - 105
            << "\" y2=\"" << ly << "\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
        if (s.dashed) svg << " stroke-dasharray=\"6 4\"";
        svg << "/>\n<text x=\"" << ml + pw - 100 << "\" y=\"" << ly + 4
            << "\" font-size=\"11\">" << s.label << "</text>\n";
        ly += 16;
    }

    svg << "</svg>\n";
    return svg.str();
}

void write_line_plot(const std::filesystem::path& path, const PlotSpec& spec,
                     const std::vector<Series>& series) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path.string());
    out << render_line_plot(spec, series);
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace collectivity::cli
