#include "fsqm/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace fsqm::cli {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0; // room for curve labels
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string tick_label(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", std::abs(x) < 1e-12 ? 0.0 : x);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

double nice_step(double span)
{
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        if (m * mag >= raw) return m * mag;
    }
    return 10.0 * mag;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v)
    {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void finish()
    {
        if (!(lo <= hi)) {
            lo = -1.0;
            hi = 1.0;
        }
        if (hi - lo < 1e-12) {
            lo -= 0.5;
            hi += 0.5;
        }
        const double pad = 0.04 * (hi - lo);
        lo -= pad;
        hi += pad;
    }
};

} // namespace

std::string render_svg(const Plot& plot)
{
    Range xr;
    Range yr;
    for (const auto& s : plot.series) {
        for (const auto& line : s.polylines) {
            for (auto [x, y] : line) {
                xr.add(x);
                yr.add(y);
            }
        }
    }
    if (plot.zero_line) yr.add(0.0);
    xr.finish();
    yr.finish();

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto sy = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

    std::string o;
    o += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
         "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
         escape(plot.title) + "</text>\n";

    // ticks and grid
    const double xs = nice_step(xr.hi - xr.lo);
    for (double t = std::ceil(xr.lo / xs) * xs; t <= xr.hi + 1e-12; t += xs) {
        const std::string px = num(sx(t));
        o += "<line x1=\"" + px + "\" y1=\"" + num(kTop) + "\" x2=\"" + px + "\" y2=\"" + num(kTop + ph) +
             "\" stroke=\"#e5e5e5\"/>\n";
        o += "<text x=\"" + px + "\" y=\"" + num(kTop + ph + 18) + "\" text-anchor=\"middle\">" + tick_label(t) +
             "</text>\n";
    }
    const double ys = nice_step(yr.hi - yr.lo);
    for (double t = std::ceil(yr.lo / ys) * ys; t <= yr.hi + 1e-12; t += ys) {
        const std::string py = num(sy(t));
        o += "<line x1=\"" + num(kLeft) + "\" y1=\"" + py + "\" x2=\"" + num(kLeft + pw) + "\" y2=\"" + py +
             "\" stroke=\"#e5e5e5\"/>\n";
        o += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(sy(t) + 4) + "\" text-anchor=\"end\">" + tick_label(t) +
             "</text>\n";
    }
    o += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
    if (plot.zero_line && yr.lo < 0.0 && yr.hi > 0.0) {
        o += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(sy(0.0)) + "\" x2=\"" + num(kLeft + pw) + "\" y2=\"" +
             num(sy(0.0)) + "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
    }
    o += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"" + num(kHeight - 14) + "\" text-anchor=\"middle\">" +
         escape(plot.x_label) + "</text>\n";
    o += "<text transform=\"translate(18 " + num(kTop + ph / 2) + ") rotate(-90)\" text-anchor=\"middle\">" +
         escape(plot.y_label) + "</text>\n";

    o += "<g fill=\"none\" stroke-width=\"1.6\">\n";
    for (std::size_t i = 0; i < plot.series.size(); ++i) {
        const auto& s = plot.series[i];
        const char* color = kPalette[i % std::size(kPalette)];
        for (const auto& line : s.polylines) {
            std::string pts;
            for (auto [x, y] : line) {
                if (!std::isfinite(x) || !std::isfinite(y)) continue;
                if (!pts.empty()) pts += ' ';
                pts += num(sx(x)) + ',' + num(sy(y));
            }
            if (pts.empty()) continue;
            o += "<polyline stroke=\"" + std::string(color) + "\" points=\"" + pts + "\"/>\n";
        }
    }
    o += "</g>\n";

    // legend / curve labels
    for (std::size_t i = 0; i < plot.series.size(); ++i) {
        const double y = kTop + 14.0 + 18.0 * static_cast<double>(i);
        const char* color = kPalette[i % std::size(kPalette)];
        o += "<line x1=\"" + num(kLeft + pw + 10) + "\" y1=\"" + num(y - 4) + "\" x2=\"" + num(kLeft + pw + 30) +
             "\" y2=\"" + num(y - 4) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        o += "<text x=\"" + num(kLeft + pw + 35) + "\" y=\"" + num(y) + "\">" + escape(plot.series[i].label) +
             "</text>\n";
    }
    o += "</svg>\n";
    return o;
}

} // namespace fsqm::cli
