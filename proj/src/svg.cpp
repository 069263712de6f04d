#include "fcast/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace fcast {

namespace {

constexpr double kMarginLeft = 52.0;
constexpr double kMarginRight = 14.0;
constexpr double kMarginTop = 26.0;
constexpr double kMarginBottom = 34.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Round tick step to 1/2/5 decades.
double tick_step(double span) {
    if (span <= 0) return 1.0;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    if (norm < 1.5) return mag;
    if (norm < 3.5) return 2.0 * mag;
    if (norm < 7.5) return 5.0 * mag;
    return 10.0 * mag;
}

}  // namespace

SvgPlot::SvgPlot(int width, int height, std::string title)
    : width_(width), height_(height), title_(std::move(title)) {}

void SvgPlot::touch(const std::vector<Point>& pts) {
    for (const auto& [x, y] : pts) {
        if (!touched_) {
            xmin_ = xmax_ = x;
            ymin_ = ymax_ = y;
            touched_ = true;
        } else {
            xmin_ = std::min(xmin_, x);
            xmax_ = std::max(xmax_, x);
            ymin_ = std::min(ymin_, y);
            ymax_ = std::max(ymax_, y);
        }
    }
}

void SvgPlot::polyline(const std::vector<Point>& pts, const std::string& color,
                       double stroke_width, bool dashed) {
    touch(pts);
    series_.push_back(Series{pts, color, stroke_width, dashed, false, 0.0});
}

void SvgPlot::scatter(const std::vector<Point>& pts, const std::string& color,
                      double radius) {
    touch(pts);
    series_.push_back(Series{pts, color, 0.0, false, true, radius});
}

void SvgPlot::text_at(double x, double y, const std::string& label,
                      const std::string& color) {
    labels_.push_back(Label{x, y, label, color});
}

void SvgPlot::hline(double y, const std::string& color, bool dashed) {
    hlines_.push_back({y, {color, dashed}});
    touch({{touched_ ? xmin_ : 0.0, y}});
}

std::string SvgPlot::body() const {
    double xmin = xmin_, xmax = xmax_, ymin = ymin_, ymax = ymax_;
    if (xmax - xmin < 1e-12) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax - ymin < 1e-12) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double pad_y = 0.05 * (ymax - ymin);
    ymin -= pad_y;
    ymax += pad_y;

    const double plot_w = width_ - kMarginLeft - kMarginRight;
    const double plot_h = height_ - kMarginTop - kMarginBottom;
    const auto sx = [&](double x) {
        return kMarginLeft + (x - xmin) / (xmax - xmin) * plot_w;
    };
    const auto sy = [&](double y) {
        return kMarginTop + (ymax - y) / (ymax - ymin) * plot_h;
    };

    std::ostringstream out;
    out << "<rect x=\"" << fmt(kMarginLeft) << "\" y=\"" << fmt(kMarginTop)
        << "\" width=\"" << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
        << "\" fill=\"white\" stroke=\"#888888\"/>\n";
    out << "<text x=\"" << fmt(width_ / 2.0)
        << "\" y=\"16\" text-anchor=\"middle\" font-size=\"13\" "
           "font-family=\"sans-serif\">"
        << title_ << "</text>\n";

    const double xstep = tick_step(xmax - xmin);
    for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-9; x += xstep) {
        out << "<line x1=\"" << fmt(sx(x)) << "\" y1=\"" << fmt(kMarginTop + plot_h)
            << "\" x2=\"" << fmt(sx(x)) << "\" y2=\"" << fmt(kMarginTop + plot_h + 4)
            << "\" stroke=\"#555555\"/>\n";
        out << "<text x=\"" << fmt(sx(x)) << "\" y=\"" << fmt(kMarginTop + plot_h + 16)
            << "\" text-anchor=\"middle\" font-size=\"10\" "
               "font-family=\"sans-serif\">"
            << fmt(x) << "</text>\n";
    }
    const double ystep = tick_step(ymax - ymin);
    for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax + 1e-9; y += ystep) {
        out << "<line x1=\"" << fmt(kMarginLeft - 4) << "\" y1=\"" << fmt(sy(y))
            << "\" x2=\"" << fmt(kMarginLeft) << "\" y2=\"" << fmt(sy(y))
            << "\" stroke=\"#555555\"/>\n";
        out << "<text x=\"" << fmt(kMarginLeft - 7) << "\" y=\"" << fmt(sy(y) + 3)
            << "\" text-anchor=\"end\" font-size=\"10\" font-family=\"sans-serif\">"
            << fmt(y) << "</text>\n";
    }

    for (const auto& [y, style] : hlines_) {
        out << "<line x1=\"" << fmt(sx(xmin)) << "\" y1=\"" << fmt(sy(y)) << "\" x2=\""
            << fmt(sx(xmax)) << "\" y2=\"" << fmt(sy(y)) << "\" stroke=\"" << style.first
            << "\"" << (style.second ? " stroke-dasharray=\"5,4\"" : "") << "/>\n";
    }

    for (const auto& s : series_) {
        if (s.is_scatter) {
            for (const auto& [x, y] : s.pts) {
                out << "<circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y))
                    << "\" r=\"" << fmt(s.radius) << "\" fill=\"" << s.color << "\"/>\n";
            }
        } else {
            out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\""
                << fmt(s.stroke) << "\""
                << (s.dashed ? " stroke-dasharray=\"5,4\"" : "") << " points=\"";
            for (const auto& [x, y] : s.pts) out << fmt(sx(x)) << ',' << fmt(sy(y)) << ' ';
            out << "\"/>\n";
        }
    }
    for (const auto& l : labels_) {
        out << "<text x=\"" << fmt(sx(l.x) + 4) << "\" y=\"" << fmt(sy(l.y) - 3)
            << "\" font-size=\"10\" font-family=\"sans-serif\" fill=\"" << l.color
            << "\">" << l.text << "</text>\n";
    }
    return out.str();
}

std::string SvgPlot::render() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_
        << "\" height=\"" << height_ << "\">\n"
        << body() << "</svg>\n";
    return out.str();
}

std::string SvgPlot::render_group(double dx, double dy) const {
    std::ostringstream out;
    out << "<g transform=\"translate(" << fmt(dx) << ',' << fmt(dy) << ")\">\n"
        << body() << "</g>\n";
    return out.str();
}

std::string svg_grid(const std::vector<std::string>& groups, int columns, int cell_width,
                     int cell_height) {
    const int rows = (static_cast<int>(groups.size()) + columns - 1) / columns;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << columns * cell_width
        << "\" height=\"" << rows * cell_height << "\">\n";
    for (const auto& g : groups) out << g;
    out << "</svg>\n";
    return out.str();
}

}  // namespace fcast
