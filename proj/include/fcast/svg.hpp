#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fcast {

/// Bare-bones SVG line/scatter plotting for the batch report figures.
/// One cartesian panel per plot; render() produces a standalone document,
/// render_group() a translated <g> for grid composition.
class SvgPlot {
public:
    using Point = std::pair<double, double>;

    SvgPlot(int width, int height, std::string title);

    void polyline(const std::vector<Point>& pts, const std::string& color,
                  double stroke_width = 1.5, bool dashed = false);
    void scatter(const std::vector<Point>& pts, const std::string& color,
                 double radius = 3.0);
    void text_at(double x, double y, const std::string& label,
                 const std::string& color = "#333333");
    void hline(double y, const std::string& color, bool dashed = true);

    [[nodiscard]] std::string render() const;
    [[nodiscard]] std::string render_group(double dx, double dy) const;

    [[nodiscard]] int width() const { return width_; }
    [[nodiscard]] int height() const { return height_; }

private:
    struct Series {
        std::vector<Point> pts;
        std::string color;
        double stroke = 1.5;
        bool dashed = false;
        bool is_scatter = false;
        double radius = 3.0;
    };
    struct Label {
        double x, y;
        std::string text, color;
    };

    void touch(const std::vector<Point>& pts);
    [[nodiscard]] std::string body() const;

    int width_, height_;
    std::string title_;
    std::vector<Series> series_;
    std::vector<Label> labels_;
    std::vector<std::pair<double, std::pair<std::string, bool>>> hlines_;
    double xmin_ = 0, xmax_ = 1, ymin_ = 0, ymax_ = 1;
    bool touched_ = false;
};

/// Wraps pre-rendered <g> groups laid out on a grid into one SVG document.
[[nodiscard]] std::string svg_grid(const std::vector<std::string>& groups, int columns,
                                   int cell_width, int cell_height);

}  // namespace fcast
