#include "netft/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "netft/denoise.hpp"
#include "netft/matrix_io.hpp"

namespace netft {

std::string axis_name(sweep_axis axis) {
    return axis == sweep_axis::prune ? "prune" : "noise";
}

std::string metric_name(metric_kind metric) {
    return metric == metric_kind::f1 ? "f1" : "mse";
}

sweep_axis parse_axis(const std::string& name) {
    if (name == "prune") return sweep_axis::prune;
    if (name == "noise") return sweep_axis::noise;
    throw invalid_input_error("unknown axis name: " + name);
}

metric_kind parse_metric(const std::string& name) {
    if (name == "f1") return metric_kind::f1;
    if (name == "mse") return metric_kind::mse;
    throw invalid_input_error("unknown metric name: " + name);
}

namespace {

std::string fmt2(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

struct rgb {
    int r, g, b;
};

std::string hex(rgb c) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

int lerp_channel(int a, int b, double t) {
    return static_cast<int>(std::lround(a + (b - a) * t));
}

// Diverging blue-white-red scale on t in [-1, 1], centered at 0.
rgb diverging_color(double t) {
    constexpr rgb blue{33, 102, 172};
    constexpr rgb white{247, 247, 247};
    constexpr rgb red{178, 24, 43};
    t = std::clamp(t, -1.0, 1.0);
    if (t < 0.0) {
        return {lerp_channel(white.r, blue.r, -t), lerp_channel(white.g, blue.g, -t),
                lerp_channel(white.b, blue.b, -t)};
    }
    return {lerp_channel(white.r, red.r, t), lerp_channel(white.g, red.g, t),
            lerp_channel(white.b, red.b, t)};
}

const std::map<std::string, std::string>& method_colors() {
    static const std::map<std::string, std::string> colors = {
        {"iterft", "#e41a1c"},     {"real-thresh", "#377eb8"}, {"freq-thresh", "#4daf4a"},
        {"low-rank", "#984ea3"},   {"lans", "#ff7f00"},
    };
    return colors;
}

std::string series_color(const std::string& method, std::size_t fallback_index) {
    const auto it = method_colors().find(method);
    if (it != method_colors().end()) return it->second;
    static const char* extras[] = {"#a65628", "#f781bf", "#999999"};
    return extras[fallback_index % 3];
}

} // namespace

std::string render_heatmaps_svg(const std::vector<std::pair<std::string, real_matrix>>& panels) {
    if (panels.empty()) throw invalid_input_error("render_heatmaps: no panels");
    for (const auto& [title, m] : panels) {
        if (!m.same_shape(panels.front().second)) {
            throw invalid_input_error("render_heatmaps: panels must share a shape");
        }
    }

    double vmax = 0.0;
    for (const auto& [title, m] : panels) {
        for (double v : m.data()) vmax = std::max(vmax, std::abs(v));
    }
    if (vmax == 0.0) vmax = 1.0;

    const std::size_t cols = std::min<std::size_t>(4, panels.size());
    const std::size_t rows = (panels.size() + cols - 1) / cols;
    const int panel_px = 216;
    const int title_px = 22;
    const int pad = 12;
    const int cell_w = panel_px + pad;
    const int cell_h = panel_px + title_px + pad;
    const int width = static_cast<int>(cols) * cell_w + pad;
    const int height = static_cast<int>(rows) * cell_h + pad;

    const std::string zero_fill = hex(diverging_color(0.0));

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

    for (std::size_t p = 0; p < panels.size(); ++p) {
        const auto& [title, m] = panels[p];
        const int px = pad + static_cast<int>(p % cols) * cell_w;
        const int py = pad + static_cast<int>(p / cols) * cell_h;
        out << "<text x=\"" << px + panel_px / 2 << "\" y=\"" << py + 14
            << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" << title
            << "</text>\n";
        // Nested svg with one user unit per matrix cell.
        out << "<svg x=\"" << px << "\" y=\"" << py + title_px << "\" width=\"" << panel_px
            << "\" height=\"" << panel_px << "\" viewBox=\"0 0 " << m.cols() << " " << m.rows()
            << "\" preserveAspectRatio=\"none\" shape-rendering=\"crispEdges\">\n";
        out << "<rect width=\"" << m.cols() << "\" height=\"" << m.rows() << "\" fill=\""
            << zero_fill << "\"/>\n";
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const std::string fill = hex(diverging_color(m(i, j) / vmax));
                if (fill == zero_fill) continue;
                out << "<rect x=\"" << j << "\" y=\"" << i << "\" width=\"1\" height=\"1\" fill=\""
                    << fill << "\"/>\n";
            }
        }
        out << "</svg>\n";
        out << "<rect x=\"" << px << "\" y=\"" << py + title_px << "\" width=\"" << panel_px
            << "\" height=\"" << panel_px << "\" fill=\"none\" stroke=\"#444444\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void render_heatmaps(const std::vector<std::pair<std::string, real_matrix>>& panels,
                     const std::string& path) {
    write_text_file(path, render_heatmaps_svg(panels));
}

std::string render_curves_svg(const std::vector<aggregate_record>& aggregates,
                              metric_kind metric, sweep_axis axis, double reference_x) {
    if (aggregates.empty()) throw invalid_input_error("render_curves: no aggregates");
    const std::string model = aggregates.front().model;
    for (const auto& a : aggregates) {
        if (a.model != model) {
            throw invalid_input_error("render_curves: aggregates span several models");
        }
    }

    struct point {
        double x, mean, sem;
    };
    // Series keyed by method, canonical order first.
    std::vector<std::string> series_order;
    std::map<std::string, std::vector<point>> series;
    for (method m : all_methods()) {
        series_order.push_back(method_name(m));
    }
    for (const auto& a : aggregates) {
        if (series.find(a.method) == series.end() &&
            std::find(series_order.begin(), series_order.end(), a.method) == series_order.end()) {
            series_order.push_back(a.method);
        }
        const double x = axis == sweep_axis::prune ? a.prune : a.noise_sd;
        const double mean = metric == metric_kind::f1 ? a.mean_f1 : a.mean_mse;
        const double sem = metric == metric_kind::f1 ? a.sem_f1 : a.sem_mse;
        series[a.method].push_back({x, mean, sem});
    }
    series_order.erase(std::remove_if(series_order.begin(), series_order.end(),
                                      [&](const std::string& s) { return series.find(s) == series.end(); }),
                       series_order.end());
    for (auto& [name, pts] : series) {
        std::sort(pts.begin(), pts.end(), [](const point& a, const point& b) { return a.x < b.x; });
    }

    double xmin = reference_x, xmax = reference_x;
    double ymin = 0.0, ymax = 0.0;
    bool first = true;
    for (const auto& [name, pts] : series) {
        for (const auto& p : pts) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            const double lo = p.mean - p.sem, hi = p.mean + p.sem;
            if (first) {
                ymin = lo;
                ymax = hi;
                first = false;
            } else {
                ymin = std::min(ymin, lo);
                ymax = std::max(ymax, hi);
            }
        }
    }
    if (xmax == xmin) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    double ypad = 0.05 * (ymax - ymin);
    if (ypad == 0.0) ypad = std::max(0.05 * std::abs(ymax), 0.05);
    ymin -= ypad;
    ymax += ypad;

    const int width = 660, height = 420;
    const int ml = 74, mr = 150, mt = 46, mb = 58;
    const double pw = width - ml - mr, ph = height - mt - mb;
    const auto X = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    const auto Y = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

    const std::string metric_label = metric == metric_kind::f1 ? "mean F1" : "mean MSE";
    const std::string axis_label =
        axis == sweep_axis::prune ? "pruning proportion" : "noise SD";

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" font-family=\"sans-serif\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">"
        << model << ": " << metric_label << " vs " << axis_label << "</text>\n";

    // Axes and ticks.
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
        << mt + ph << "\" stroke=\"#000000\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
        << "\" stroke=\"#000000\"/>\n";
    for (int t = 0; t <= 5; ++t) {
        const double xv = xmin + (xmax - xmin) * t / 5.0;
        const double yv = ymin + (ymax - ymin) * t / 5.0;
        out << "<line x1=\"" << fmt2(X(xv)) << "\" y1=\"" << mt + ph << "\" x2=\"" << fmt2(X(xv))
            << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"#000000\"/>\n";
        out << "<text x=\"" << fmt2(X(xv)) << "\" y=\"" << mt + ph + 20
            << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt_tick(xv) << "</text>\n";
        out << "<line x1=\"" << ml - 5 << "\" y1=\"" << fmt2(Y(yv)) << "\" x2=\"" << ml
            << "\" y2=\"" << fmt2(Y(yv)) << "\" stroke=\"#000000\"/>\n";
        out << "<text x=\"" << ml - 8 << "\" y=\"" << fmt2(Y(yv) + 4)
            << "\" font-size=\"11\" text-anchor=\"end\">" << fmt_tick(yv) << "</text>\n";
    }
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 14
        << "\" font-size=\"13\" text-anchor=\"middle\">" << axis_label << "</text>\n";
    out << "<text x=\"20\" y=\"" << mt + ph / 2
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
        << mt + ph / 2 << ")\">" << metric_label << "</text>\n";

    // Reference line at the fixed default of the swept axis.
    if (reference_x >= xmin && reference_x <= xmax) {
        out << "<line x1=\"" << fmt2(X(reference_x)) << "\" y1=\"" << mt << "\" x2=\""
            << fmt2(X(reference_x)) << "\" y2=\"" << mt + ph
            << "\" stroke=\"#888888\" stroke-dasharray=\"5,4\"/>\n";
    }

    std::size_t si = 0;
    for (const auto& name : series_order) {
        const auto& pts = series.at(name);
        const std::string color = series_color(name, si);

        std::ostringstream poly;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) poly << " ";
            poly << fmt2(X(pts[i].x)) << "," << fmt2(Y(pts[i].mean));
        }
        out << "<polyline points=\"" << poly.str() << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\"/>\n";
        for (const auto& p : pts) {
            const double cx = X(p.x);
            out << "<circle cx=\"" << fmt2(cx) << "\" cy=\"" << fmt2(Y(p.mean))
                << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
            if (p.sem > 0.0) {
                const double y1 = Y(p.mean + p.sem), y2 = Y(p.mean - p.sem);
                out << "<line x1=\"" << fmt2(cx) << "\" y1=\"" << fmt2(y1) << "\" x2=\""
                    << fmt2(cx) << "\" y2=\"" << fmt2(y2) << "\" stroke=\"" << color << "\"/>\n";
                out << "<line x1=\"" << fmt2(cx - 3) << "\" y1=\"" << fmt2(y1) << "\" x2=\""
                    << fmt2(cx + 3) << "\" y2=\"" << fmt2(y1) << "\" stroke=\"" << color << "\"/>\n";
                out << "<line x1=\"" << fmt2(cx - 3) << "\" y1=\"" << fmt2(y2) << "\" x2=\""
                    << fmt2(cx + 3) << "\" y2=\"" << fmt2(y2) << "\" stroke=\"" << color << "\"/>\n";
            }
        }

        const double ly = mt + 10 + static_cast<double>(si) * 18;
        out << "<line x1=\"" << width - mr + 10 << "\" y1=\"" << fmt2(ly) << "\" x2=\""
            << width - mr + 34 << "\" y2=\"" << fmt2(ly) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << width - mr + 40 << "\" y=\"" << fmt2(ly + 4)
            << "\" font-size=\"12\">" << name << "</text>\n";
        ++si;
    }
    out << "</svg>\n";
    return out.str();
}

void render_curves(const std::vector<aggregate_record>& aggregates, metric_kind metric,
                   sweep_axis axis, double reference_x, const std::string& path) {
    write_text_file(path, render_curves_svg(aggregates, metric, axis, reference_x));
}

} // namespace netft
