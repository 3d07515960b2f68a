#pragma once

#include <string>
#include <utility>
#include <vector>

#include "netft/matrix.hpp"
#include "netft/metrics.hpp"

namespace netft {

enum class sweep_axis { prune, noise };
enum class metric_kind { f1, mse };

std::string axis_name(sweep_axis axis);
std::string metric_name(metric_kind metric);
sweep_axis parse_axis(const std::string& name);
metric_kind parse_metric(const std::string& name);

/// One grid of cell-colored adjacency panels sharing a diverging color
/// scale centered at 0. Panels must share a shape. Output bytes are a
/// pure function of the inputs.
std::string render_heatmaps_svg(const std::vector<std::pair<std::string, real_matrix>>& panels);
void render_heatmaps(const std::vector<std::pair<std::string, real_matrix>>& panels,
                     const std::string& path);

/// One line per method with +-1 SEM error bars, a vertical reference line
/// at the fixed default of the other axis, and a legend. All aggregates
/// must belong to one model; the x coordinate is the swept axis value.
std::string render_curves_svg(const std::vector<aggregate_record>& aggregates,
                              metric_kind metric, sweep_axis axis, double reference_x);
void render_curves(const std::vector<aggregate_record>& aggregates, metric_kind metric,
                   sweep_axis axis, double reference_x, const std::string& path);

} // namespace netft
