#pragma once

#include <string>
#include <vector>

namespace growthlab::cli::svg {

struct Series {
    std::string label;
    std::vector<double> x, y;
};

struct Axes {
    std::string title, x_label, y_label;
    bool log_y = false;
};

/// Static line chart; one polyline per series with a legend.
std::string line_chart(const Axes& axes, const std::vector<Series>& series);

/// Grouped bar chart: groups along x, one bar per series within a group.
std::string bar_chart(const Axes& axes, const std::vector<std::string>& groups,
                      const std::vector<Series>& series);

} // namespace growthlab::cli::svg
