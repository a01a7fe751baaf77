#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "growthlab/trajectory.hpp"

namespace growthlab::cli::svg {

namespace {

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 80, kRight = 180, kTop = 40, kBottom = 60;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

std::string escape(const std::string& s) {
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

// Short tick label; full precision is in the CSV.
std::string tick(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

const char* colour(std::size_t i) { return kPalette[i % std::size(kPalette)]; }

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
        if (hi == lo) hi = lo + 1.0;
    }
    double map(double v, double a, double b) const { return a + (v - lo) / (hi - lo) * (b - a); }
};

void frame(std::ostringstream& os, const Axes& axes, const Range& xr, const Range& yr, bool numeric_x) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"15\">" << escape(axes.title) << "</text>\n";
    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    os << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0 << "\" height=\"" << y0 - y1
       << "\" fill=\"none\" stroke=\"#444\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double fy = yr.lo + (yr.hi - yr.lo) * k / 4.0;
        const double py = yr.map(fy, y0, y1);
        os << "<line x1=\"" << x0 << "\" x2=\"" << x1 << "\" y1=\"" << py << "\" y2=\"" << py
           << "\" stroke=\"#ddd\"/>\n";
        os << "<text x=\"" << x0 - 6 << "\" y=\"" << py + 4 << "\" text-anchor=\"end\">"
           << tick(axes.log_y ? std::pow(10.0, fy) : fy) << "</text>\n";
        if (numeric_x) {
            const double fx = xr.lo + (xr.hi - xr.lo) * k / 4.0;
            os << "<text x=\"" << xr.map(fx, x0, x1) << "\" y=\"" << y0 + 18 << "\" text-anchor=\"middle\">"
               << tick(fx) << "</text>\n";
        }
    }
    os << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 16 << "\" text-anchor=\"middle\">"
       << escape(axes.x_label) << "</text>\n";
    os << "<text transform=\"translate(18," << (y0 + y1) / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
       << escape(axes.y_label + (axes.log_y ? " (log scale)" : "")) << "</text>\n";
}

void legend(std::ostringstream& os, const std::vector<Series>& series) {
    const double x = kWidth - kRight + 16;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double y = kTop + 10 + 20.0 * static_cast<double>(i);
        os << "<rect x=\"" << x << "\" y=\"" << y - 9 << "\" width=\"14\" height=\"10\" fill=\"" << colour(i)
           << "\"/>\n<text x=\"" << x + 20 << "\" y=\"" << y << "\">" << escape(series[i].label) << "</text>\n";
    }
}

double transform(double v, bool log_y) { return log_y ? (v > 0.0 ? std::log10(v) : NAN) : v; }

} // namespace

std::string line_chart(const Axes& axes, const std::vector<Series>& series) {
    Range xr, yr;
    for (const auto& s : series) {
        for (double v : s.x) xr.add(v);
        for (double v : s.y) yr.add(transform(v, axes.log_y));
    }
    xr.pad();
    yr.pad();
    std::ostringstream os;
    frame(os, axes, xr, yr, true);
    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    for (std::size_t i = 0; i < series.size(); ++i) {
        os << "<polyline fill=\"none\" stroke-width=\"1.8\" stroke=\"" << colour(i) << "\" points=\"";
        const auto& s = series[i];
        for (std::size_t k = 0; k < s.x.size() && k < s.y.size(); ++k) {
            const double v = transform(s.y[k], axes.log_y);
            if (!std::isfinite(v)) continue;
            os << format_number(std::round(xr.map(s.x[k], x0, x1) * 100) / 100) << ','
               << format_number(std::round(yr.map(v, y0, y1) * 100) / 100) << ' ';
        }
        os << "\"/>\n";
    }
    legend(os, series);
    os << "</svg>\n";
    return os.str();
}

std::string bar_chart(const Axes& axes, const std::vector<std::string>& groups, const std::vector<Series>& series) {
    Range xr, yr;
    xr.lo = 0.0;
    xr.hi = static_cast<double>(groups.size());
    if (!axes.log_y) yr.add(0.0); // bars start at zero on a linear axis
    for (const auto& s : series)
        for (double v : s.y) yr.add(transform(v, axes.log_y));
    yr.pad();
    std::ostringstream os;
    frame(os, axes, xr, yr, false);
    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    const double group_w = (x1 - x0) / std::max<std::size_t>(groups.size(), 1);
    const double bar_w = 0.8 * group_w / std::max<std::size_t>(series.size(), 1);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const double gx = x0 + group_w * static_cast<double>(g);
        os << "<text x=\"" << gx + group_w / 2 << "\" y=\"" << y0 + 18 << "\" text-anchor=\"middle\">"
           << escape(groups[g]) << "</text>\n";
        for (std::size_t i = 0; i < series.size(); ++i) {
            if (g >= series[i].y.size()) continue;
            const double v = transform(series[i].y[g], axes.log_y);
            if (!std::isfinite(v)) continue;
            const double top = yr.map(v, y0, y1), base = yr.map(std::max(yr.lo, 0.0), y0, y1);
            os << "<rect x=\"" << format_number(gx + 0.1 * group_w + bar_w * static_cast<double>(i))
               << "\" y=\"" << format_number(std::min(top, base)) << "\" width=\"" << format_number(bar_w)
               << "\" height=\"" << format_number(std::abs(base - top)) << "\" fill=\"" << colour(i) << "\"/>\n";
        }
    }
    legend(os, series);
    os << "</svg>\n";
    return os.str();
}

} // namespace growthlab::cli::svg
