#include "growthlab/trajectory.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "growthlab/error.hpp"

namespace growthlab {

Trajectory::Trajectory(std::vector<double> times, std::vector<double> output,
                       std::optional<StateSeries> state)
    : times_(std::move(times)), output_(std::move(output)), state_(std::move(state)) {
    require(times_.size() == output_.size(), "trajectory: times and output lengths differ");
    for (std::size_t i = 0; i < times_.size(); ++i) {
        require(std::isfinite(times_[i]), "trajectory: non-finite time");
        require(std::isfinite(output_[i]) && output_[i] > 0.0,
                "trajectory: output must be finite and strictly positive");
        if (i > 0) require(times_[i] > times_[i - 1], "trajectory: times must be strictly increasing");
    }
    if (state_) {
        require(state_->rows.size() == times_.size(), "trajectory: state rows do not match samples");
        for (const auto& row : state_->rows)
            require(row.size() == state_->names.size(), "trajectory: ragged state row");
    }
}

std::vector<double> Trajectory::state_column(const std::string& name) const {
    require(state_.has_value(), "trajectory: no state recorded");
    for (std::size_t j = 0; j < state_->names.size(); ++j) {
        if (state_->names[j] != name) continue;
        std::vector<double> col;
        col.reserve(state_->rows.size());
        for (const auto& row : state_->rows) col.push_back(row[j]);
        return col;
    }
    throw Error("trajectory: unknown state variable '" + name + "'");
}

Trajectory Trajectory::slice(double t_begin, double t_end) const {
    std::vector<double> t, y;
    std::optional<StateSeries> st;
    if (state_) st = StateSeries{state_->names, {}};
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (times_[i] < t_begin || times_[i] > t_end) continue;
        t.push_back(times_[i]);
        y.push_back(output_[i]);
        if (st) st->rows.push_back(state_->rows[i]);
    }
    return Trajectory(std::move(t), std::move(y), std::move(st));
}

std::string format_number(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t_years,Y";
    if (traj.state())
        for (const auto& name : traj.state()->names) os << ',' << name;
    os << '\n';
    for (std::size_t i = 0; i < traj.size(); ++i) {
        os << format_number(traj.times()[i]) << ',' << format_number(traj.output()[i]);
        if (traj.state())
            for (double v : traj.state()->rows[i]) os << ',' << format_number(v);
        os << '\n';
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
        while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
        cells.push_back(cell);
    }
    return cells;
}

double parse_number(const std::string& cell) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    require(ec == std::errc() && ptr == cell.data() + cell.size(),
            "trajectory csv: malformed number '" + cell + "'");
    return v;
}

} // namespace

Trajectory read_trajectory_csv(std::istream& is) {
    std::string line;
    require(static_cast<bool>(std::getline(is, line)), "trajectory csv: empty input");
    auto header = split_csv_line(line);
    require(header.size() >= 2 && header[0] == "t_years" && header[1] == "Y",
            "trajectory csv: header must start with t_years,Y");

    std::vector<double> t, y;
    std::optional<StateSeries> state;
    if (header.size() > 2) state = StateSeries{{header.begin() + 2, header.end()}, {}};

    while (std::getline(is, line)) {
        if (line.empty() || line == "\r") continue;
        auto cells = split_csv_line(line);
        require(cells.size() == header.size(), "trajectory csv: row width differs from header");
        t.push_back(parse_number(cells[0]));
        y.push_back(parse_number(cells[1]));
        if (state) {
            std::vector<double> row;
            for (std::size_t j = 2; j < cells.size(); ++j) row.push_back(parse_number(cells[j]));
            state->rows.push_back(std::move(row));
        }
    }
    return Trajectory(std::move(t), std::move(y), std::move(state));
}

} // namespace growthlab
