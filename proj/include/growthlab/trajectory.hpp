#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace growthlab {

/// Named per-sample model state (e.g. A, K, L) carried alongside output.
struct StateSeries {
    std::vector<std::string> names;
    std::vector<std::vector<double>> rows; // rows[i] belongs to times[i]
};

/// Time-indexed output series. Times are in years and strictly increasing,
/// output is strictly positive.
class Trajectory {
public:
    Trajectory() = default;
    Trajectory(std::vector<double> times, std::vector<double> output,
               std::optional<StateSeries> state = std::nullopt);

    std::size_t size() const { return times_.size(); }
    bool empty() const { return times_.empty(); }

    std::span<const double> times() const { return times_; }
    std::span<const double> output() const { return output_; }
    const std::optional<StateSeries>& state() const { return state_; }

    /// Column of a named state variable; throws if absent.
    std::vector<double> state_column(const std::string& name) const;

    /// Trajectory restricted to samples with t in [t_begin, t_end].
    Trajectory slice(double t_begin, double t_end) const;

private:
    std::vector<double> times_;
    std::vector<double> output_;
    std::optional<StateSeries> state_;
};

// Trajectory CSV: header `t_years,Y[,state...]`, one row per sample.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
Trajectory read_trajectory_csv(std::istream& is);

/// Shortest round-trip decimal representation; used by every CSV writer.
std::string format_number(double value);

} // namespace growthlab
