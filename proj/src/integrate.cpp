#include "growthlab/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "growthlab/error.hpp"

namespace growthlab {

namespace {

// Dormand-Prince 5(4) tableau with Hairer's fourth-order continuous extension.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;

constexpr std::size_t kMaxSteps = 5'000'000;

double max_norm(std::span<const double> y) {
    double m = 0.0;
    for (double v : y) m = std::max(m, std::abs(v));
    return m;
}

bool all_finite(std::span<const double> y) {
    return std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); });
}

// Coefficients of the dense-output polynomial for one accepted step.
struct DenseStep {
    double t = 0.0, h = 0.0;
    std::vector<double> r1, r2, r3, r4, r5;

    void eval(double t_query, std::span<double> out) const {
        const double theta = (t_query - t) / h;
        const double theta1 = 1.0 - theta;
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = r1[i] + theta * (r2[i] + theta1 * (r3[i] + theta * (r4[i] + theta1 * r5[i])));
    }
};

class Stepper {
public:
    Stepper(const OdeProblem& problem, double rel_tol)
        : f_(problem.vector_field), n_(problem.dimension), rtol_(rel_tol),
          k1_(n_), k2_(n_), k3_(n_), k4_(n_), k5_(n_), k6_(n_), k7_(n_), tmp_(n_), y_new_(n_),
          err_(n_) {}

    double initial_step(double t, std::span<const double> y, double span) {
        f_(t, y, k1_);
        double d0 = 0.0, d1v = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            const double sc = scale(y[i], y[i]);
            d0 += sq(y[i] / sc);
            d1v += sq(k1_[i] / sc);
        }
        d0 = std::sqrt(d0 / n_);
        d1v = std::sqrt(d1v / n_);
        double h0 = (d0 < 1e-5 || d1v < 1e-5) ? 1e-6 : 0.01 * d0 / d1v;
        h0 = std::min(h0, span);
        for (std::size_t i = 0; i < n_; ++i) tmp_[i] = y[i] + h0 * k1_[i];
        f_(t + h0, tmp_, k2_);
        double d2 = 0.0;
        for (std::size_t i = 0; i < n_; ++i) d2 += sq((k2_[i] - k1_[i]) / scale(y[i], y[i]));
        d2 = std::sqrt(d2 / n_) / h0;
        if (!std::isfinite(d2)) return h0 * 1e-3;
        const double dm = std::max(d1v, d2);
        const double h1 = dm <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dm, 0.2);
        have_k1_ = true;
        return std::min({100.0 * h0, h1, span});
    }

    // Attempts one step; returns the scaled error norm (inf if the step
    // produced non-finite values).
    double attempt(double t, std::span<const double> y, double h) {
        if (!have_k1_) {
            f_(t, y, k1_);
            have_k1_ = true;
        }
        for (std::size_t i = 0; i < n_; ++i) tmp_[i] = y[i] + h * a21 * k1_[i];
        f_(t + c2 * h, tmp_, k2_);
        for (std::size_t i = 0; i < n_; ++i) tmp_[i] = y[i] + h * (a31 * k1_[i] + a32 * k2_[i]);
        f_(t + c3 * h, tmp_, k3_);
        for (std::size_t i = 0; i < n_; ++i)
            tmp_[i] = y[i] + h * (a41 * k1_[i] + a42 * k2_[i] + a43 * k3_[i]);
        f_(t + c4 * h, tmp_, k4_);
        for (std::size_t i = 0; i < n_; ++i)
            tmp_[i] = y[i] + h * (a51 * k1_[i] + a52 * k2_[i] + a53 * k3_[i] + a54 * k4_[i]);
        f_(t + c5 * h, tmp_, k5_);
        for (std::size_t i = 0; i < n_; ++i)
            tmp_[i] = y[i] + h * (a61 * k1_[i] + a62 * k2_[i] + a63 * k3_[i] + a64 * k4_[i] +
                                  a65 * k5_[i]);
        f_(t + h, tmp_, k6_);
        for (std::size_t i = 0; i < n_; ++i)
            y_new_[i] = y[i] + h * (a71 * k1_[i] + a73 * k3_[i] + a74 * k4_[i] + a75 * k5_[i] +
                                    a76 * k6_[i]);
        f_(t + h, y_new_, k7_);

        if (!all_finite(y_new_) || !all_finite(k7_)) return std::numeric_limits<double>::infinity();
        double acc = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            err_[i] = h * (e1 * k1_[i] + e3 * k3_[i] + e4 * k4_[i] + e5 * k5_[i] + e6 * k6_[i] +
                           e7 * k7_[i]);
            acc += sq(err_[i] / scale(y[i], y_new_[i]));
        }
        const double norm = std::sqrt(acc / n_);
        return std::isfinite(norm) ? norm : std::numeric_limits<double>::infinity();
    }

    void fill_dense(double t, double h, std::span<const double> y, DenseStep& dense) const {
        dense.t = t;
        dense.h = h;
        dense.r1.assign(y.begin(), y.end());
        dense.r2.resize(n_);
        dense.r3.resize(n_);
        dense.r4.resize(n_);
        dense.r5.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const double dy = y_new_[i] - y[i];
            const double bspl = h * k1_[i] - dy;
            dense.r2[i] = dy;
            dense.r3[i] = bspl;
            dense.r4[i] = dy - h * k7_[i] - bspl;
            dense.r5[i] = h * (d1 * k1_[i] + d3 * k3_[i] + d4 * k4_[i] + d5 * k5_[i] +
                               d6 * k6_[i] + d7 * k7_[i]);
        }
    }

    // First-same-as-last: the final stage becomes the next step's first.
    void accept() { std::swap(k1_, k7_); }

    const std::vector<double>& y_new() const { return y_new_; }

private:
    static double sq(double v) { return v * v; }
    double scale(double a, double b) const {
        return rtol_ * std::max(std::abs(a), std::abs(b)) + std::numeric_limits<double>::min();
    }

    const VectorField& f_;
    std::size_t n_;
    double rtol_;
    std::vector<double> k1_, k2_, k3_, k4_, k5_, k6_, k7_, tmp_, y_new_, err_;
    bool have_k1_ = false;
};

struct Recorder {
    const OdeProblem& problem;
    std::vector<double> times, output;
    std::vector<std::vector<double>> rows;

    void record(double t, std::span<const double> y) {
        times.push_back(t);
        output.push_back(problem.output ? problem.output(t, y) : y[0]);
        rows.emplace_back(y.begin(), y.end());
    }

    Trajectory finish() {
        StateSeries state;
        state.names = problem.state_names;
        if (state.names.empty())
            for (std::size_t i = 0; i < problem.dimension; ++i)
                state.names.push_back("y" + std::to_string(i));
        state.rows = std::move(rows);
        return Trajectory(std::move(times), std::move(output), std::move(state));
    }
};

void validate(const OdeProblem& problem, std::span<const double> y0, double rel_tol) {
    require(problem.dimension > 0, "integrate: dimension must be positive");
    require(static_cast<bool>(problem.vector_field), "integrate: missing vector field");
    require(y0.size() == problem.dimension, "integrate: initial state has wrong dimension");
    require(all_finite(y0), "integrate: initial state must be finite");
    require(rel_tol > 1e-12 && rel_tol < 1e-2, "integrate: rel_tol must lie in (1e-12, 1e-2)");
    require(problem.min_step > 0.0, "integrate: min_step must be positive");
    if (problem.state_names.size() != 0)
        require(problem.state_names.size() == problem.dimension,
                "integrate: state_names size differs from dimension");
}

} // namespace

IntegrationResult integrate_adaptive(const OdeProblem& problem, std::span<const double> grid,
                                     std::span<const double> y0, double rel_tol) {
    validate(problem, y0, rel_tol);
    require(grid.size() >= 2, "integrate: grid needs at least two points");
    for (std::size_t i = 1; i < grid.size(); ++i)
        require(grid[i] > grid[i - 1], "integrate: grid must be strictly increasing");

    const double t0 = grid.front();
    const double t1 = grid.back();
    const double cap = problem.blowup_cap.value_or(1e12 * std::max(max_norm(y0), 1e-300));
    require(cap > max_norm(y0), "integrate: blowup cap must exceed the initial state norm");

    Recorder rec{problem, {}, {}, {}};
    IntegrationResult result;
    std::vector<double> y(y0.begin(), y0.end());
    std::vector<double> probe(problem.dimension);
    DenseStep dense;
    Stepper stepper(problem, rel_tol);

    rec.record(t0, y);
    std::size_t next = 1;
    double t = t0;
    double h = stepper.initial_step(t, y, t1 - t0);
    bool last_rejected = false;

    while (true) {
        if (result.accepted_steps + result.rejected_steps > kMaxSteps || h < problem.min_step ||
            t + h == t) {
            result.reason = Termination::step_underflow;
            result.blowup_time = t;
            if (rec.times.back() < t) rec.record(t, y);
            break;
        }
        const bool final_step = t + h >= t1;
        const double step = final_step ? t1 - t : h;
        const double err = stepper.attempt(t, y, step);

        if (!(err <= 1.0)) {
            ++result.rejected_steps;
            const double shrink = std::isfinite(err) ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.2;
            h = step * shrink;
            last_rejected = true;
            continue;
        }

        ++result.accepted_steps;
        const double t_new = final_step ? t1 : t + step;
        stepper.fill_dense(t, step, y, dense);
        const auto& y_new = stepper.y_new();

        double stop_time = t_new;
        bool capped = max_norm(y_new) > cap;
        if (capped) {
            double lo = t, hi = t_new;
            for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                dense.eval(mid, probe);
                (max_norm(probe) > cap ? hi : lo) = mid;
            }
            stop_time = hi;
        }

        while (next < grid.size() && grid[next] <= stop_time) {
            if (grid[next] == t_new) {
                rec.record(t_new, y_new);
            } else {
                dense.eval(grid[next], probe);
                rec.record(grid[next], probe);
            }
            ++next;
        }

        if (capped) {
            result.reason = Termination::cap_reached;
            result.blowup_time = stop_time;
            if (rec.times.back() < stop_time) {
                dense.eval(stop_time, probe);
                rec.record(stop_time, probe);
            }
            break;
        }

        y.assign(y_new.begin(), y_new.end());
        t = t_new;
        stepper.accept();
        if (final_step) {
            result.reason = Termination::horizon_reached;
            break;
        }
        double grow = err == 0.0 ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2)));
        if (last_rejected) grow = std::min(grow, 1.0);
        h = step * grow;
        last_rejected = false;
    }

    result.trajectory = rec.finish();
    return result;
}

IntegrationResult integrate_adaptive(const OdeProblem& problem, double t0, double t1,
                                     std::span<const double> y0, double rel_tol,
                                     std::size_t samples) {
    require(t1 > t0, "integrate: t1 must exceed t0");
    require(samples >= 2, "integrate: need at least two samples");
    std::vector<double> grid(samples);
    const double span = t1 - t0;
    for (std::size_t i = 0; i < samples; ++i)
        grid[i] = t0 + span * static_cast<double>(i) / static_cast<double>(samples - 1);
    grid.back() = t1;
    return integrate_adaptive(problem, grid, y0, rel_tol);
}

IntegrationResult integrate_to_blowup(const OdeProblem& problem, std::span<const double> y0,
                                      double horizon, double rel_tol, std::size_t samples) {
    require(horizon > 0.0, "integrate: horizon must be positive");
    IntegrationResult first = integrate_adaptive(problem, 0.0, horizon, y0, rel_tol, samples);
    if (first.reason == Termination::horizon_reached || first.trajectory.size() >= samples / 2)
        return first;

    // Resample densely up to the stopping time. The refined grid ends just
    // short of it; the terminal state is appended by the integrator.
    const double stop = *first.blowup_time;
    if (!(stop > 0.0)) return first;
    std::vector<double> grid(samples - 1);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = stop * static_cast<double>(i) / static_cast<double>(grid.size());
    grid.push_back(horizon);
    IntegrationResult refined = integrate_adaptive(problem, grid, y0, rel_tol);
    return refined.reason == first.reason ? refined : first;
}

std::string_view to_string(Termination reason) {
    switch (reason) {
    case Termination::horizon_reached: return "horizon reached";
    case Termination::cap_reached: return "cap reached";
    case Termination::step_underflow: return "step underflow";
    }
    return "unknown";
}

} // namespace growthlab
