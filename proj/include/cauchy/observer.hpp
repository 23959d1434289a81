#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cauchy/discrete_ops.hpp"
#include "cauchy/grid.hpp"
#include "cauchy/reference.hpp"

namespace cauchy {

/// One StateVector per x node.
using Field = std::vector<StateVector>;

class ObserverProblem {
public:
    /// Throws DimensionMismatch when the data or gain lengths disagree with
    /// the grid.
    ObserverProblem(RectGrid grid, CauchyData cauchy, GainVector gain);

    const RectGrid& grid() const noexcept { return grid_; }
    const CauchyData& cauchy() const noexcept { return cauchy_; }
    const SystemMatrices& mats() const noexcept { return mats_; }
    const GainVector& gain() const noexcept { return gain_; }

private:
    RectGrid grid_;
    CauchyData cauchy_;
    SystemMatrices mats_;
    GainVector gain_;
};

struct ObserverConfig {
    std::size_t max_sweeps = 500;
    std::optional<double> tol;              // defaults to 1e-6 ‖f‖
    std::optional<Field> initial_guess;     // defaults to zero
    bool allow_uncertified_gain = false;
    double divergence_guard = 1e12;
};

struct SweepReport {
    std::vector<double> top_residual;
    std::vector<double> bottom_error;
    std::optional<std::size_t> converged_at;  // 1-based sweep index
    bool bottom_error_absolute = false;
};

struct BottomError {
    double value = 0.0;
    bool absolute = false;
};

/// Trapezoid L² norm over x.
double l2_norm(std::span<const double> v, double dx);

/// ‖ξ̂₁ on the top row − f‖ in trapezoid L² over x.
double top_residual(const Field& field, std::span<const double> f, double dx);

/// ‖ξ̂₁ on the bottom row − reference‖ / ‖reference‖; the absolute error is
/// returned and flagged when the reference norm is zero.
BottomError error_bottom(const Field& field, std::span<const double> reference, double dx);

/// ξ₁ along the bottom row of every line.
std::vector<double> bottom_row(const Field& field);

/// Spectral radius of F - K C.
double closed_loop_radius(const SystemMatrices& mats, const GainVector& gain);

/// Stepwise driver: each call to sweep() marches once across the rectangle,
/// starting from the last line of the previous sweep.
class ObserverRun {
public:
    /// Throws PreconditionError when the gain is not certified and the
    /// config does not allow it, or when config values are out of range.
    ObserverRun(const ObserverProblem& problem, ObserverConfig config,
                const ReferenceSolution* reference = nullptr);

    /// Runs one sweep. Returns true once the top residual has reached tol.
    /// Throws NonFiniteState when the divergence guard trips.
    bool sweep();

    bool converged() const noexcept { return report_.converged_at.has_value(); }
    bool exhausted() const noexcept { return sweeps_done_ >= config_.max_sweeps; }
    std::size_t sweeps_done() const noexcept { return sweeps_done_; }
    double tol() const noexcept { return tol_; }
    double gain_radius() const noexcept { return gain_radius_; }

    const Field& field() const noexcept { return field_; }
    const SweepReport& report() const noexcept { return report_; }

private:
    const ObserverProblem& problem_;
    ObserverConfig config_;
    std::optional<std::vector<double>> truth_bottom_;
    double tol_ = 0.0;
    double gain_radius_ = 0.0;
    std::size_t sweeps_done_ = 0;
    Field field_;
    Field next_;
    SweepReport report_;
};

struct ObserverResult {
    Field field;
    SweepReport report;
};

/// Sweeps until convergence or max_sweeps.
ObserverResult run(const ObserverProblem& problem, const ObserverConfig& config,
                   const ReferenceSolution* reference = nullptr);

}  // namespace cauchy
