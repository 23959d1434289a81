#include "cauchy/observer.hpp"

#include <cmath>
#include <sstream>

#include "cauchy/errors.hpp"
#include "cauchy/gain.hpp"
#include "cauchy/kernels.hpp"

namespace cauchy {
namespace {

void check_finite_bounded(const StateVector& s, double guard, std::size_t sweep, std::size_t node) {
    for (double v : s.stacked()) {
        if (!std::isfinite(v) || std::abs(v) > guard) {
            std::ostringstream os;
            os << "divergence guard tripped: |state| exceeds " << guard << " at sweep " << sweep << ", x node "
               << node;
            throw NonFiniteState(os.str(), static_cast<int>(sweep), node);
        }
    }
}

}  // namespace

ObserverProblem::ObserverProblem(RectGrid grid, CauchyData cauchy, GainVector gain)
    : grid_(std::move(grid)), cauchy_(std::move(cauchy)), mats_(assemble(grid_)), gain_(std::move(gain)) {
    if (cauchy_.f.size() != grid_.nx() || cauchy_.g.size() != grid_.nx()) {
        throw DimensionMismatch("Cauchy data must have one sample per x node");
    }
    if (gain_.k.size() != mats_.state_size()) {
        throw DimensionMismatch("gain length " + std::to_string(gain_.k.size()) + " does not match state size " +
                                std::to_string(mats_.state_size()));
    }
    for (std::size_t j = 0; j < grid_.nx(); ++j) {
        if (!std::isfinite(cauchy_.f[j]) || !std::isfinite(cauchy_.g[j])) {
            throw PreconditionError("Cauchy data contains non-finite samples");
        }
    }
}

double l2_norm(std::span<const double> v, double dx) {
    return std::sqrt(std::max(0.0, kernels::trapezoid_dot(v, v, dx)));
}

double top_residual(const Field& field, std::span<const double> f, double dx) {
    if (field.size() != f.size()) {
        throw DimensionMismatch("field and data lengths differ");
    }
    std::vector<double> top(field.size());
    for (std::size_t j = 0; j < field.size(); ++j) {
        top[j] = field[j].xi1().back();
    }
    return std::sqrt(std::max(0.0, kernels::trapezoid_sq_diff(top, f, dx)));
}

std::vector<double> bottom_row(const Field& field) {
    std::vector<double> out(field.size());
    for (std::size_t j = 0; j < field.size(); ++j) {
        out[j] = field[j].xi1().front();
    }
    return out;
}

BottomError error_bottom(const Field& field, std::span<const double> reference, double dx) {
    if (field.size() != reference.size()) {
        throw DimensionMismatch("field and reference lengths differ");
    }
    const auto est = bottom_row(field);
    const double err = std::sqrt(std::max(0.0, kernels::trapezoid_sq_diff(est, reference, dx)));
    const double norm = l2_norm(reference, dx);
    if (norm == 0.0) {
        return {err, true};
    }
    return {err / norm, false};
}

double closed_loop_radius(const SystemMatrices& mats, const GainVector& gain) {
    return spectral_radius(closed_loop(to_dense(mats.f), mats.c_row, gain));
}

ObserverRun::ObserverRun(const ObserverProblem& problem, ObserverConfig config, const ReferenceSolution* reference)
    : problem_(problem), config_(std::move(config)) {
    const auto& grid = problem_.grid();
    if (config_.max_sweeps < 1) {
        throw PreconditionError("max_sweeps must be at least 1");
    }
    if (config_.tol && !(*config_.tol >= 0.0)) {
        throw PreconditionError("tol must be non-negative");
    }
    if (!(config_.divergence_guard > 0.0)) {
        throw PreconditionError("divergence guard must be positive");
    }
    tol_ = config_.tol ? *config_.tol : 1e-6 * l2_norm(problem_.cauchy().f, grid.dx());

    gain_radius_ = closed_loop_radius(problem_.mats(), problem_.gain());
    if (!(gain_radius_ < 1.0) && !config_.allow_uncertified_gain) {
        std::ostringstream os;
        os << "gain not certified: spectral radius of F - K C is " << gain_radius_;
        throw PreconditionError(os.str());
    }

    if (config_.initial_guess) {
        field_ = std::move(*config_.initial_guess);
        config_.initial_guess.reset();
        if (field_.size() != grid.nx()) {
            throw DimensionMismatch("initial guess must hold one line per x node");
        }
        for (const auto& s : field_) {
            if (s.ny() != grid.ny()) {
                throw DimensionMismatch("initial guess line has wrong height");
            }
        }
    } else {
        field_.assign(grid.nx(), StateVector(grid.ny()));
    }
    next_ = field_;

    if (reference != nullptr) {
        truth_bottom_ = bottom_trace(*reference, grid);
    }
}

bool ObserverRun::sweep() {
    const auto& grid = problem_.grid();
    const auto& mats = problem_.mats();
    const auto& data = problem_.cauchy();
    const std::size_t nx = grid.nx();
    const std::size_t sweep_index = sweeps_done_ + 1;

    next_[0] = field_[nx - 1];
    check_finite_bounded(next_[0], config_.divergence_guard, sweep_index, 0);
    for (std::size_t n = 0; n + 1 < nx; ++n) {
        const auto& cur = next_[n];
        const double ghost = fictitious_point(cur.xi1()[0], cur.xi1()[1], field_[n + 1].xi2()[0], cur.xi2()[0],
                                              grid.dy(), grid.dx());
        next_[n + 1] = step_line(cur, mats, problem_.gain(), data.f[n], data.g[n], ghost);
        check_finite_bounded(next_[n + 1], config_.divergence_guard, sweep_index, n + 1);
    }
    std::swap(field_, next_);
    sweeps_done_ = sweep_index;

    const double residual = top_residual(field_, data.f, grid.dx());
    report_.top_residual.push_back(residual);
    if (truth_bottom_) {
        const auto e = error_bottom(field_, *truth_bottom_, grid.dx());
        report_.bottom_error.push_back(e.value);
        report_.bottom_error_absolute = e.absolute;
    }
    if (!report_.converged_at && residual <= tol_) {
        report_.converged_at = sweep_index;
    }
    return converged();
}

ObserverResult run(const ObserverProblem& problem, const ObserverConfig& config, const ReferenceSolution* reference) {
    ObserverRun r(problem, config, reference);
    while (!r.converged() && !r.exhausted()) {
        r.sweep();
    }
    return {r.field(), r.report()};
}

}  // namespace cauchy
