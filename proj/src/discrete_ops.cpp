#include "cauchy/discrete_ops.hpp"

#include <string>

#include "cauchy/errors.hpp"
#include "cauchy/kernels.hpp"

namespace cauchy {

StateVector::StateVector(std::span<const double> xi1, std::span<const double> xi2)
    : ny_(xi1.size()), values_(2 * xi1.size()) {
    if (xi1.size() != xi2.size()) {
        throw DimensionMismatch("state components differ in length");
    }
    std::copy(xi1.begin(), xi1.end(), values_.begin());
    std::copy(xi2.begin(), xi2.end(), values_.begin() + static_cast<std::ptrdiff_t>(ny_));
}

SystemMatrices assemble(const RectGrid& grid) {
    const std::size_t ny = grid.ny();
    const auto n = static_cast<Eigen::Index>(ny);
    const double inv_dy2 = 1.0 / (grid.dy() * grid.dy());

    RowMatrix dyy = RowMatrix::Zero(n, n);
    dyy(0, 0) = -2.0 * inv_dy2;
    dyy(0, 1) = inv_dy2;
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
        dyy(i, i - 1) = inv_dy2;
        dyy(i, i) = -2.0 * inv_dy2;
        dyy(i, i + 1) = inv_dy2;
    }
    dyy(n - 1, n - 2) = 2.0 * inv_dy2;
    dyy(n - 1, n - 1) = -2.0 * inv_dy2;

    SystemMatrices m;
    m.ny = ny;
    m.dx = grid.dx();
    m.dy = grid.dy();
    m.a_d = RowMatrix::Zero(2 * n, 2 * n);
    m.a_d.topRightCorner(n, n).setIdentity();
    m.a_d.bottomLeftCorner(n, n) = -dyy;
    m.f = RowMatrix::Identity(2 * n, 2 * n) + m.dx * m.a_d;
    m.c_row.assign(2 * ny, 0.0);
    m.c_row[m.observed_index()] = 1.0;
    return m;
}

double fictitious_point(double xi1_1, double xi1_2, double xi2_1_next, double xi2_1_cur,
                        double dy, double dx) {
    if (!(dx > 0.0) || !(dy > 0.0)) {
        throw PreconditionError("fictitious point needs positive steps");
    }
    return 2.0 * xi1_1 - xi1_2 - (dy * dy / dx) * (xi2_1_next - xi2_1_cur);
}

double observe(const StateVector& state, const SystemMatrices& mats) {
    if (state.size() != mats.state_size()) {
        throw DimensionMismatch("state size " + std::to_string(state.size()) +
                                " does not match system size " + std::to_string(mats.state_size()));
    }
    return state.xi1()[mats.observed_index()];
}

StateVector step_line(const StateVector& state, const SystemMatrices& mats, const GainVector& gain,
                      double f_meas, double g_meas, double ghost) {
    const std::size_t n = mats.state_size();
    if (state.size() != n || gain.k.size() != n) {
        throw DimensionMismatch("step_line: state " + std::to_string(state.size()) + ", gain " +
                                std::to_string(gain.k.size()) + ", system " + std::to_string(n));
    }
    StateVector next(mats.ny);
    kernels::gemv({mats.f.data(), static_cast<std::size_t>(mats.f.size())}, n, n, state.stacked(),
                  next.stacked());
    const double innovation = state.xi1()[mats.observed_index()] - f_meas;
    kernels::axpy(-innovation, gain.k, next.stacked());

    auto xi2 = next.xi2();
    xi2[mats.ny - 1] += mats.dx * (-2.0 * g_meas / mats.dy);
    xi2[0] += mats.dx * (-ghost / (mats.dy * mats.dy));
    return next;
}

}  // namespace cauchy
