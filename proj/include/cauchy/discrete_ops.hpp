#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cauchy/grid.hpp"

namespace cauchy {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Samples of (ξ₁, ξ₂) = (u, ∂u/∂x) along one vertical grid line, stacked as
/// [ξ₁(y_0..y_{ny-1}), ξ₂(y_0..y_{ny-1})]. Index 0 is the bottom boundary.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::size_t ny) : ny_(ny), values_(2 * ny, 0.0) {}
    StateVector(std::span<const double> xi1, std::span<const double> xi2);

    std::size_t ny() const noexcept { return ny_; }
    std::size_t size() const noexcept { return values_.size(); }

    std::span<double> xi1() noexcept { return {values_.data(), ny_}; }
    std::span<const double> xi1() const noexcept { return {values_.data(), ny_}; }
    std::span<double> xi2() noexcept { return {values_.data() + ny_, ny_}; }
    std::span<const double> xi2() const noexcept { return {values_.data() + ny_, ny_}; }

    std::span<double> stacked() noexcept { return values_; }
    std::span<const double> stacked() const noexcept { return values_; }

    bool operator==(const StateVector&) const = default;

private:
    std::size_t ny_ = 0;
    std::vector<double> values_;
};

/// Observer gain: one injection weight per stacked state entry.
struct GainVector {
    std::vector<double> k;
};

/// Fully discrete marching operator for one x-step.
///
/// A_d = [[0, I], [-D_yy, 0]] with D_yy the centred second difference. The
/// top row of D_yy carries the mirror closure for the Neumann datum (the g
/// term goes to the forcing); the bottom row keeps only its on-grid entries
/// (-2, 1)/dy², the off-grid neighbour being supplied per step by
/// fictitious_point.
struct SystemMatrices {
    std::size_t ny = 0;
    double dx = 0.0;
    double dy = 0.0;
    RowMatrix a_d;
    RowMatrix f;                 // I + dx * a_d
    std::vector<double> c_row;   // selects ξ₁ at the top node

    std::size_t state_size() const noexcept { return 2 * ny; }
    std::size_t observed_index() const noexcept { return ny - 1; }
};

SystemMatrices assemble(const RectGrid& grid);

/// Off-grid value of ξ₁ below the bottom boundary that makes the centred
/// second difference there consistent with the ξ₂ update:
/// 2 ξ₁(1) - ξ₁(2) - (dy²/dx) (ξ₂(1)^{next} - ξ₂(1)^{current}).
double fictitious_point(double xi1_1, double xi1_2, double xi2_1_next, double xi2_1_cur,
                        double dy, double dx);

/// One observer step:
/// F ξ - K (C ξ - f_meas) + dx b(g_meas, ghost).
/// The forcing b adds -2 g/dy to the top ξ₂ row and -ghost/dy² to the bottom ξ₂ row.
StateVector step_line(const StateVector& state, const SystemMatrices& mats, const GainVector& gain,
                      double f_meas, double g_meas, double ghost);

/// C ξ.
double observe(const StateVector& state, const SystemMatrices& mats);

}  // namespace cauchy
