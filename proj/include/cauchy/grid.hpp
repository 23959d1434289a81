#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cauchy {

/// Node-centred uniform discretisation of the rectangle (0,a)x(0,b).
///
/// Both boundaries carry nodes: y index 0 lies on the bottom boundary (the
/// unknown trace), y index ny-1 on the top boundary where the Cauchy data
/// lives. Coordinates are computed once at construction.
class RectGrid {
public:
    /// Throws PreconditionError for non-positive extents or fewer than 3
    /// nodes in either direction.
    RectGrid(double a, double b, std::size_t nx, std::size_t ny);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    std::size_t nx() const noexcept { return nx_; }
    std::size_t ny() const noexcept { return ny_; }
    double dx() const noexcept { return dx_; }
    double dy() const noexcept { return dy_; }

    std::span<const double> x_nodes() const noexcept { return x_; }
    std::span<const double> y_nodes() const noexcept { return y_; }

    std::size_t bottom_index() const noexcept { return 0; }
    std::size_t top_index() const noexcept { return ny_ - 1; }

private:
    double a_;
    double b_;
    std::size_t nx_;
    std::size_t ny_;
    double dx_;
    double dy_;
    std::vector<double> x_;
    std::vector<double> y_;
};

RectGrid build_grid(double a, double b, std::size_t nx, std::size_t ny);

}  // namespace cauchy
