#include "cauchy/grid.hpp"

#include <cmath>
#include <string>

#include "cauchy/errors.hpp"

namespace cauchy {
namespace {

std::vector<double> progression(double length, std::size_t count, double step) {
    std::vector<double> nodes(count);
    for (std::size_t i = 0; i < count; ++i) {
        nodes[i] = static_cast<double>(i) * step;
    }
    nodes.back() = length;
    return nodes;
}

}  // namespace

RectGrid::RectGrid(double a, double b, std::size_t nx, std::size_t ny)
    : a_(a), b_(b), nx_(nx), ny_(ny) {
    if (!(std::isfinite(a) && a > 0.0) || !(std::isfinite(b) && b > 0.0)) {
        throw PreconditionError("grid extents must be positive and finite (a=" + std::to_string(a) +
                                ", b=" + std::to_string(b) + ")");
    }
    if (nx < 3) {
        throw PreconditionError("insufficient x nodes: nx=" + std::to_string(nx) +
                                " (centred differences need at least 3)");
    }
    if (ny < 3) {
        throw PreconditionError("insufficient y nodes: ny=" + std::to_string(ny) +
                                " (centred differences need at least 3)");
    }
    dx_ = a / static_cast<double>(nx - 1);
    dy_ = b / static_cast<double>(ny - 1);
    x_ = progression(a, nx, dx_);
    y_ = progression(b, ny, dy_);
}

RectGrid build_grid(double a, double b, std::size_t nx, std::size_t ny) {
    return RectGrid(a, b, nx, ny);
}

}  // namespace cauchy
