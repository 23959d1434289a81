#include "cauchy/reference.hpp"

#include <cmath>
#include <numbers>

#include "cauchy/errors.hpp"

namespace cauchy {
namespace {

void require_same_domain(const ReferenceSolution& sol, const RectGrid& grid) {
    const auto close = [](double p, double q) { return std::abs(p - q) <= 1e-12 * std::max(1.0, std::abs(p)); };
    if (!close(sol.a(), grid.a()) || !close(sol.b(), grid.b())) {
        throw PreconditionError("reference solution and grid describe different rectangles");
    }
}

}  // namespace

ReferenceSolution::ReferenceSolution(ReferenceKind kind, std::vector<FourierTerm> terms, double a, double b)
    : kind_(kind), terms_(std::move(terms)), a_(a), b_(b) {
    if (terms_.empty()) {
        throw PreconditionError("reference solution needs at least one term");
    }
    if (!(a_ > 0.0) || !(b_ > 0.0) || !std::isfinite(a_) || !std::isfinite(b_)) {
        throw PreconditionError("reference extents must be positive and finite");
    }
    for (const auto& t : terms_) {
        if (t.k < 1) {
            throw PreconditionError("mode index must be a positive integer");
        }
        if (!std::isfinite(t.coeff)) {
            throw PreconditionError("term coefficient is not finite");
        }
    }
}

ReferenceSolution ReferenceSolution::example1(double a, double b) {
    return {ReferenceKind::neumann_sides, {{1, 1.0, Parity::cos}}, a, b};
}

ReferenceSolution ReferenceSolution::example2(double a, double b) {
    return {ReferenceKind::dirichlet_sides, {{1, 1.0, Parity::sin}}, a, b};
}

ReferenceSolution ReferenceSolution::combo(std::vector<FourierTerm> terms, double a, double b) {
    return {ReferenceKind::fourier_combo, std::move(terms), a, b};
}

double ReferenceSolution::eval(double x, double y) const {
    double u = 0.0;
    for (const auto& t : terms_) {
        const double w = 4.0 * std::numbers::pi * t.k / a_;
        const double vertical = std::cosh(w * (y - b_)) / std::cosh(w * b_);
        const double horizontal = t.parity == Parity::cos ? std::cos(w * x) : std::sin(w * x);
        u += t.coeff * vertical * horizontal;
    }
    return u;
}

double ReferenceSolution::dx(double x, double y) const {
    double ux = 0.0;
    for (const auto& t : terms_) {
        const double w = 4.0 * std::numbers::pi * t.k / a_;
        const double vertical = std::cosh(w * (y - b_)) / std::cosh(w * b_);
        const double horizontal = t.parity == Parity::cos ? -w * std::sin(w * x) : w * std::cos(w * x);
        ux += t.coeff * vertical * horizontal;
    }
    return ux;
}

double ReferenceSolution::dy(double x, double y) const {
    double uy = 0.0;
    for (const auto& t : terms_) {
        const double w = 4.0 * std::numbers::pi * t.k / a_;
        const double vertical = w * std::sinh(w * (y - b_)) / std::cosh(w * b_);
        const double horizontal = t.parity == Parity::cos ? std::cos(w * x) : std::sin(w * x);
        uy += t.coeff * vertical * horizontal;
    }
    return uy;
}

CauchyData make_cauchy_data(const ReferenceSolution& sol, const RectGrid& grid) {
    require_same_domain(sol, grid);
    CauchyData data{std::vector<double>(grid.nx()), std::vector<double>(grid.nx())};
    const auto xs = grid.x_nodes();
    for (std::size_t j = 0; j < xs.size(); ++j) {
        data.f[j] = sol.eval(xs[j], grid.b());
        data.g[j] = sol.dy(xs[j], grid.b());
    }
    return data;
}

std::vector<double> bottom_trace(const ReferenceSolution& sol, const RectGrid& grid) {
    require_same_domain(sol, grid);
    std::vector<double> out(grid.nx());
    const auto xs = grid.x_nodes();
    for (std::size_t j = 0; j < xs.size(); ++j) {
        out[j] = sol.eval(xs[j], 0.0);
    }
    return out;
}

StateVector sample_line(const ReferenceSolution& sol, const RectGrid& grid, std::size_t n) {
    require_same_domain(sol, grid);
    if (n >= grid.nx()) {
        throw PreconditionError("x node index out of range");
    }
    const double x = grid.x_nodes()[n];
    StateVector s(grid.ny());
    const auto ys = grid.y_nodes();
    for (std::size_t i = 0; i < ys.size(); ++i) {
        s.xi1()[i] = sol.eval(x, ys[i]);
        s.xi2()[i] = sol.dx(x, ys[i]);
    }
    return s;
}

}  // namespace cauchy
