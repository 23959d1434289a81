#pragma once

#include <cstddef>
#include <vector>

#include "cauchy/discrete_ops.hpp"
#include "cauchy/grid.hpp"

namespace cauchy {

enum class ReferenceKind { neumann_sides, dirichlet_sides, fourier_combo };
enum class Parity { cos, sin };

struct FourierTerm {
    int k = 1;
    double coeff = 1.0;
    Parity parity = Parity::cos;
};

/// Harmonic functions on (0,a)x(0,b) with vanishing normal derivative on the
/// top boundary:
///   u = Σ coeff cosh(4πk(y-b)/a) / cosh(4πkb/a) trig(4πk x/a).
class ReferenceSolution {
public:
    /// Throws PreconditionError for an empty term list, k < 1, non-finite
    /// coefficients or non-positive extents.
    ReferenceSolution(ReferenceKind kind, std::vector<FourierTerm> terms, double a, double b);

    /// Single cosine term, k = 1 (u_x = 0 on the sides).
    static ReferenceSolution example1(double a, double b);
    /// Single sine term, k = 1 (u = 0 on the sides).
    static ReferenceSolution example2(double a, double b);
    static ReferenceSolution combo(std::vector<FourierTerm> terms, double a, double b);

    ReferenceKind kind() const noexcept { return kind_; }
    const std::vector<FourierTerm>& terms() const noexcept { return terms_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

    double eval(double x, double y) const;
    double dx(double x, double y) const;
    double dy(double x, double y) const;

private:
    ReferenceKind kind_;
    std::vector<FourierTerm> terms_;
    double a_;
    double b_;
};

struct CauchyData {
    std::vector<double> f;
    std::vector<double> g;
};

/// Dirichlet and Neumann traces on the top boundary at every x node.
CauchyData make_cauchy_data(const ReferenceSolution& sol, const RectGrid& grid);

/// u(x_j, 0) at every x node.
std::vector<double> bottom_trace(const ReferenceSolution& sol, const RectGrid& grid);

/// (u, u_x) sampled on the vertical line through x node `n`.
StateVector sample_line(const ReferenceSolution& sol, const RectGrid& grid, std::size_t n);

}  // namespace cauchy
