#include "cauchy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "cauchy/errors.hpp"
#include "cauchy/kernels.hpp"

namespace cauchy::spectral {
namespace {

constexpr std::size_t kMinQuadrature = 5;

double step_for(std::size_t quadrature) {
    return kIntervalLength / static_cast<double>(quadrature - 1);
}

void require_quadrature(std::size_t quadrature) {
    if (quadrature < kMinQuadrature) {
        throw PreconditionError("quadrature needs at least 5 nodes, got " + std::to_string(quadrature));
    }
}

void require_same_sampling(const FunctionPair& p, const FunctionPair& q) {
    if (p.p1.size() != p.p2.size() || q.p1.size() != q.p2.size()) {
        throw DimensionMismatch("function pair components sampled on different node sets");
    }
    if (p.nodes() != q.nodes()) {
        throw DimensionMismatch("function pairs sampled on different node sets: " +
                                std::to_string(p.nodes()) + " vs " + std::to_string(q.nodes()));
    }
}

// Fourth-order first derivative on uniform nodes.
std::vector<double> derivative(std::span<const double> f, double h) {
    const std::size_t n = f.size();
    std::vector<double> d(n);
    const double s = 1.0 / (12.0 * h);
    d[0] = s * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
    d[1] = s * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d[i] = s * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
    }
    d[n - 2] = s * (-f[n - 5] + 6.0 * f[n - 4] - 18.0 * f[n - 3] + 10.0 * f[n - 2] + 3.0 * f[n - 1]);
    d[n - 1] = s * (3.0 * f[n - 5] - 16.0 * f[n - 4] + 36.0 * f[n - 3] - 48.0 * f[n - 2] + 25.0 * f[n - 1]);
    return d;
}

FunctionPair sample(const EigenMode& mode, std::size_t quadrature, double scale) {
    require_quadrature(quadrature);
    const double h = step_for(quadrature);
    FunctionPair out{std::vector<double>(quadrature), std::vector<double>(quadrature)};
    for (std::size_t i = 0; i < quadrature; ++i) {
        const double y = (i + 1 == quadrature) ? kIntervalLength : static_cast<double>(i) * h;
        const double phi = mode.c1 * std::cos(mode.lambda * y);
        out.p1[i] = scale * mode.alpha * phi;
        out.p2[i] = scale * mode.beta * phi;
    }
    return out;
}

}  // namespace

EigenMode make_mode(int n, Normalization norm) {
    const double lambda = 6.0 - 8.0 * static_cast<double>(n);
    EigenMode m{};
    m.n = n;
    m.lambda = lambda;
    m.alpha = 1.0;
    m.beta = lambda;
    m.c1 = -std::sqrt(8.0 / std::numbers::pi);
    if (norm == Normalization::classical) {
        m.rho = 1.0 / (std::numbers::sqrt2 * m.beta);
    } else {
        m.rho = std::copysign(1.0 / std::sqrt(2.0 * m.beta * m.beta + 1.0), m.beta);
    }
    return m;
}

ModeValue eval_mode(const EigenMode& mode, double y) {
    const double phi = mode.c1 * std::cos(mode.lambda * y);
    return {mode.rho * mode.alpha * phi, mode.rho * mode.beta * phi};
}

std::vector<double> quadrature_nodes(std::size_t quadrature) {
    require_quadrature(quadrature);
    const double h = step_for(quadrature);
    std::vector<double> y(quadrature);
    for (std::size_t i = 0; i < quadrature; ++i) {
        y[i] = static_cast<double>(i) * h;
    }
    y.back() = kIntervalLength;
    return y;
}

FunctionPair zero_pair(std::size_t quadrature) {
    return {std::vector<double>(quadrature, 0.0), std::vector<double>(quadrature, 0.0)};
}

FunctionPair sample_mode(const EigenMode& mode, std::size_t quadrature) {
    return sample(mode, quadrature, mode.rho);
}

FunctionPair sample_eigenvector(const EigenMode& mode, std::size_t quadrature) {
    return sample(mode, quadrature, 1.0);
}

double inner_product(const FunctionPair& p, const FunctionPair& q) {
    require_same_sampling(p, q);
    require_quadrature(p.nodes());
    const double h = step_for(p.nodes());
    const auto dp = derivative(p.p1, h);
    const auto dq = derivative(q.p1, h);
    return kernels::trapezoid_dot(dq, dp, h) + kernels::trapezoid_dot(q.p1, p.p1, h) +
           kernels::trapezoid_dot(q.p2, p.p2, h);
}

ModeSet::ModeSet(std::vector<int> indices, std::size_t quadrature, Normalization norm)
    : indices_(std::move(indices)), quadrature_(quadrature), norm_(norm) {
    require_quadrature(quadrature);
    if (indices_.empty()) {
        throw PreconditionError("mode set must not be empty");
    }
    if (std::set<int>(indices_.begin(), indices_.end()).size() != indices_.size()) {
        throw PreconditionError("mode set contains duplicate indices");
    }
    samples_.reserve(indices_.size());
    for (int n : indices_) {
        samples_.push_back(sample_mode(make_mode(n, norm_), quadrature_));
    }
    const auto k = static_cast<Eigen::Index>(indices_.size());
    gram_.resize(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i; j < k; ++j) {
            gram_(i, j) = inner_product(samples_[i], samples_[j]);
            gram_(j, i) = gram_(i, j);
        }
    }
    gram_factor_.compute(gram_);
}

ModeSet ModeSet::standard() { return range(-4, 8, 2001); }

ModeSet ModeSet::range(int first, int last, std::size_t quadrature, Normalization norm) {
    if (last < first) {
        throw PreconditionError("empty mode range");
    }
    std::vector<int> idx;
    for (int n = first; n <= last; ++n) {
        idx.push_back(n);
    }
    return ModeSet(std::move(idx), quadrature, norm);
}

Eigen::VectorXd ModeSet::project(const FunctionPair& f) const {
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(size()));
    for (std::size_t k = 0; k < size(); ++k) {
        rhs(static_cast<Eigen::Index>(k)) = inner_product(f, samples_[k]);
    }
    return gram_factor_.solve(rhs);
}

FunctionPair semigroup_apply(const FunctionPair& f, double x, const ModeSet& modes) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw PreconditionError("semigroup parameter must be a finite x >= 0");
    }
    const Eigen::VectorXd coeff = modes.project(f);
    FunctionPair out = zero_pair(f.nodes());
    for (std::size_t k = 0; k < modes.size(); ++k) {
        const double w = std::exp(modes.mode(k).lambda * x) * coeff(static_cast<Eigen::Index>(k));
        const FunctionPair& phi = modes.sampled(k);
        kernels::axpy(w, phi.p1, out.p1);
        kernels::axpy(w, phi.p2, out.p2);
    }
    return out;
}

double observation(const FunctionPair& f) {
    if (f.p1.empty()) {
        throw DimensionMismatch("observation of an empty function pair");
    }
    return f.p1.front();
}

double observability_lower_bound(const ModeSet& modes, double x) {
    if (!(x >= 0.0)) {
        throw PreconditionError("observability bound needs x >= 0");
    }
    double total = 0.0;
    for (std::size_t k = 0; k < modes.size(); ++k) {
        const EigenMode m = modes.mode(k);
        const FunctionPair v = sample_eigenvector(m, modes.quadrature());
        const double term = std::exp(m.lambda * x) * m.rho * m.rho * inner_product(v, v);
        total += term * term;
    }
    return total;
}

double eigen_residual(const EigenMode& mode, std::size_t quadrature) {
    const FunctionPair phi = sample_mode(mode, quadrature);
    const double h = step_for(quadrature);
    const double inv_h2 = 1.0 / (h * h);
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < quadrature; ++i) {
        // First row: (A Φ)_1 = Φ_2.
        const double r1 = phi.p2[i] - mode.lambda * phi.p1[i];
        const double d2 = (phi.p1[i - 1] - 2.0 * phi.p1[i] + phi.p1[i + 1]) * inv_h2;
        const double r2 = -d2 - mode.lambda * phi.p2[i];
        worst = std::max({worst, std::abs(r1), std::abs(r2)});
    }
    return worst;
}

std::vector<double> gram_row_errors(const ModeSet& modes) {
    const Eigen::MatrixXd& g = modes.gram();
    std::vector<double> out(modes.size());
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        double worst = 0.0;
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
        }
        out[static_cast<std::size_t>(i)] = worst;
    }
    return out;
}

}  // namespace cauchy::spectral
