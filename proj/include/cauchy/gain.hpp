#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cauchy/discrete_ops.hpp"

namespace cauchy {

/// Requested closed-loop eigenvalues of F - K C.
class PoleSpec {
public:
    /// Throws PreconditionError unless every |p| < 1 and complex poles come in
    /// conjugate pairs.
    explicit PoleSpec(std::vector<std::complex<double>> poles);

    /// `count` distinct real poles evenly spaced on [lo, hi].
    static PoleSpec uniform(std::size_t count, double lo, double hi);

    std::span<const std::complex<double>> poles() const noexcept { return poles_; }
    std::size_t size() const noexcept { return poles_.size(); }
    double max_modulus() const noexcept;

    /// Real coefficients of the monic polynomial with these roots, highest
    /// degree first (leading 1 included).
    std::vector<double> monic_coefficients() const;

private:
    std::vector<std::complex<double>> poles_;
};

struct AckermannOptions {
    double condition_cap = 1e12;
    double relative_tolerance = 1e-6;
};

/// Rows C, C F, ..., C F^{n-1}.
Eigen::MatrixXd observability_matrix(const Eigen::MatrixXd& f, std::span<const double> c_row);

/// 2-norm condition number via singular values.
double condition_number(const Eigen::MatrixXd& m);

/// K = q(F) O⁻¹ e_last with q the monic polynomial of the requested poles.
///
/// Throws ObservabilityDeficient when cond(O) exceeds the cap and
/// PlacementFailed when the closed-loop spectrum misses the poles by more
/// than tolerance·(1 + max|pole|) under sorted pairing.
GainVector ackermann_gain(const Eigen::MatrixXd& f, std::span<const double> c_row,
                          const PoleSpec& spec, const AckermannOptions& opts = {});

/// Largest sorted-pairing distance between two eigenvalue multisets.
double eigenvalue_mismatch(std::vector<std::complex<double>> computed,
                           std::vector<std::complex<double>> wanted);

struct TunedGain {
    GainVector gain;
    double kappa = 0.0;
    double spectral_radius = 0.0;
    bool stable = false;
};

/// Scalar injection at the observed node, K = κ e_obs, with κ minimising the
/// spectral radius of F - K C over `search_grid` ∪ {0}.
TunedGain tuned_injection_gain(const Eigen::MatrixXd& f, std::span<const double> c_row,
                               std::span<const double> search_grid);

/// Default κ candidates: 0 together with a logarithmic sweep over [1e-3, 1e3].
std::vector<double> default_kappa_grid();

/// max |eig(M)| by dense eigensolve. Throws EigensolveFailed.
double spectral_radius(const Eigen::MatrixXd& m);

/// Dominant |eigenvalue| by normalised power iteration; suited to matrices
/// whose dominant eigenvalue is real and simple.
double spectral_radius_power(const Eigen::MatrixXd& m, double tol = 1e-10,
                             std::size_t max_iter = 100000);

std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& m);

/// F - K C.
Eigen::MatrixXd closed_loop(const Eigen::MatrixXd& f, std::span<const double> c_row,
                            const GainVector& gain);

Eigen::MatrixXd to_dense(const RowMatrix& m);

}  // namespace cauchy
