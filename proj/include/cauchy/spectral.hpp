#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

/// Eigen-structure of the state operator [[0, 1], [-d²/ds², 0]] on the
/// analysis interval [0, π/4], realised on uniform quadrature nodes.
namespace cauchy::spectral {

inline constexpr double kIntervalLength = 0.78539816339744830962;  // π/4

/// How the eigenvectors are scaled.
///
/// `classical` uses ρ_n = 1/(√2 β_n); those vectors are orthogonal in the H¹×L²
/// product but carry norm² 1 + 1/(2λ_n²). `unit` rescales ρ_n so every
/// eigenvector has unit norm.
enum class Normalization { classical, unit };

struct EigenMode {
    int n;
    double lambda;  // 6 - 8n
    double alpha;   // 1
    double beta;    // lambda
    double rho;
    double c1;      // -sqrt(8/π)
};

EigenMode make_mode(int n, Normalization norm = Normalization::classical);

struct ModeValue {
    double first;
    double second;
};

/// Φ_n(y) = ρ_n (α_n φ_n(y), β_n φ_n(y)) with φ_n(y) = C₁ cos(λ_n y).
ModeValue eval_mode(const EigenMode& mode, double y);

/// A pair of functions sampled on the same uniform nodes of [0, π/4].
struct FunctionPair {
    std::vector<double> p1;
    std::vector<double> p2;

    std::size_t nodes() const noexcept { return p1.size(); }
};

FunctionPair zero_pair(std::size_t quadrature);
/// Samples of Φ_n at `quadrature` uniform nodes.
FunctionPair sample_mode(const EigenMode& mode, std::size_t quadrature);
/// Samples of the unnormalised eigenvector (α_n φ_n, β_n φ_n).
FunctionPair sample_eigenvector(const EigenMode& mode, std::size_t quadrature);

std::vector<double> quadrature_nodes(std::size_t quadrature);

/// H¹×L² product ∫ q₁' p₁' + ∫ q₁ p₁ + ∫ q₂ p₂ by composite trapezoid.
/// Derivatives use fourth-order differences (one-sided at the ends), so at
/// least 5 nodes are required. Throws DimensionMismatch on unequal sampling.
double inner_product(const FunctionPair& p, const FunctionPair& q);

/// Truncation index set together with the quadrature used to realise it.
class ModeSet {
public:
    /// Throws PreconditionError on duplicate indices or quadrature < 5.
    ModeSet(std::vector<int> indices, std::size_t quadrature,
            Normalization norm = Normalization::unit);

    /// n ∈ {-4, ..., 8} on 2001 nodes.
    static ModeSet standard();
    static ModeSet range(int first, int last, std::size_t quadrature,
                         Normalization norm = Normalization::unit);

    std::span<const int> indices() const noexcept { return indices_; }
    std::size_t quadrature() const noexcept { return quadrature_; }
    Normalization normalization() const noexcept { return norm_; }
    std::size_t size() const noexcept { return indices_.size(); }

    EigenMode mode(std::size_t k) const { return make_mode(indices_[k], norm_); }
    const FunctionPair& sampled(std::size_t k) const { return samples_[k]; }

    /// G_nm = ⟨Φ_n, Φ_m⟩ over the index set.
    const Eigen::MatrixXd& gram() const noexcept { return gram_; }

    /// Coefficients of the orthogonal projection of `f` onto the span.
    Eigen::VectorXd project(const FunctionPair& f) const;

private:
    std::vector<int> indices_;
    std::size_t quadrature_;
    Normalization norm_;
    std::vector<FunctionPair> samples_;
    Eigen::MatrixXd gram_;
    Eigen::LDLT<Eigen::MatrixXd> gram_factor_;
};

/// Truncated semigroup Σ e^{λ_n x} c_n Φ_n, c the projection coefficients of f.
/// Throws PreconditionError for x < 0.
FunctionPair semigroup_apply(const FunctionPair& f, double x, const ModeSet& modes);

/// First component at the s = 0 endpoint of the analysis interval.
double observation(const FunctionPair& f);

/// Σ_n (e^{λ_n x} ρ_n² ‖φ_n‖²)², with ‖φ_n‖ the norm of the unnormalised eigenvector.
double observability_lower_bound(const ModeSet& modes, double x);

/// Sup-norm over interior nodes of A Φ_n - λ_n Φ_n with the second derivative
/// replaced by a centred second difference. Requires quadrature >= 5.
double eigen_residual(const EigenMode& mode, std::size_t quadrature);

/// Max over m of |G_nm - δ_nm| for each mode of the set, in index order.
std::vector<double> gram_row_errors(const ModeSet& modes);

}  // namespace cauchy::spectral
