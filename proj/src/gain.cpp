#include "cauchy/gain.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cauchy/errors.hpp"

namespace cauchy {
namespace {

bool lexicographic(const std::complex<double>& a, const std::complex<double>& b) {
    if (a.real() != b.real()) {
        return a.real() < b.real();
    }
    return a.imag() < b.imag();
}

void require_conforming(const Eigen::MatrixXd& f, std::span<const double> c_row) {
    if (f.rows() != f.cols()) {
        throw DimensionMismatch("system matrix must be square");
    }
    if (static_cast<Eigen::Index>(c_row.size()) != f.cols()) {
        throw DimensionMismatch("observation row length " + std::to_string(c_row.size()) +
                                " does not match system size " + std::to_string(f.cols()));
    }
}

Eigen::RowVectorXd as_row(std::span<const double> c_row) {
    return Eigen::Map<const Eigen::RowVectorXd>(c_row.data(), static_cast<Eigen::Index>(c_row.size()));
}

}  // namespace

PoleSpec::PoleSpec(std::vector<std::complex<double>> poles) : poles_(std::move(poles)) {
    if (poles_.empty()) {
        throw PreconditionError("pole specification is empty");
    }
    for (const auto& p : poles_) {
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag()) || std::abs(p) >= 1.0) {
            std::ostringstream os;
            os << "pole " << p << " is not strictly inside the unit circle";
            throw PreconditionError(os.str());
        }
    }
    // Conjugate closure: the multiset of conjugates must equal the multiset itself.
    auto sorted = poles_;
    auto conj = poles_;
    for (auto& p : conj) {
        p = std::conj(p);
    }
    std::sort(sorted.begin(), sorted.end(), lexicographic);
    std::sort(conj.begin(), conj.end(), lexicographic);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (std::abs(sorted[i] - conj[i]) > 1e-12 * (1.0 + std::abs(sorted[i]))) {
            throw PreconditionError("complex poles must appear in conjugate pairs");
        }
    }
}

PoleSpec PoleSpec::uniform(std::size_t count, double lo, double hi) {
    if (count == 0) {
        throw PreconditionError("pole count must be positive");
    }
    if (count > 1 && !(lo < hi)) {
        throw PreconditionError("pole range needs lo < hi");
    }
    std::vector<std::complex<double>> p(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
        p[i] = lo + t * (hi - lo);
    }
    return PoleSpec(std::move(p));
}

double PoleSpec::max_modulus() const noexcept {
    double m = 0.0;
    for (const auto& p : poles_) {
        m = std::max(m, std::abs(p));
    }
    return m;
}

std::vector<double> PoleSpec::monic_coefficients() const {
    std::vector<std::complex<double>> c{1.0};
    for (const auto& root : poles_) {
        std::vector<std::complex<double>> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] -= root * c[i];
        }
        c = std::move(next);
    }
    std::vector<double> out(c.size());
    std::transform(c.begin(), c.end(), out.begin(), [](const auto& z) { return z.real(); });
    return out;
}

Eigen::MatrixXd observability_matrix(const Eigen::MatrixXd& f, std::span<const double> c_row) {
    require_conforming(f, c_row);
    const Eigen::Index n = f.rows();
    Eigen::MatrixXd o(n, n);
    Eigen::RowVectorXd row = as_row(c_row);
    for (Eigen::Index k = 0; k < n; ++k) {
        o.row(k) = row;
        row = row * f;
    }
    return o;
}

double condition_number(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0) {
        return 0.0;
    }
    const double smin = s(s.size() - 1);
    return smin > 0.0 ? s(0) / smin : std::numeric_limits<double>::infinity();
}

std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("eigenvalues of a non-square matrix");
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    if (es.info() != Eigen::Success) {
        throw EigensolveFailed("dense eigensolve did not converge");
    }
    const auto& ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

double spectral_radius(const Eigen::MatrixXd& m) {
    double r = 0.0;
    for (const auto& z : eigenvalues(m)) {
        r = std::max(r, std::abs(z));
    }
    return r;
}

double spectral_radius_power(const Eigen::MatrixXd& m, double tol, std::size_t max_iter) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("spectral radius of a non-square matrix");
    }
    Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(m.rows(), 1.0, 2.0);
    v.normalize();
    double estimate = 0.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        Eigen::VectorXd w = m * v;
        const double norm = w.norm();
        if (norm == 0.0) {
            return 0.0;
        }
        w /= norm;
        if (std::abs(norm - estimate) <= tol * std::max(1.0, norm)) {
            return norm;
        }
        estimate = norm;
        v = std::move(w);
    }
    throw EigensolveFailed("power iteration did not converge");
}

double eigenvalue_mismatch(std::vector<std::complex<double>> computed,
                           std::vector<std::complex<double>> wanted) {
    if (computed.size() != wanted.size()) {
        return std::numeric_limits<double>::infinity();
    }
    std::sort(computed.begin(), computed.end(), lexicographic);
    std::sort(wanted.begin(), wanted.end(), lexicographic);
    double worst = 0.0;
    for (std::size_t i = 0; i < computed.size(); ++i) {
        worst = std::max(worst, std::abs(computed[i] - wanted[i]));
    }
    return worst;
}

Eigen::MatrixXd closed_loop(const Eigen::MatrixXd& f, std::span<const double> c_row,
                            const GainVector& gain) {
    require_conforming(f, c_row);
    if (static_cast<Eigen::Index>(gain.k.size()) != f.rows()) {
        throw DimensionMismatch("gain length does not match system size");
    }
    const Eigen::Map<const Eigen::VectorXd> k(gain.k.data(), f.rows());
    return f - k * as_row(c_row);
}

GainVector ackermann_gain(const Eigen::MatrixXd& f, std::span<const double> c_row,
                          const PoleSpec& spec, const AckermannOptions& opts) {
    require_conforming(f, c_row);
    const Eigen::Index n = f.rows();
    if (static_cast<Eigen::Index>(spec.size()) != n) {
        throw PreconditionError("need " + std::to_string(n) + " poles, got " + std::to_string(spec.size()));
    }

    const Eigen::MatrixXd o = observability_matrix(f, c_row);
    const double cond = condition_number(o);
    if (!(cond <= opts.condition_cap)) {
        std::ostringstream os;
        os << "observability matrix condition " << cond << " exceeds cap " << opts.condition_cap;
        throw ObservabilityDeficient(os.str(), cond);
    }

    // q(F) by Horner: coefficients highest degree first.
    const std::vector<double> coeff = spec.monic_coefficients();
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    for (double c : coeff) {
        q = q * f;
        q.diagonal().array() += c;
    }

    Eigen::VectorXd e_last = Eigen::VectorXd::Zero(n);
    e_last(n - 1) = 1.0;
    const Eigen::VectorXd w = o.colPivHouseholderQr().solve(e_last);
    const Eigen::VectorXd k = q * w;

    GainVector gain{std::vector<double>(k.data(), k.data() + k.size())};
    for (double v : gain.k) {
        if (!std::isfinite(v)) {
            throw PlacementFailed("gain has non-finite entries", std::numeric_limits<double>::infinity());
        }
    }

    const auto achieved = eigenvalues(closed_loop(f, c_row, gain));
    const std::vector<std::complex<double>> wanted(spec.poles().begin(), spec.poles().end());
    const double dev = eigenvalue_mismatch(achieved, wanted);
    const double limit = opts.relative_tolerance * (1.0 + spec.max_modulus());
    if (!(dev <= limit)) {
        std::ostringstream os;
        os << "closed-loop eigenvalues miss requested poles by " << dev << " (limit " << limit << ")";
        throw PlacementFailed(os.str(), dev);
    }
    return gain;
}

std::vector<double> default_kappa_grid() {
    std::vector<double> g{0.0};
    constexpr int kSteps = 241;
    for (int i = 0; i < kSteps; ++i) {
        g.push_back(std::pow(10.0, -3.0 + 6.0 * i / (kSteps - 1)));
    }
    return g;
}

TunedGain tuned_injection_gain(const Eigen::MatrixXd& f, std::span<const double> c_row,
                               std::span<const double> search_grid) {
    require_conforming(f, c_row);
    if (search_grid.empty()) {
        throw PreconditionError("kappa search grid is empty");
    }
    const auto n = static_cast<std::size_t>(f.rows());
    const auto observed = static_cast<std::size_t>(
        std::distance(c_row.begin(), std::max_element(c_row.begin(), c_row.end(),
                                                      [](double a, double b) { return std::abs(a) < std::abs(b); })));

    std::vector<double> candidates(search_grid.begin(), search_grid.end());
    if (std::find(candidates.begin(), candidates.end(), 0.0) == candidates.end()) {
        candidates.insert(candidates.begin(), 0.0);
    }

    TunedGain best;
    best.spectral_radius = std::numeric_limits<double>::infinity();
    for (double kappa : candidates) {
        GainVector g{std::vector<double>(n, 0.0)};
        g.k[observed] = kappa;
        const double r = spectral_radius(closed_loop(f, c_row, g));
        if (r < best.spectral_radius) {
            best.gain = std::move(g);
            best.kappa = kappa;
            best.spectral_radius = r;
        }
    }
    best.stable = best.spectral_radius < 1.0;
    return best;
}

Eigen::MatrixXd to_dense(const RowMatrix& m) { return Eigen::MatrixXd(m); }

}  // namespace cauchy
