#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/spectral.hpp"

namespace sp = cauchy::spectral;

namespace {

constexpr double kPi = std::numbers::pi;

// H¹×L² product of two eigenpairs from their analytic forms, integrated by
// composite Simpson on a fine grid.
double analytic_product(const sp::EigenMode& p, const sp::EigenMode& q) {
    const std::size_t n = 20000;
    const double h = (kPi / 4.0) / static_cast<double>(n);
    const double c1 = -std::sqrt(8.0 / kPi);
    long double sum = 0.0L;
    for (std::size_t i = 0; i <= n; ++i) {
        const double y = h * static_cast<double>(i);
        const double fp = c1 * std::cos(p.lambda * y);
        const double fq = c1 * std::cos(q.lambda * y);
        const double dp = -c1 * p.lambda * std::sin(p.lambda * y);
        const double dq = -c1 * q.lambda * std::sin(q.lambda * y);
        const double v = p.rho * q.rho * (p.alpha * q.alpha * (dp * dq + fp * fq) + p.beta * q.beta * fp * fq);
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        sum += w * v;
    }
    return static_cast<double>(sum * h / 3.0L);
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

}  // namespace

TEST_CASE("eigenpairs in the classical scaling") {
    const auto m0 = sp::make_mode(0);
    CHECK(m0.lambda == 6.0);
    CHECK(m0.beta == 6.0);
    CHECK(m0.alpha == 1.0);
    CHECK(m0.rho == doctest::Approx(1.0 / (6.0 * std::sqrt(2.0))).epsilon(1e-15));
    const auto v0 = sp::eval_mode(m0, 0.0);
    CHECK(v0.first == doctest::Approx(-0.18806).epsilon(1e-4));
    CHECK(v0.second == doctest::Approx(-1.12838).epsilon(1e-5));
    CHECK(v0.first == doctest::Approx(-std::sqrt(8.0 / kPi) / (6.0 * std::sqrt(2.0))).epsilon(1e-14));

    const auto end = sp::eval_mode(m0, kPi / 4.0);
    CHECK(std::abs(end.first) < 1e-15);
    CHECK(std::abs(end.second) < 1e-14);

    const auto m1 = sp::make_mode(1);
    CHECK(m1.lambda == -2.0);
    CHECK(m1.rho == doctest::Approx(-1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
    CHECK(sp::eval_mode(m1, 0.0).first == doctest::Approx(0.56419).epsilon(1e-5));
}

TEST_CASE("unit scaling gives each eigenvector norm one") {
    for (int n : {-8, -1, 0, 1, 2, 8}) {
        const auto m = sp::make_mode(n, sp::Normalization::unit);
        CHECK(analytic_product(m, m) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK((m.rho > 0) == (m.beta > 0));
    }
}

TEST_CASE("quadrature inner product against the analytic oracle") {
    const auto u0 = sp::make_mode(0, sp::Normalization::unit);
    const auto u1 = sp::make_mode(1, sp::Normalization::unit);
    const auto s0 = sp::sample_mode(u0, 2001);
    const auto s1 = sp::sample_mode(u1, 2001);
    CHECK(sp::inner_product(s0, s0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(sp::inner_product(s0, s1)) < 1e-8);
    CHECK(sp::inner_product(sp::zero_pair(2001), s1) == 0.0);

    const auto p0 = sp::make_mode(0);
    const auto classical = sp::sample_mode(p0, 2001);
    CHECK(sp::inner_product(classical, classical) == doctest::Approx(1.0 + 1.0 / 72.0).epsilon(1e-8));
    CHECK(sp::inner_product(classical, classical) == doctest::Approx(analytic_product(p0, p0)).epsilon(1e-8));

    const auto u7 = sp::make_mode(-7, sp::Normalization::unit);
    const auto s7 = sp::sample_mode(u7, 2001);
    CHECK(sp::inner_product(s7, s1) == doctest::Approx(analytic_product(u7, u1)).epsilon(1e-8));

    CHECK_THROWS_AS(sp::inner_product(s0, sp::sample_mode(u1, 1001)), cauchy::DimensionMismatch);
    CHECK_THROWS(sp::inner_product(sp::zero_pair(4), sp::zero_pair(4)));
}

TEST_CASE("Gram matrix is the identity up to quadrature error") {
    const auto modes = sp::ModeSet::range(-8, 8, 2001);
    const auto errs = sp::gram_row_errors(modes);
    REQUIRE(errs.size() == 17);
    CHECK(max_abs(errs) <= 1e-6);

    const auto coarse = sp::ModeSet::range(-8, 8, 501);
    CHECK(max_abs(sp::gram_row_errors(coarse)) > max_abs(errs));

    const sp::ModeSet classical({0, 1, 2}, 2001, sp::Normalization::classical);
    for (std::size_t k = 0; k < 3; ++k) {
        const double lam = classical.mode(k).lambda;
        CHECK(classical.gram()(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) ==
              doctest::Approx(1.0 + 1.0 / (2.0 * lam * lam)).epsilon(1e-8));
    }
}

TEST_CASE("mode set validation") {
    CHECK_THROWS_AS(sp::ModeSet({}, 101), cauchy::PreconditionError);
    CHECK_THROWS_AS(sp::ModeSet({0, 1, 0}, 101), cauchy::PreconditionError);
    CHECK_THROWS_AS(sp::ModeSet({0}, 4), cauchy::PreconditionError);
    const auto std_set = sp::ModeSet::standard();
    CHECK(std_set.quadrature() == 2001);
    CHECK(std_set.normalization() == sp::Normalization::unit);
}

TEST_CASE("semigroup on the mode span") {
    const auto modes = sp::ModeSet::range(-3, 4, 1001);
    const auto phi0 = sp::sample_mode(sp::make_mode(0, sp::Normalization::unit), 1001);

    const auto moved = sp::semigroup_apply(phi0, 0.3, modes);
    const double growth = std::exp(6.0 * 0.3);
    for (std::size_t j = 0; j < phi0.nodes(); j += 50) {
        CHECK(moved.p1[j] == doctest::Approx(growth * phi0.p1[j]).epsilon(1e-9).scale(1.0));
        CHECK(moved.p2[j] == doctest::Approx(growth * phi0.p2[j]).epsilon(1e-9).scale(1.0));
    }

    sp::FunctionPair f = sp::zero_pair(1001);
    for (int n : {-3, 1, 2, 4}) {
        const auto s = sp::sample_mode(sp::make_mode(n, sp::Normalization::unit), 1001);
        for (std::size_t j = 0; j < s.nodes(); ++j) {
            f.p1[j] += 0.5 * n * s.p1[j] + s.p1[j];
            f.p2[j] += 0.5 * n * s.p2[j] + s.p2[j];
        }
    }
    const auto same = sp::semigroup_apply(f, 0.0, modes);
    for (std::size_t j = 0; j < f.nodes(); ++j) {
        CHECK(std::abs(same.p1[j] - f.p1[j]) < 1e-11);
        CHECK(std::abs(same.p2[j] - f.p2[j]) < 1e-11);
    }

    const auto two_step = sp::semigroup_apply(sp::semigroup_apply(f, 0.1, modes), 0.2, modes);
    const auto one_step = sp::semigroup_apply(f, 0.3, modes);
    double scale = 0.0;
    double diff = 0.0;
    for (std::size_t j = 0; j < f.nodes(); ++j) {
        scale = std::max({scale, std::abs(one_step.p1[j]), std::abs(one_step.p2[j])});
        diff = std::max({diff, std::abs(two_step.p1[j] - one_step.p1[j]), std::abs(two_step.p2[j] - one_step.p2[j])});
    }
    CHECK(diff <= 1e-10 * scale);

    CHECK_THROWS_AS(sp::semigroup_apply(f, -0.1, modes), cauchy::PreconditionError);
}

TEST_CASE("observation reads the first component at the left endpoint") {
    CHECK(sp::observation(sp::sample_mode(sp::make_mode(0), 101)) == doctest::Approx(-0.18806).epsilon(1e-4));
    CHECK(sp::observation(sp::sample_mode(sp::make_mode(1), 101)) == doctest::Approx(0.56419).epsilon(1e-5));
    CHECK(sp::observation(sp::zero_pair(101)) == 0.0);
}

TEST_CASE("observability lower bound") {
    const sp::ModeSet single({0}, 2001);
    // ‖φ₀‖² = (8/π)(36 π/8 + π/8 + 36 π/8) = 73 and ρ₀² = 1/73 in the unit scaling.
    CHECK(sp::observability_lower_bound(single, 0.0) == doctest::Approx(1.0).epsilon(1e-7));
    for (double x : {0.1, 0.25, 0.5}) {
        const double ratio = sp::observability_lower_bound(single, x) / sp::observability_lower_bound(single, 0.0);
        CHECK(ratio == doctest::Approx(std::exp(12.0 * x)).epsilon(1e-12));
    }
    const sp::ModeSet classical_single({0}, 2001, sp::Normalization::classical);
    const double rho2_norm2 = (1.0 / 72.0) * 73.0;
    CHECK(sp::observability_lower_bound(classical_single, 0.0) == doctest::Approx(rho2_norm2 * rho2_norm2).epsilon(1e-7));

    for (int n : {-8, -2, 5, 8}) {
        CHECK(sp::observability_lower_bound(sp::ModeSet({n}, 201), 0.5) > 0.0);
    }
}

TEST_CASE("eigen residual converges at second order") {
    const auto m0 = sp::make_mode(0);
    const double h = (kPi / 4.0) / 100.0;
    const double bound = std::pow(m0.lambda, 3) * h * h * std::sqrt(8.0 / kPi) * m0.rho;
    const double r101 = sp::eigen_residual(m0, 101);
    const double r201 = sp::eigen_residual(m0, 201);
    CHECK(r101 <= bound);
    CHECK(r201 < r101);
    CHECK(std::log2(r101 / r201) == doctest::Approx(2.0).epsilon(0.05));
    for (int n : {-6, 3, 8}) {
        const auto m = sp::make_mode(n, sp::Normalization::unit);
        CHECK(std::log2(sp::eigen_residual(m, 401) / sp::eigen_residual(m, 801)) >= 1.9);
    }
    CHECK_THROWS(sp::eigen_residual(m0, 4));
}
