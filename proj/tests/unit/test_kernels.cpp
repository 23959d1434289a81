#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/kernels.hpp"
#include "oracles.hpp"

namespace k = cauchy::kernels;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = dist(rng);
    }
    return v;
}

double abs_sum(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::abs(a[i] * b[i]);
    }
    return s;
}

}  // namespace

TEST_CASE("scalar table is always available") {
    CHECK(k::isa_supported(k::Isa::scalar));
    CHECK(k::isa_name(k::Isa::scalar) == "scalar");
    CHECK(k::isa_name(k::Isa::avx2) == "avx2");
}

TEST_CASE("AVX2 kernels agree with the scalar reference") {
    if (!k::isa_supported(k::Isa::avx2)) {
        MESSAGE("AVX2 not available; equivalence not exercised");
        return;
    }
    const auto& s = k::table(k::Isa::scalar);
    const auto& v = k::table(k::Isa::avx2);
    std::mt19937_64 rng(20240611);
    for (std::size_t n = 0; n <= 41; ++n) {
        const auto a = random_vector(rng, n);
        const auto b = random_vector(rng, n);
        const double bound = 4.0 * n * 1.1e-16 * (abs_sum(a, b) + 1.0);
        CHECK(std::abs(s.dot(a.data(), b.data(), n) - v.dot(a.data(), b.data(), n)) <= bound);

        double sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sq += (a[i] - b[i]) * (a[i] - b[i]);
        }
        CHECK(std::abs(s.sum_sq_diff(a.data(), b.data(), n) - v.sum_sq_diff(a.data(), b.data(), n)) <=
              4.0 * n * 1.1e-16 * (sq + 1.0));

        auto ys = b;
        auto yv = b;
        s.axpy(-0.37, a.data(), ys.data(), n);
        v.axpy(-0.37, a.data(), yv.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(ys[i] - yv[i]) <= 4e-16 * (std::abs(ys[i]) + 1.0));
        }
    }
    for (std::size_t rows : {1u, 3u, 6u, 18u}) {
        for (std::size_t cols : {1u, 5u, 6u, 18u, 33u}) {
            const auto m = random_vector(rng, rows * cols);
            const auto x = random_vector(rng, cols);
            std::vector<double> ys(rows);
            std::vector<double> yv(rows);
            s.gemv(m.data(), rows, cols, x.data(), ys.data());
            v.gemv(m.data(), rows, cols, x.data(), yv.data());
            for (std::size_t r = 0; r < rows; ++r) {
                double mag = 0.0;
                for (std::size_t c = 0; c < cols; ++c) {
                    mag += std::abs(m[r * cols + c] * x[c]);
                }
                CHECK(std::abs(ys[r] - yv[r]) <= 4.0 * cols * 1.1e-16 * (mag + 1.0));
            }
        }
    }
}

TEST_CASE("dispatch switches the active table") {
    const auto original = k::active_isa();
    k::set_active_isa(k::Isa::scalar);
    CHECK(k::active_isa() == k::Isa::scalar);
    const std::vector<double> a{1.0, 2.0, 3.0};
    CHECK(k::dot(a, a) == 14.0);
    if (k::isa_supported(k::Isa::avx2)) {
        k::set_active_isa(k::Isa::avx2);
        CHECK(k::active_isa() == k::Isa::avx2);
        CHECK(k::dot(a, a) == 14.0);
    } else {
        CHECK_THROWS_AS(k::set_active_isa(k::Isa::avx2), cauchy::PreconditionError);
    }
    k::set_active_isa(original);
}

TEST_CASE("span wrappers check sizes") {
    std::vector<double> a(4, 1.0);
    std::vector<double> b(5, 1.0);
    CHECK_THROWS_AS(k::dot(a, b), cauchy::DimensionMismatch);
    CHECK_THROWS_AS(k::sum_sq_diff(a, b), cauchy::DimensionMismatch);
    CHECK_THROWS_AS(k::axpy(1.0, a, b), cauchy::DimensionMismatch);
    std::vector<double> y(2);
    CHECK_THROWS_AS(k::gemv(a, 2, 3, a, y), cauchy::DimensionMismatch);
}

TEST_CASE("trapezoid helpers match a plain-loop rule") {
    std::mt19937_64 rng(7);
    for (std::size_t n : {2u, 3u, 17u, 101u}) {
        const auto a = random_vector(rng, n);
        const auto b = random_vector(rng, n);
        std::vector<double> prod(n);
        std::vector<double> diff(n);
        for (std::size_t i = 0; i < n; ++i) {
            prod[i] = a[i] * b[i];
            diff[i] = (a[i] - b[i]) * (a[i] - b[i]);
        }
        CHECK(k::trapezoid_dot(a, b, 0.01) == doctest::Approx(oracle::trapezoid(prod, 0.01)).epsilon(1e-12));
        CHECK(k::trapezoid_sq_diff(a, b, 0.01) == doctest::Approx(oracle::trapezoid(diff, 0.01)).epsilon(1e-12));
    }
    const std::vector<double> empty;
    CHECK(k::trapezoid_dot(empty, empty, 0.5) == 0.0);
}
