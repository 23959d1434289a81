#pragma once

#include <cstddef>
#include <span>
#include <string_view>

/// Data-parallel inner loops shared by the marching and quadrature code.
///
/// Every kernel has a scalar reference implementation; an AVX2/FMA variant is
/// compiled on x86-64 and selected at runtime when the CPU supports it. The
/// environment variable CAUCHY_ISA=scalar forces the reference path.
namespace cauchy::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*sum_sq_diff)(const double* a, const double* b, std::size_t n);
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // y = A x for a row-major rows x cols matrix.
    void (*gemv)(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
};

bool isa_supported(Isa isa) noexcept;
std::string_view isa_name(Isa isa) noexcept;

/// Throws PreconditionError when `isa` is not available on this build/CPU.
const KernelTable& table(Isa isa);

Isa active_isa() noexcept;
/// Switches the process-wide dispatch target. Intended for tests and benchmarks.
void set_active_isa(Isa isa);

double dot(std::span<const double> a, std::span<const double> b);
double sum_sq_diff(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> y);

/// Composite trapezoid of a*b on a uniform grid with spacing h.
double trapezoid_dot(std::span<const double> a, std::span<const double> b, double h);
/// Composite trapezoid of (a-b)^2 on a uniform grid with spacing h.
double trapezoid_sq_diff(std::span<const double> a, std::span<const double> b, double h);

namespace scalar {
const KernelTable& table() noexcept;
}

#if defined(CAUCHY_HAVE_AVX2)
namespace avx2 {
const KernelTable& table() noexcept;
}
#endif

}  // namespace cauchy::kernels
