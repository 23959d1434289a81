#include <atomic>
#include <cstdlib>
#include <string>

#include "cauchy/errors.hpp"
#include "cauchy/kernels.hpp"

namespace cauchy::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(CAUCHY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa detect() noexcept {
    if (const char* env = std::getenv("CAUCHY_ISA"); env != nullptr && std::string(env) == "scalar") {
        return Isa::scalar;
    }
    return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<const KernelTable*>& active_table() {
    static std::atomic<const KernelTable*> current{&table(detect())};
    return current;
}

std::atomic<Isa>& active_tag() {
    static std::atomic<Isa> tag{detect()};
    return tag;
}

void check_sizes(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DimensionMismatch("kernel operands differ in length: " + std::to_string(a) + " vs " +
                                std::to_string(b));
    }
}

}  // namespace

bool isa_supported(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
            return cpu_has_avx2();
    }
    return false;
}

std::string_view isa_name(Isa isa) noexcept {
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

const KernelTable& table(Isa isa) {
    if (!isa_supported(isa)) {
        throw PreconditionError("kernel ISA not available: " + std::string(isa_name(isa)));
    }
#if defined(CAUCHY_HAVE_AVX2)
    if (isa == Isa::avx2) {
        return avx2::table();
    }
#endif
    return scalar::table();
}

Isa active_isa() noexcept { return active_tag().load(); }

void set_active_isa(Isa isa) {
    const KernelTable& t = table(isa);
    active_table().store(&t);
    active_tag().store(isa);
}

double dot(std::span<const double> a, std::span<const double> b) {
    check_sizes(a.size(), b.size());
    return active_table().load()->dot(a.data(), b.data(), a.size());
}

double sum_sq_diff(std::span<const double> a, std::span<const double> b) {
    check_sizes(a.size(), b.size());
    return active_table().load()->sum_sq_diff(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    check_sizes(x.size(), y.size());
    active_table().load()->axpy(alpha, x.data(), y.data(), x.size());
}

void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> y) {
    check_sizes(a.size(), rows * cols);
    check_sizes(x.size(), cols);
    check_sizes(y.size(), rows);
    active_table().load()->gemv(a.data(), rows, cols, x.data(), y.data());
}

double trapezoid_dot(std::span<const double> a, std::span<const double> b, double h) {
    check_sizes(a.size(), b.size());
    if (a.empty()) {
        return 0.0;
    }
    const double ends = 0.5 * (a.front() * b.front() + a.back() * b.back());
    return h * (dot(a, b) - ends);
}

double trapezoid_sq_diff(std::span<const double> a, std::span<const double> b, double h) {
    check_sizes(a.size(), b.size());
    if (a.empty()) {
        return 0.0;
    }
    const double d0 = a.front() - b.front();
    const double d1 = a.back() - b.back();
    return h * (sum_sq_diff(a, b) - 0.5 * (d0 * d0 + d1 * d1));
}

}  // namespace cauchy::kernels
