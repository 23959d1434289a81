#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/reference.hpp"

namespace cauchy::cli {

/// Malformed configuration text, unknown keys or out-of-range values.
class ConfigError : public Error {
public:
    using Error::Error;
};

enum class ExampleKind { neumann, dirichlet, combo };
enum class GainMethod { ackermann, tuned };

struct RunConfig {
    ExampleKind example = ExampleKind::neumann;
    std::vector<FourierTerm> terms;
    double a = 0.0;  // set to 2π by default_config()
    double b = 0.5;
    std::size_t nx = 65;
    std::size_t ny = 9;
    GainMethod gain_method = GainMethod::ackermann;
    double pole_min = 0.3;
    double pole_max = 0.8;
    std::size_t max_sweeps = 500;
    std::optional<double> tol;
    bool allow_uncertified = false;
    std::string output_dir = ".";
    int mode_min = -8;
    int mode_max = 8;
    std::size_t quadrature = 2001;
};

using Override = std::pair<std::string, std::string>;

RunConfig default_config();

/// Applies `key = value` lines (`#` starts a comment) on top of the defaults,
/// then the overrides in order, then validates.
RunConfig parse_config(const std::string& text, const std::vector<Override>& overrides = {});

/// Reads the file and forwards to parse_config.
RunConfig load_config(const std::string& path, const std::vector<Override>& overrides = {});

/// Throws ConfigError when a value violates a module precondition.
void validate(const RunConfig& cfg);

/// The reference solution described by the config.
ReferenceSolution make_reference(const RunConfig& cfg);

std::string to_string(ExampleKind kind);
std::string to_string(GainMethod method);

}  // namespace cauchy::cli
