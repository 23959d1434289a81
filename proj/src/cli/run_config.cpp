#include "cauchy/cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cauchy/grid.hpp"

namespace cauchy::cli {
namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_plain_double(const std::string& key, std::string_view text) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
        throw ConfigError("invalid number for " + key + ": '" + std::string(text) + "'");
    }
    return v;
}

// Accepts plain numbers and multiples of pi: "pi", "2pi", "2*pi", "pi/4", "0.5*pi".
double parse_real(const std::string& key, const std::string& raw) {
    const std::string text = trim(raw);
    const auto at = text.find("pi");
    if (at == std::string::npos) {
        return parse_plain_double(key, text);
    }
    std::string head = trim(std::string_view(text).substr(0, at));
    std::string tail = trim(std::string_view(text).substr(at + 2));
    if (!head.empty() && head.back() == '*') {
        head = trim(std::string_view(head).substr(0, head.size() - 1));
    }
    double v = std::numbers::pi;
    if (!head.empty()) {
        v *= parse_plain_double(key, head);
    }
    if (!tail.empty()) {
        if (tail.front() != '/') {
            throw ConfigError("invalid expression for " + key + ": '" + text + "'");
        }
        const double d = parse_plain_double(key, trim(std::string_view(tail).substr(1)));
        if (d == 0.0) {
            throw ConfigError("division by zero in " + key);
        }
        v /= d;
    }
    return v;
}

long long parse_integer(const std::string& key, const std::string& raw) {
    const std::string text = trim(raw);
    long long v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError("invalid integer for " + key + ": '" + text + "'");
    }
    return v;
}

std::size_t parse_count(const std::string& key, const std::string& raw) {
    const long long v = parse_integer(key, raw);
    if (v < 0) {
        throw ConfigError(key + " must be non-negative, got " + std::to_string(v));
    }
    return static_cast<std::size_t>(v);
}

bool parse_bool(const std::string& key, const std::string& raw) {
    const std::string v = trim(raw);
    if (v == "true" || v == "1" || v == "yes") {
        return true;
    }
    if (v == "false" || v == "0" || v == "no") {
        return false;
    }
    throw ConfigError("invalid boolean for " + key + ": '" + v + "'");
}

// coeff:parity:k, comma separated, e.g. "1.0:cos:1, 0.5:sin:1".
std::vector<FourierTerm> parse_terms(const std::string& raw) {
    std::vector<FourierTerm> terms;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            continue;
        }
        const auto c1 = item.find(':');
        const auto c2 = item.find(':', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            throw ConfigError("term '" + item + "' is not of the form coeff:cos|sin:k");
        }
        FourierTerm t;
        t.coeff = parse_real("terms", item.substr(0, c1));
        const std::string parity = trim(std::string_view(item).substr(c1 + 1, c2 - c1 - 1));
        if (parity == "cos") {
            t.parity = Parity::cos;
        } else if (parity == "sin") {
            t.parity = Parity::sin;
        } else {
            throw ConfigError("term parity must be cos or sin, got '" + parity + "'");
        }
        const long long k = parse_integer("terms", item.substr(c2 + 1));
        if (k < 1 || k > 1000) {
            throw ConfigError("term mode index must be in 1..1000");
        }
        t.k = static_cast<int>(k);
        terms.push_back(t);
    }
    if (terms.empty()) {
        throw ConfigError("terms is empty");
    }
    return terms;
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "example") {
        const std::string v = trim(value);
        if (v == "neumann" || v == "example1") {
            cfg.example = ExampleKind::neumann;
        } else if (v == "dirichlet" || v == "example2") {
            cfg.example = ExampleKind::dirichlet;
        } else if (v == "combo" || v == "example3") {
            cfg.example = ExampleKind::combo;
        } else {
            throw ConfigError("unknown example '" + v + "'");
        }
    } else if (key == "terms") {
        cfg.terms = parse_terms(value);
    } else if (key == "a") {
        cfg.a = parse_real(key, value);
    } else if (key == "b") {
        cfg.b = parse_real(key, value);
    } else if (key == "nx") {
        cfg.nx = parse_count(key, value);
    } else if (key == "ny") {
        cfg.ny = parse_count(key, value);
    } else if (key == "gain_method") {
        const std::string v = trim(value);
        if (v == "ackermann") {
            cfg.gain_method = GainMethod::ackermann;
        } else if (v == "tuned") {
            cfg.gain_method = GainMethod::tuned;
        } else {
            throw ConfigError("unknown gain_method '" + v + "'");
        }
    } else if (key == "pole_min") {
        cfg.pole_min = parse_real(key, value);
    } else if (key == "pole_max") {
        cfg.pole_max = parse_real(key, value);
    } else if (key == "max_sweeps") {
        cfg.max_sweeps = parse_count(key, value);
    } else if (key == "tol") {
        cfg.tol = parse_real(key, value);
    } else if (key == "allow_uncertified") {
        cfg.allow_uncertified = parse_bool(key, value);
    } else if (key == "output_dir") {
        cfg.output_dir = trim(value);
    } else if (key == "mode_min") {
        cfg.mode_min = static_cast<int>(parse_integer(key, value));
    } else if (key == "mode_max") {
        cfg.mode_max = static_cast<int>(parse_integer(key, value));
    } else if (key == "quadrature") {
        cfg.quadrature = parse_count(key, value);
    } else {
        throw ConfigError("unknown configuration key '" + key + "'");
    }
}

}  // namespace

RunConfig default_config() {
    RunConfig cfg;
    cfg.a = 2.0 * std::numbers::pi;
    return cfg;
}

void validate(const RunConfig& cfg) {
    try {
        RectGrid grid(cfg.a, cfg.b, cfg.nx, cfg.ny);
        (void)grid;
    } catch (const PreconditionError& e) {
        throw ConfigError(e.what());
    }
    if (!(cfg.pole_min < cfg.pole_max) || !(cfg.pole_max < 1.0) || !(cfg.pole_min > -1.0)) {
        throw ConfigError("poles need -1 < pole_min < pole_max < 1");
    }
    if (cfg.max_sweeps < 1) {
        throw ConfigError("max_sweeps must be at least 1");
    }
    if (cfg.tol && !(*cfg.tol >= 0.0)) {
        throw ConfigError("tol must be non-negative");
    }
    if (cfg.example == ExampleKind::combo && cfg.terms.empty()) {
        throw ConfigError("example = combo requires terms");
    }
    if (cfg.mode_min > cfg.mode_max) {
        throw ConfigError("mode_min must not exceed mode_max");
    }
    if (cfg.quadrature < 5) {
        throw ConfigError("quadrature must be at least 5");
    }
    if (cfg.output_dir.empty()) {
        throw ConfigError("output_dir is empty");
    }
}

RunConfig parse_config(const std::string& text, const std::vector<Override>& overrides) {
    RunConfig cfg = default_config();
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");
        }
        apply(cfg, key, value);
    }
    for (const auto& [key, value] : overrides) {
        apply(cfg, key, value);
    }
    validate(cfg);
    return cfg;
}

RunConfig load_config(const std::string& path, const std::vector<Override>& overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), overrides);
}

ReferenceSolution make_reference(const RunConfig& cfg) {
    switch (cfg.example) {
    case ExampleKind::neumann:
        return ReferenceSolution::example1(cfg.a, cfg.b);
    case ExampleKind::dirichlet:
        return ReferenceSolution::example2(cfg.a, cfg.b);
    case ExampleKind::combo:
        return ReferenceSolution::combo(cfg.terms, cfg.a, cfg.b);
    }
    throw ConfigError("unknown example kind");
}

std::string to_string(ExampleKind kind) {
    switch (kind) {
    case ExampleKind::neumann:
        return "neumann";
    case ExampleKind::dirichlet:
        return "dirichlet";
    case ExampleKind::combo:
        return "combo";
    }
    return "unknown";
}

std::string to_string(GainMethod method) {
    return method == GainMethod::ackermann ? "ackermann" : "tuned";
}

}  // namespace cauchy::cli
