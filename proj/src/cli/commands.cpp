#include "cauchy/cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>

#include "cauchy/cli/csv.hpp"
#include "cauchy/errors.hpp"
#include "cauchy/gain.hpp"
#include "cauchy/grid.hpp"
#include "cauchy/observer.hpp"
#include "cauchy/reference.hpp"
#include "cauchy/spectral.hpp"

namespace cauchy::cli {
namespace {

std::string join(const std::string& dir, const char* name) {
    return (std::filesystem::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory '" + dir + "': " + ec.message());
    }
}

std::string plot_script() {
    return "set datafile separator ','\n"
           "set key autotitle columnhead\n"
           "set terminal pngcairo size 900,600\n"
           "set output 'boundary.png'\n"
           "set xlabel 'x'\n"
           "set ylabel 'u(x,0)'\n"
           "plot 'boundary.csv' using 1:2 with lines lw 2, \\\n"
           "     'boundary.csv' using 1:3 with points pt 7 ps 0.6\n"
           "set output 'history.png'\n"
           "set logscale y\n"
           "set xlabel 'sweep'\n"
           "set ylabel 'norm'\n"
           "plot 'history.csv' using 1:2 with lines, \\\n"
           "     'history.csv' using 1:3 with lines\n";
}

}  // namespace

GainReport design_gain(const RunConfig& cfg, const SystemMatrices& mats) {
    const Eigen::MatrixXd f = to_dense(mats.f);
    GainReport rep;
    rep.method = cfg.gain_method;
    rep.pole_min = cfg.pole_min;
    rep.pole_max = cfg.pole_max;
    rep.obs_matrix_condition = condition_number(observability_matrix(f, mats.c_row));
    if (cfg.gain_method == GainMethod::ackermann) {
        const auto spec = PoleSpec::uniform(mats.state_size(), cfg.pole_min, cfg.pole_max);
        rep.gain = ackermann_gain(f, mats.c_row, spec);
    } else {
        const auto grid = default_kappa_grid();
        auto tuned = tuned_injection_gain(f, mats.c_row, grid);
        rep.gain = std::move(tuned.gain);
    }
    rep.spectral_radius = spectral_radius(closed_loop(f, mats.c_row, rep.gain));
    return rep;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
        const RectGrid grid(cfg.a, cfg.b, cfg.nx, cfg.ny);
        const ReferenceSolution sol = make_reference(cfg);
        const SystemMatrices mats = assemble(grid);
        const GainReport gain = design_gain(cfg, mats);

        const ObserverProblem problem(grid, make_cauchy_data(sol, grid), gain.gain);
        ObserverConfig oc;
        oc.max_sweeps = cfg.max_sweeps;
        oc.tol = cfg.tol;
        oc.allow_uncertified_gain = cfg.allow_uncertified;
        ObserverRun run(problem, oc, &sol);
        while (!run.converged() && !run.exhausted()) {
            run.sweep();
        }

        ensure_dir(cfg.output_dir);
        const auto exact = bottom_trace(sol, grid);
        const auto estimate = bottom_row(run.field());
        CsvTable boundary({"x", "exact_bottom", "estimated_bottom"});
        for (std::size_t j = 0; j < grid.nx(); ++j) {
            boundary.add_row({format_number(grid.x_nodes()[j]), format_number(exact[j]), format_number(estimate[j])});
        }
        boundary.write(join(cfg.output_dir, "boundary.csv"));

        const auto& report = run.report();
        CsvTable history({"sweep", "top_residual", "bottom_error"});
        for (std::size_t m = 0; m < report.top_residual.size(); ++m) {
            history.add_row({std::to_string(m + 1), format_number(report.top_residual[m]),
                             format_number(report.bottom_error[m])});
        }
        history.write(join(cfg.output_dir, "history.csv"));

        CsvTable gain_csv({"method", "spectral_radius", "condition"});
        gain_csv.add_row({to_string(gain.method), format_number(gain.spectral_radius),
                          format_number(gain.obs_matrix_condition)});
        gain_csv.write(join(cfg.output_dir, "gain.csv"));

        write_text(join(cfg.output_dir, "plot.gp"), plot_script());

        const double final_error = report.bottom_error.empty() ? 0.0 : report.bottom_error.back();
        out << "sweeps " << run.sweeps_done() << ", top residual " << format_number(report.top_residual.back())
            << ", bottom error " << format_number(final_error) << '\n';
        if (run.converged()) {
            out << "converged at sweep " << *report.converged_at << '\n';
            return kExitOk;
        }
        err << "not converged after " << run.sweeps_done() << " sweeps (tol " << format_number(run.tol()) << ")\n";
        return kExitNotConverged;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NonFiniteState& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

int cmd_diagnose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
        const auto modes = spectral::ModeSet::range(cfg.mode_min, cfg.mode_max, cfg.quadrature);
        const auto gram_err = spectral::gram_row_errors(modes);

        ensure_dir(cfg.output_dir);
        bool ok = true;
        CsvTable spec({"n", "lambda", "rho", "gram_err", "eigen_residual"});
        for (std::size_t k = 0; k < modes.size(); ++k) {
            const auto mode = modes.mode(k);
            spec.add_row({std::to_string(mode.n), format_number(mode.lambda), format_number(mode.rho),
                          format_number(gram_err[k]),
                          format_number(spectral::eigen_residual(mode, cfg.quadrature))});
            ok = ok && gram_err[k] <= 1e-6;
        }
        spec.write(join(cfg.output_dir, "spectral.csv"));

        CsvTable obs({"x", "lower_bound"});
        for (int i = 0; i <= 10; ++i) {
            const double x = 0.05 * i;
            const double bound = spectral::observability_lower_bound(modes, x);
            obs.add_row({format_number(x), format_number(bound)});
            ok = ok && bound > 0.0;
        }
        obs.write(join(cfg.output_dir, "observability.csv"));

        const double worst = *std::max_element(gram_err.begin(), gram_err.end());
        out << "modes " << modes.size() << ", max gram error " << format_number(worst) << '\n';
        if (!ok) {
            err << "diagnostics failed: gram error above 1e-6 or non-positive observability bound\n";
            return kExitRuntime;
        }
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace cauchy::cli
