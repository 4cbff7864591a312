#include "viscoex/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "viscoex/dispersion.hpp"
#include "viscoex/errors.hpp"
#include "viscoex/exchange.hpp"
#include "viscoex/maxwell.hpp"
#include "viscoex/response.hpp"
#include "viscoex/transition.hpp"

namespace viscoex::cli {

namespace {

Cell cell(std::optional<double> value) {
    return value ? Cell(*value) : Cell();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw ConfigError(path + ": cannot open output file");
    }
    file << content;
    if (!file.flush()) {
        throw ConfigError(path + ": write failed");
    }
}

}  // namespace

Table response_table(const RunConfig& cfg) {
    Table table{{"omega", "omega_tau", "F", "G_real", "G_imag", "eta_inv_real", "eta_inv_imag"}, {}};
    for (const auto& s : frequency_sweep(cfg.response_grid.build(), cfg.fluid)) {
        table.add_row({s.omega, s.omega_tau, s.F, s.G_real, s.G_imag, s.eta_inv_real, s.eta_inv_imag});
    }
    return table;
}

Table maxwell_table(const RunConfig& cfg) {
    StepControl control = StepControl::defaults_for(cfg.fluid);
    control.dt = cfg.maxwell.dt.value_or(control.dt);
    control.horizon = cfg.maxwell.horizon.value_or(control.horizon);
    control.max_dt_over_tau = cfg.tolerances.max_dt_over_tau;

    const TimeSeries series = cfg.maxwell.mode == MaxwellMode::stress
                                  ? integrate_stress_driven(cfg.maxwell.drive, cfg.fluid, control)
                                  : integrate_strain_driven(cfg.maxwell.drive, cfg.fluid, control);
    if (series.size() >= 3) {
        const double residual = maxwell_residual(series, cfg.fluid);
        if (!(residual <= cfg.tolerances.maxwell_residual)) {
            throw NumericalError("constitutive residual " + format_number(residual) +
                                 " exceeds tolerance; reduce dt");
        }
    }

    Table table{{"t", "stress", "strain", "strain_rate"}, {}};
    table.rows.reserve(static_cast<std::size_t>(series.size()));
    for (Eigen::Index i = 0; i < series.size(); ++i) {
        table.add_row({series.t[i], series.stress[i], series.strain[i], series.strain_rate[i]});
    }
    return table;
}

Table dispersion_table(const RunConfig& cfg) {
    const GridSpec grid =
        cfg.dispersion_grid.value_or(GridSpec{0.0, 10.0 * k_gap(cfg.fluid), 101, false});
    Table table{{"k", "omega_re_plus", "omega_im_plus", "omega_re_minus", "omega_im_minus"}, {}};
    for (const auto& p : dispersion_sweep(grid.build(), cfg.fluid)) {
        table.add_row({p.k, p.omega_plus.real(), p.omega_plus.imag(), p.omega_minus.real(),
                       p.omega_minus.imag()});
    }
    return table;
}

Table exchange_table(const RunConfig& cfg) {
    const auto& ex = cfg.exchange;
    Table table{{"method", "A", "J0", "J_modulated", "E_sym", "E_anti", "stderr_A", "stderr_J0"}, {}};
    const auto add = [&table](const ExchangeResult& r) {
        table.add_row({std::string(to_string(r.method)), r.A, r.J0, r.J_modulated, r.E_sym, r.E_anti,
                       cell(r.stderr_A), cell(r.stderr_J0)});
    };
    add(quadrature_pair_integrals(ex.orb1, ex.orb2, ex.kernel, ex.quadrature).modulate(ex.omega_tau));
    if (ex.monte_carlo) {
        add(mc_pair_integrals(ex.orb1, ex.orb2, ex.kernel, ex.mc).modulate(ex.omega_tau));
    }
    return table;
}

Table transition_table(const RunConfig& cfg, std::string* summary) {
    const auto& tr = cfg.transition;
    const TransitionTable sweep =
        transition_sweep(tr.probe, tr.tau_grid.build(), cfg.thresholds, tr.J0);
    Table table{{"omega_tau", "F", "regime", "J_modulated", "splitting"}, {}};
    for (const auto& row : sweep.rows) {
        table.add_row({row.omega_tau, row.F, std::string(to_string(row.regime)), cell(row.J_modulated),
                       cell(row.splitting)});
    }
    if (summary) {
        *summary = sweep.crossover_tau
                       ? "crossover at omega_tau=1 (F=0.5), tau=" + format_number(*sweep.crossover_tau)
                       : "crossover omega_tau=1 lies outside the tau grid";
    }
    return table;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Viscoelastic response, shear dispersion and dynamically modulated exchange"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format;
    std::optional<std::uint64_t> seed;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"response", "frequency sweep of F, G(omega) and 1/eta(omega)"},
        {"maxwell", "time-domain Maxwell stress/strain integration"},
        {"dispersion", "shear-wave dispersion with the wavevector gap"},
        {"exchange", "direct and exchange integrals with pair energies"},
        {"transition", "regime sweep over relaxation time"},
    };
    for (const auto& [name, description] : commands) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("--config", config_path, "JSON config file")->required();
        sub->add_option("--out", out_path, "output file")->required();
        sub->add_option("--format", format, "csv or json (overrides config)")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", seed, "Monte Carlo seed (overrides config)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return exit_config;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        RunConfig cfg = parse_config(config_path);
        if (!format.empty()) {
            cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
        }
        if (seed) {
            cfg.exchange.mc.seed = *seed;
        }

        std::string summary;
        Table table;
        if (command == "response") {
            table = response_table(cfg);
        } else if (command == "maxwell") {
            table = maxwell_table(cfg);
        } else if (command == "dispersion") {
            table = dispersion_table(cfg);
        } else if (command == "exchange") {
            table = exchange_table(cfg);
        } else {
            table = transition_table(cfg, &summary);
        }
        require_finite(table);
        write_file(out_path, cfg.format == OutputFormat::json ? to_json(table) : to_csv(table));

        out << command << ": wrote " << table.rows.size() << " rows to " << out_path << '\n';
        if (!summary.empty()) {
            out << summary << '\n';
        }
        return exit_ok;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    }
}

}  // namespace viscoex::cli
