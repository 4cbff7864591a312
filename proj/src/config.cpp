#include "viscoex/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "viscoex/errors.hpp"
#include "viscoex/response.hpp"

namespace viscoex {

using nlohmann::json;

Eigen::VectorXd GridSpec::build() const {
    return log_spaced ? log_grid(min, max, count) : linear_grid(min, max, count);
}

namespace {

std::string join(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
}

// Typed access to one JSON object; every key must be consumed or it is rejected.
class ObjectReader {
public:
    ObjectReader(const json& node, std::string path) : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) {
            fail(path_.empty() ? "config" : path_, "expected an object");
        }
    }

    /// Rejects any key that was never looked up.
    void finish() const {
        for (const auto& [key, value] : node_.items()) {
            if (!seen_.contains(key)) {
                fail(join(path_, key), "unknown key");
            }
        }
    }

    bool has(const std::string& key) {
        seen_.insert(key);
        return node_.contains(key);
    }

    std::string path(const std::string& key) const { return join(path_, key); }

    const json& at(const std::string& key) {
        if (!has(key)) {
            fail(path(key), "required field is missing");
        }
        return node_.at(key);
    }

    double number(const std::string& key) {
        const json& v = at(key);
        if (!v.is_number()) {
            fail(path(key), "expected a number");
        }
        const double x = v.get<double>();
        if (!std::isfinite(x)) {
            fail(path(key), "must be finite");
        }
        return x;
    }

    double number(const std::string& key, double fallback) {
        return has(key) ? number(key) : fallback;
    }

    std::optional<double> optional_number(const std::string& key) {
        return has(key) ? std::optional<double>(number(key)) : std::nullopt;
    }

    std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json& v = at(key);
        if (!v.is_number_unsigned()) {
            fail(path(key), "expected a non-negative integer");
        }
        return v.get<std::uint64_t>();
    }

    bool boolean(const std::string& key, bool fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json& v = at(key);
        if (!v.is_boolean()) {
            fail(path(key), "expected true or false");
        }
        return v.get<bool>();
    }

    std::string string(const std::string& key, const std::string& fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json& v = at(key);
        if (!v.is_string()) {
            fail(path(key), "expected a string");
        }
        return v.get<std::string>();
    }

    [[noreturn]] static void fail(const std::string& field, const std::string& message) {
        throw ConfigError(field + ": " + message);
    }

private:
    const json& node_;
    std::string path_;
    std::set<std::string> seen_;
};

// Runs `check` and re-throws any ConfigError prefixed with `field`.
void validate_field(const std::string& field, const std::function<void()>& check) {
    try {
        check();
    } catch (const ConfigError& e) {
        ObjectReader::fail(field, e.what());
    }
}

void require_positive(ObjectReader& reader, const std::string& key, double value) {
    if (!(value > 0.0)) {
        ObjectReader::fail(reader.path(key), "must be > 0");
    }
}

template <typename Enum>
Enum choice(ObjectReader& reader, const std::string& key, const std::string& fallback,
            std::initializer_list<std::pair<const char*, Enum>> options) {
    const std::string value = reader.string(key, fallback);
    std::string allowed;
    for (const auto& [name, e] : options) {
        if (value == name) {
            return e;
        }
        allowed += allowed.empty() ? name : std::string("|") + name;
    }
    ObjectReader::fail(reader.path(key), "expected one of " + allowed + ", got \"" + value + "\"");
}

GridSpec read_range(ObjectReader& reader, const std::string& min_key, const std::string& max_key,
                    const GridSpec& fallback, bool allow_spacing) {
    GridSpec grid = fallback;
    grid.min = reader.number(min_key, grid.min);
    grid.max = reader.number(max_key, grid.max);
    grid.count = static_cast<Eigen::Index>(
        reader.unsigned_integer("count", static_cast<std::uint64_t>(grid.count)));
    if (allow_spacing) {
        grid.log_spaced = choice<bool>(reader, "spacing", grid.log_spaced ? "log" : "linear",
                                       {{"log", true}, {"linear", false}});
    }
    if (grid.count > 10'000'000) {
        ObjectReader::fail(reader.path("count"), "too many grid points");
    }
    validate_field(reader.path(min_key), [&] { grid.build(); });
    return grid;
}

Orbital read_orbital(const json& node, const std::string& path) {
    ObjectReader r(node, path);
    Orbital orb;
    orb.kind = choice<OrbitalKind>(r, "kind", "gaussian", {{"gaussian", OrbitalKind::gaussian}});
    orb.center = r.number("center", orb.center);
    orb.sigma = r.number("sigma", orb.sigma);
    require_positive(r, "sigma", orb.sigma);
    r.finish();
    return orb;
}

void read_exchange(const json& node, RunConfig::Exchange& ex, Tolerances& tol) {
    ObjectReader r(node, "exchange");
    if (r.has("orbitals")) {
        const json& orbitals = r.at("orbitals");
        if (!orbitals.is_array() || orbitals.size() != 2) {
            ObjectReader::fail("exchange.orbitals", "expected an array of two orbitals");
        }
        ex.orb1 = read_orbital(orbitals[0], "exchange.orbitals[0]");
        ex.orb2 = read_orbital(orbitals[1], "exchange.orbitals[1]");
    }
    if (r.has("kernel")) {
        ObjectReader k(r.at("kernel"), "exchange.kernel");
        ex.kernel.kind = choice<KernelKind>(
            k, "kind", "gaussian_well",
            {{"gaussian_well", KernelKind::gaussian_well}, {"soft_coulomb", KernelKind::soft_coulomb}});
        ex.kernel.strength = k.number("strength", ex.kernel.strength);
        ex.kernel.range = k.number("range", ex.kernel.range);
        require_positive(k, "range", ex.kernel.range);
        k.finish();
    }
    if (r.has("quadrature")) {
        ObjectReader q(r.at("quadrature"), "exchange.quadrature");
        ex.quadrature.nodes = static_cast<Eigen::Index>(
            q.unsigned_integer("nodes", static_cast<std::uint64_t>(ex.quadrature.nodes)));
        if (ex.quadrature.nodes < 32 || ex.quadrature.nodes > 20'000) {
            ObjectReader::fail(q.path("nodes"), "must be in [32, 20000]");
        }
        ex.quadrature.padding = q.number("padding", ex.quadrature.padding);
        require_positive(q, "padding", ex.quadrature.padding);
        q.finish();
    }
    if (r.has("monte_carlo")) {
        ObjectReader m(r.at("monte_carlo"), "exchange.monte_carlo");
        ex.monte_carlo = m.boolean("enabled", ex.monte_carlo);
        ex.mc.n_samples = m.unsigned_integer("n_samples", ex.mc.n_samples);
        if (ex.mc.n_samples < 1000) {
            ObjectReader::fail(m.path("n_samples"), "must be >= 1000");
        }
        ex.mc.seed = m.unsigned_integer("seed", ex.mc.seed);
        ex.mc.workers = static_cast<unsigned>(m.unsigned_integer("workers", ex.mc.workers));
        m.finish();
    }
    ex.omega_tau = r.number("omega_tau", ex.omega_tau);
    if (ex.omega_tau < 0.0) {
        ObjectReader::fail("exchange.omega_tau", "must be >= 0");
    }
    ex.quadrature.norm_tolerance = tol.orbital_norm;
    r.finish();
}

}  // namespace

RunConfig parse_config_text(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: malformed JSON: ") + e.what());
    }

    RunConfig cfg;
    ObjectReader r(root, "");

    const double eta0 = r.number("eta0");
    require_positive(r, "eta0", eta0);
    const double G0 = r.number("G0");
    require_positive(r, "G0", G0);
    const std::optional<double> rho = r.optional_number("rho");
    if (rho) {
        require_positive(r, "rho", *rho);
    }
    cfg.fluid = FluidParams(eta0, G0, rho);

    cfg.format = choice<OutputFormat>(r, "format", "csv",
                                      {{"csv", OutputFormat::csv}, {"json", OutputFormat::json}});

    if (r.has("thresholds")) {
        ObjectReader t(r.at("thresholds"), "thresholds");
        cfg.thresholds.active_max = t.number("active_max", cfg.thresholds.active_max);
        cfg.thresholds.inactive_min = t.number("inactive_min", cfg.thresholds.inactive_min);
        validate_field("thresholds", [&] { cfg.thresholds.validate(); });
        t.finish();
    }

    if (r.has("tolerances")) {
        ObjectReader t(r.at("tolerances"), "tolerances");
        cfg.tolerances.orbital_norm = t.number("orbital_norm", cfg.tolerances.orbital_norm);
        require_positive(t, "orbital_norm", cfg.tolerances.orbital_norm);
        cfg.tolerances.maxwell_residual =
            t.number("maxwell_residual", cfg.tolerances.maxwell_residual);
        require_positive(t, "maxwell_residual", cfg.tolerances.maxwell_residual);
        cfg.tolerances.max_dt_over_tau = t.number("max_dt_over_tau", cfg.tolerances.max_dt_over_tau);
        require_positive(t, "max_dt_over_tau", cfg.tolerances.max_dt_over_tau);
        t.finish();
    }

    if (r.has("response")) {
        ObjectReader g(r.at("response"), "response");
        cfg.response_grid =
            read_range(g, "omega_tau_min", "omega_tau_max", cfg.response_grid, false);
        g.finish();
    }

    if (r.has("maxwell")) {
        ObjectReader m(r.at("maxwell"), "maxwell");
        cfg.maxwell.mode = choice<MaxwellMode>(
            m, "mode", "strain", {{"stress", MaxwellMode::stress}, {"strain", MaxwellMode::strain}});
        if (m.has("drive")) {
            ObjectReader d(m.at("drive"), "maxwell.drive");
            DriveSignal& drive = cfg.maxwell.drive;
            drive.kind = choice<DriveKind>(d, "kind", "step",
                                           {{"step", DriveKind::step},
                                            {"constant", DriveKind::constant},
                                            {"sinusoid", DriveKind::sinusoid}});
            drive.amplitude = d.number("amplitude", drive.amplitude);
            drive.omega = d.number("omega", drive.omega);
            if (drive.omega < 0.0) {
                ObjectReader::fail(d.path("omega"), "must be >= 0");
            }
            drive.phase = d.number("phase", drive.phase);
            d.finish();
        }
        cfg.maxwell.dt = m.optional_number("dt");
        if (cfg.maxwell.dt) {
            require_positive(m, "dt", *cfg.maxwell.dt);
        }
        cfg.maxwell.horizon = m.optional_number("horizon");
        if (cfg.maxwell.horizon) {
            require_positive(m, "horizon", *cfg.maxwell.horizon);
        }
        m.finish();
    }

    if (r.has("dispersion")) {
        ObjectReader d(r.at("dispersion"), "dispersion");
        cfg.dispersion_grid = read_range(d, "k_min", "k_max", GridSpec{0.0, 1.0, 101, false}, true);
        if (cfg.dispersion_grid->min < 0.0) {
            ObjectReader::fail("dispersion.k_min", "must be >= 0");
        }
        d.finish();
    }

    if (r.has("exchange")) {
        read_exchange(r.at("exchange"), cfg.exchange, cfg.tolerances);
    }
    cfg.exchange.quadrature.norm_tolerance = cfg.tolerances.orbital_norm;

    if (r.has("transition")) {
        ObjectReader t(r.at("transition"), "transition");
        const auto omega = t.optional_number("omega");
        const auto t_obs = t.optional_number("t_obs");
        if (omega && t_obs) {
            ObjectReader::fail("transition", "give either omega or t_obs, not both");
        }
        if (omega) {
            require_positive(t, "omega", *omega);
            cfg.transition.probe = Probe::frequency(*omega);
        } else if (t_obs) {
            require_positive(t, "t_obs", *t_obs);
            cfg.transition.probe = Probe::observation_time(*t_obs);
        }
        cfg.transition.tau_grid = read_range(t, "tau_min", "tau_max", cfg.transition.tau_grid, false);
        cfg.transition.J0 = t.optional_number("J0");
        t.finish();
    }

    r.finish();
    return cfg;
}

RunConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path.string() + ": cannot open config file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

}  // namespace viscoex
