#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "nhq/cli.hpp"
#include "nhq/errors.hpp"

namespace nhq::cli {

namespace {

struct NamedPreset {
    std::string_view name;
    Preset values;
};

// Named parameter sets. j0 = wc = 1, mu = -0.5 throughout.
const NamedPreset kPresets[] = {
    {"fig1", {1.0, 0.56, 0.81, 0.86, 1.0, -0.5, 1.0, 0.5, std::nullopt}},
    {"fig2", {1.0, 0.56, 0.81, 0.86, 1.0, -0.5, 1.0, 0.5, std::nullopt}},
    {"fig3", {0.3, 0.2, 0.12, 0.05, 1.0, -0.5, 1.0, 0.5, std::nullopt}},
    {"fig4", {1.0, 0.5, 0.8, 0.6, 1.0, -0.5, 1.0, 0.5, std::nullopt}},
    {"fig5", {0.5, 0.217, 0.45, 0.488, 1.0, -0.5, 1.0, 0.5, std::nullopt}},
    {"fig6", {0.9, 0.38, 0.8, 0.6, 1.0, -0.5, 1.0, 0.5, 3.0 * std::numbers::pi / 8.0}},
    {"fig56", {0.9, 0.38, 0.8, 0.6, 1.0, -0.5, 1.0, 0.5, 3.0 * std::numbers::pi / 8.0}},
    {"table1", {1.0, 0.5, 0.8, 0.6, 1.0, -0.5, 1.0, 0.5, std::nullopt}},
};

const std::pair<std::string_view, Command> kCommands[] = {
    {"decoherence", Command::Decoherence}, {"entropy", Command::Entropy}, {"renyi", Command::Renyi},
    {"fisher", Command::Fisher},           {"bloch", Command::Bloch},     {"table", Command::Table},
    {"verify", Command::Verify},
};

void require(bool ok, const char* field, const std::string& message) {
    if (!ok) throw ConfigError(field, message);
}

void require_finite(double v, const char* field) { require(std::isfinite(v), field, "must be a finite number"); }

// CLI11 names the option in most messages; keep the first "--flag" token as the field.
std::string field_of(const std::string& message) {
    const auto pos = message.find("--");
    if (pos == std::string::npos) return "arguments";
    const auto end = message.find_first_of(" :,'\"", pos);
    return message.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
}

}  // namespace

std::string_view command_name(Command c) noexcept {
    for (const auto& [name, cmd] : kCommands) {
        if (cmd == c) return name;
    }
    return "?";
}

Preset preset(std::string_view name) {
    for (const auto& p : kPresets) {
        if (p.name == name) return p.values;
    }
    throw ConfigError("--params-preset", "unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& p : kPresets) names.emplace_back(p.name);
    return names;
}

void RunConfig::validate() const {
    require_finite(qubit.alpha, "--alpha");
    require_finite(qubit.delta, "--delta");
    require_finite(qubit.xi, "--xi");
    require_finite(qubit.theta, "--theta");
    require(std::isfinite(bath.j0) && bath.j0 > 0.0, "--j0", "must be > 0");
    require(std::isfinite(bath.mu) && bath.mu > -1.0, "--mu", "must be > -1");
    require(std::isfinite(bath.wc) && bath.wc > 0.0, "--wc", "must be > 0");
    require(std::isfinite(bath.beta) && bath.beta > 0.0, "--beta", "must be > 0");
    require(std::isfinite(t_max) && t_max > 0.0, "--t-max", "must be > 0");
    require(steps >= 2, "--steps", "must be >= 2");
    require(std::isfinite(r) && r > 0.0, "--r", "must be > 0");
    require(std::isfinite(theta0) && theta0 >= 0.0 && theta0 <= std::numbers::pi, "--theta0", "must lie in [0, pi]");
    require_finite(phi0, "--phi0");
    if (ratio_at) require(std::isfinite(*ratio_at) && *ratio_at > 0.0, "--ratio-at", "must be > 0");
    require(!classes.empty(), "--class", "at least one class is required");
    for (SymmetryClass c : classes) {
        try {
            qubit.with_class(c).validate();
        } catch (const DegenerateGap& e) {
            throw ConfigError("--class", e.what());
        }
    }
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Dephasing dynamics, entropies, Fisher information and Bloch kinematics of Hermitian, "
                 "PT-symmetric and anti-PT-symmetric qubits in a bosonic bath.",
                 "nhqubit"};
    std::string command;
    std::vector<std::string> classes;
    std::string preset_name;
    std::string fisher_param = "beta";
    RunConfig cfg;

    std::vector<std::string> command_names;
    for (const auto& [name, cmd] : kCommands) command_names.emplace_back(name);
    app.add_option("command", command, "decoherence | entropy | renyi | fisher | bloch | table | verify")
        ->required()
        ->check(CLI::IsMember(command_names));
    app.add_option("--class", classes, "H, PT or APT; repeatable (default: all three)")
        ->allow_extra_args(false)
        ->check(CLI::IsMember({"H", "PT", "APT"}));
    app.add_option("--params-preset", preset_name, "named parameter set")->check(CLI::IsMember(preset_names()));

    double alpha = 0, delta = 0, xi = 0, theta = 0, j0 = 0, wc = 0, mu = 0, beta = 0, theta0 = 0, ratio_at = 0;
    auto* o_alpha = app.add_option("--alpha", alpha);
    auto* o_delta = app.add_option("--delta", delta);
    auto* o_xi = app.add_option("--xi", xi);
    auto* o_theta = app.add_option("--theta", theta);
    auto* o_j0 = app.add_option("--j0", j0);
    auto* o_wc = app.add_option("--wc", wc);
    auto* o_mu = app.add_option("--mu", mu);
    auto* o_beta = app.add_option("--beta", beta);
    app.add_option("--t-max", cfg.t_max, "end of the time grid (default 5)");
    app.add_option("--steps", cfg.steps, "number of grid points (default 400)");
    app.add_option("--r", cfg.r, "Renyi order (default 2)");
    app.add_option("--fisher-param", fisher_param, "beta or omega0")->check(CLI::IsMember({"beta", "omega0"}));
    auto* o_theta0 = app.add_option("--theta0", theta0, "initial polar angle (default pi/2)");
    app.add_option("--phi0", cfg.phi0, "initial azimuth (default 0)");
    app.add_option("--out", cfg.out_path, "CSV output file (default: standard output)");
    app.add_flag("--summary", cfg.summary, "fisher: append max/argmax/area rows");
    auto* o_ratio = app.add_option("--ratio-at", ratio_at, "renyi: emit the r sweep of S_r/S at this time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw ConfigError(field_of(e.what()), e.what());
    }

    for (const auto& [name, cmd] : kCommands) {
        if (name == command) cfg.command = cmd;
    }
    if (preset_name.empty() && cfg.command == Command::Table) preset_name = "table1";
    if (!preset_name.empty()) {
        const Preset p = preset(preset_name);
        cfg.preset = preset_name;
        cfg.qubit.alpha = p.alpha;
        cfg.qubit.delta = p.delta;
        cfg.qubit.xi = p.xi;
        cfg.qubit.theta = p.theta;
        cfg.bath = {p.j0, p.mu, p.wc, p.beta};
        if (p.theta0) cfg.theta0 = *p.theta0;
    }
    if (o_alpha->count()) cfg.qubit.alpha = alpha;
    if (o_delta->count()) cfg.qubit.delta = delta;
    if (o_xi->count()) cfg.qubit.xi = xi;
    if (o_theta->count()) cfg.qubit.theta = theta;
    if (o_j0->count()) cfg.bath.j0 = j0;
    if (o_wc->count()) cfg.bath.wc = wc;
    if (o_mu->count()) cfg.bath.mu = mu;
    if (o_beta->count()) cfg.bath.beta = beta;
    if (o_theta0->count()) cfg.theta0 = theta0;
    if (o_ratio->count()) cfg.ratio_at = ratio_at;
    cfg.fisher_param = parse_fisher_parameter(fisher_param);
    if (!classes.empty()) {
        cfg.classes.clear();
        for (const auto& c : classes) {
            const SymmetryClass sc = parse_symmetry_class(c);
            if (std::find(cfg.classes.begin(), cfg.classes.end(), sc) == cfg.classes.end()) cfg.classes.push_back(sc);
        }
    }
    cfg.validate();
    return cfg;
}

}  // namespace nhq::cli
