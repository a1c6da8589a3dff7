#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli/csv.hpp"
#include "nhq/bath_integrals.hpp"
#include "nhq/bloch.hpp"
#include "nhq/cli.hpp"
#include "nhq/dynamics.hpp"
#include "nhq/errors.hpp"
#include "nhq/info_measures.hpp"
#include "nhq/oracle.hpp"
#include "nhq/parallel.hpp"

namespace nhq::cli {

namespace {

using Row = std::vector<double>;

std::vector<std::string> class_columns(const RunConfig& cfg, std::string_view prefix) {
    std::vector<std::string> cols;
    for (SymmetryClass c : cfg.classes) cols.push_back(std::string(prefix) + "_" + std::string(short_name(c)));
    return cols;
}

void write_parameters(CsvWriter& csv, const RunConfig& cfg) {
    csv.comment("nhqubit " + std::string(command_name(cfg.command)));
    if (!cfg.preset.empty()) csv.comment("preset=" + cfg.preset);
    csv.comment("alpha", cfg.qubit.alpha);
    csv.comment("delta", cfg.qubit.delta);
    csv.comment("xi", cfg.qubit.xi);
    csv.comment("theta", cfg.qubit.theta);
    csv.comment("j0", cfg.bath.j0);
    csv.comment("mu", cfg.bath.mu);
    csv.comment("wc", cfg.bath.wc);
    csv.comment("beta", cfg.bath.beta);
    csv.comment("t_max", cfg.t_max);
    csv.comment("steps", static_cast<double>(cfg.steps));
    for (SymmetryClass c : cfg.classes) {
        csv.comment("omega0_" + std::string(short_name(c)), omega0(cfg.qubit.with_class(c)));
    }
}

// Rows of f(t) per selected class on a time grid, evaluated in parallel and emitted in t order.
template <class F>
std::vector<Row> tabulate(const RunConfig& cfg, const std::vector<double>& ts, F&& per_class) {
    return parallel_map(ts.size(), [&](std::size_t i) {
        Row row{ts[i]};
        for (SymmetryClass c : cfg.classes) per_class(cfg.qubit.with_class(c), ts[i], row);
        return row;
    });
}

void emit_rows(CsvWriter& csv, const std::vector<Row>& rows) {
    for (const auto& r : rows) csv.row(r);
}

void run_decoherence(const RunConfig& cfg, CsvWriter& csv) {
    const auto ts = uniform_grid(0.0, cfg.t_max, cfg.steps);
    BathIntegralCache bath(cfg.bath);
    write_parameters(csv, cfg);
    auto cols = class_columns(cfg, "D");
    cols.insert(cols.begin(), "t");
    csv.header(cols);
    emit_rows(csv, tabulate(cfg, ts, [&](const QubitSpec& q, double t, Row& row) {
                  row.push_back(decoherence_function(q, bath, t));
              }));
}

void run_entropy(const RunConfig& cfg, CsvWriter& csv) {
    const auto ts = uniform_grid(0.0, cfg.t_max, cfg.steps);
    BathIntegralCache bath(cfg.bath);
    write_parameters(csv, cfg);
    csv.comment("initial state: rho11 = rho22 = rho12 = 1/2, so v(t) = D(t)");
    auto cols = class_columns(cfg, "S");
    cols.insert(cols.begin(), "t");
    csv.header(cols);
    emit_rows(csv, tabulate(cfg, ts, [&](const QubitSpec& q, double t, Row& row) {
                  row.push_back(von_neumann_entropy(bloch_length(q, bath, t)));
              }));
}

void run_renyi(const RunConfig& cfg, CsvWriter& csv) {
    BathIntegralCache bath(cfg.bath);
    write_parameters(csv, cfg);
    csv.comment("initial state: rho11 = rho22 = rho12 = 1/2, so v(t) = D(t)");
    if (cfg.ratio_at) {
        const double t = *cfg.ratio_at;
        csv.comment("ratio_at", t);
        csv.comment("columns: S_r(t) / S(t) as a function of the Renyi order r");
        std::vector<double> v;
        for (SymmetryClass c : cfg.classes) v.push_back(bloch_length(cfg.qubit.with_class(c), bath, t));
        auto cols = class_columns(cfg, "ratio");
        cols.insert(cols.begin(), "r");
        csv.header(cols);
        for (double r : uniform_grid(0.1, 5.0, cfg.steps)) {
            Row row{r};
            for (double vi : v) row.push_back(renyi_entropy(vi, r) / von_neumann_entropy(vi));
            csv.row(row);
        }
        return;
    }
    csv.comment("r", cfg.r);
    const auto ts = uniform_grid(0.0, cfg.t_max, cfg.steps);
    auto cols = class_columns(cfg, "S_r");
    cols.insert(cols.begin(), "t");
    csv.header(cols);
    emit_rows(csv, tabulate(cfg, ts, [&](const QubitSpec& q, double t, Row& row) {
                  row.push_back(renyi_entropy(bloch_length(q, bath, t), cfg.r));
              }));
}

std::vector<FisherSummary> summarize_fisher(const RunConfig& cfg, FisherParameter p, BathIntegralCache& bath) {
    const FisherSummaryOptions opts;
    bath.register_grid(fisher_summary_nodes(opts));
    std::vector<FisherSummary> out;
    for (SymmetryClass c : cfg.classes) {
        const QubitSpec q = cfg.qubit.with_class(c);
        out.push_back(fisher_summary([&](double t) { return fisher_information(p, q, bath, t); }, opts));
    }
    return out;
}

void run_fisher(const RunConfig& cfg, CsvWriter& csv) {
    const auto ts = uniform_grid(cfg.t_max / static_cast<double>(cfg.steps), cfg.t_max, cfg.steps);
    BathIntegralCache bath(cfg.bath);
    write_parameters(csv, cfg);
    csv.comment("fisher_param=" + std::string(fisher_parameter_name(cfg.fisher_param)));
    auto cols = class_columns(cfg, "S_f");
    cols.insert(cols.begin(), "t");
    csv.header(cols);
    emit_rows(csv, tabulate(cfg, ts, [&](const QubitSpec& q, double t, Row& row) {
                  row.push_back(fisher_information(cfg.fisher_param, q, bath, t));
              }));
    if (cfg.summary) {
        const auto s = summarize_fisher(cfg, cfg.fisher_param, bath);
        Row mx, am, ar;
        for (const auto& x : s) {
            mx.push_back(x.s_max);
            am.push_back(x.t_max);
            ar.push_back(x.area);
        }
        csv.row("max", mx);
        csv.row("argmax", am);
        csv.row("area", ar);
    }
}

void run_bloch(const RunConfig& cfg, CsvWriter& csv) {
    const auto ts = uniform_grid(0.0, cfg.t_max, cfg.steps);
    BathIntegralCache bath(cfg.bath);
    const TrajectoryParams tp{cfg.theta0, cfg.phi0};
    tp.validate();
    write_parameters(csv, cfg);
    csv.comment("theta0", cfg.theta0);
    csv.comment("phi0", cfg.phi0);
    csv.comment("omega_ang = d phi/dt (counterclockwise seen from +z is positive)");
    csv.comment("omega_cw = -(d phi/dt)/(2 omega0) (clockwise positive, 1 at t = 0)");
    std::vector<std::string> cols{"t"};
    for (SymmetryClass c : cfg.classes) {
        const std::string s(short_name(c));
        for (const char* name : {"sx", "sy", "sz", "d", "omega_ang", "omega_cw", "v_lin"}) {
            cols.push_back(std::string(name) + "_" + s);
        }
    }
    csv.header(cols);
    emit_rows(csv, tabulate(cfg, ts, [&](const QubitSpec& q, double t, Row& row) {
                  const BlochState s = spin_vector(q, bath, tp, t);
                  const double d = axis_distance(q, bath, tp, t);
                  const double w = angular_velocity(q, bath, t);
                  row.insert(row.end(), {s.sx, s.sy, s.sz, d, w, -w / (2.0 * omega0(q)), d * w});
              }));
}

void run_table(const RunConfig& cfg, CsvWriter& csv, std::ostream& text) {
    BathIntegralCache bath(cfg.bath);
    const FisherParameter params[] = {FisherParameter::Beta, FisherParameter::Omega0};
    std::vector<std::vector<FisherSummary>> results;
    for (FisherParameter p : params) results.push_back(summarize_fisher(cfg, p, bath));

    char line[160];
    text << "Fisher information: maximum, time of maximum and area (t from 0 to the horizon)\n";
    std::snprintf(line, sizeof line, "%-6s %-9s %14s %14s %14s %9s\n", "class", "parameter", "S_f^max", "t^max",
                  "S_f^area", "horizon");
    text << line;
    for (std::size_t ci = 0; ci < cfg.classes.size(); ++ci) {
        for (std::size_t pi = 0; pi < 2; ++pi) {
            const FisherSummary& s = results[pi][ci];
            std::snprintf(line, sizeof line, "%-6s %-9s %14.6f %14.6f %14.6f %9g\n",
                          std::string(short_name(cfg.classes[ci])).c_str(),
                          std::string(fisher_parameter_name(params[pi])).c_str(), s.s_max, s.t_max, s.area,
                          s.horizon);
            text << line;
        }
    }

    write_parameters(csv, cfg);
    csv.header({"class", "parameter", "s_max", "t_max", "area"});
    for (std::size_t ci = 0; ci < cfg.classes.size(); ++ci) {
        for (std::size_t pi = 0; pi < 2; ++pi) {
            const FisherSummary& s = results[pi][ci];
            csv.row(std::string(short_name(cfg.classes[ci])) + "," + std::string(fisher_parameter_name(params[pi])),
                    {s.s_max, s.t_max, s.area});
        }
    }
}

struct Check {
    std::string name;
    double measured;
    double limit;
    bool pass() const { return measured < limit; }
};

int run_verify(const RunConfig& cfg, std::ostream& text) {
    std::vector<Check> checks;
    const QubitSpec apt{SymmetryClass::AntiPTSymmetric, 1.0, 0.5, 0.8, 0.6};

    {
        const auto r = oracle::compare_qubit_nonhermitian(apt, InitialState::equal_superposition().density(), 1.0, 10000);
        checks.push_back({"liouville: RK4 vs normalized expm, anti-PT, t=1", r.max_discrepancy, 1e-8});
    }
    {
        const auto db = oracle::single_mode(1.0, 0.3, 0.5, 24);
        double worst = 0.0;
        for (double t : {0.5, 1.0, 1.5, 2.0, 3.0}) {
            worst = std::max(worst, std::abs(oracle::discrete_dephasing_fock(db, apt, t) -
                                             oracle::discrete_dephasing_exact(db, apt, t)));
        }
        checks.push_back({"fock: single mode h^D vs discrete closed form, 5 times", worst, 1e-5});
    }
    {
        const auto db = oracle::sampled_bath(cfg.bath, 200, 20.0 * cfg.bath.wc);
        BathIntegralCache bath(cfg.bath);
        const double w2 = omega0(apt) * omega0(apt);
        double worst = 0.0;
        for (double t : uniform_grid(0.0, 3.0, 31)) {
            const double discrete = std::exp(-w2 * oracle::discrete_gamma(db, t));
            const double continuum = std::exp(-w2 * bath.gamma(t));
            worst = std::max(worst, std::abs(discrete / continuum - 1.0));
        }
        checks.push_back({"continuum: 200 sampled modes vs exp(-w0^2 gamma), t in [0,3]", worst, 1e-3});
    }
    {
        const QubitSpec q{SymmetryClass::AntiPTSymmetric, 1.0, 0.5, 0.8, 0.3};
        const auto db = oracle::single_mode(1.0, 0.3, 0.5, 24);
        checks.push_back({"dyson: eta rho^D eta^dag vs h evolution, theta=0.3, t=0.5",
                          oracle::verify_dyson_density_map(db, q, 0.5), 1e-4});
    }

    bool ok = true;
    char line[200];
    for (const auto& c : checks) {
        std::snprintf(line, sizeof line, "%-4s %-64s measured %.3e  limit %.1e\n", c.pass() ? "PASS" : "FAIL",
                      c.name.c_str(), c.measured, c.limit);
        text << line;
        ok = ok && c.pass();
    }
    return ok ? 0 : 3;
}

int execute(const RunConfig& cfg, std::ostream& out) {
    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) throw ConfigError("--out", "cannot open '" + cfg.out_path + "' for writing");
    }
    std::ostream& sink = cfg.out_path.empty() ? out : file;
    CsvWriter csv(sink);
    switch (cfg.command) {
        case Command::Decoherence: run_decoherence(cfg, csv); break;
        case Command::Entropy: run_entropy(cfg, csv); break;
        case Command::Renyi: run_renyi(cfg, csv); break;
        case Command::Fisher: run_fisher(cfg, csv); break;
        case Command::Bloch: run_bloch(cfg, csv); break;
        case Command::Table: {
            if (cfg.out_path.empty()) {
                std::ostringstream buffer;
                CsvWriter table_csv(buffer);
                run_table(cfg, table_csv, out);
                out << '\n' << buffer.str();
            } else {
                run_table(cfg, csv, out);
            }
            break;
        }
        case Command::Verify: return run_verify(cfg, out);
    }
    sink.flush();
    if (!sink) throw Error("failed writing output");
    return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
        return execute(config, out);
    } catch (const ConfigError& e) {
        err << "nhqubit: invalid configuration: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        err << "nhqubit: invalid configuration: " << e.what() << '\n';
        return 1;
    } catch (const DegenerateGap& e) {
        err << "nhqubit: invalid configuration: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "nhqubit: numerical failure: " << e.what() << '\n';
        return 2;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::optional<RunConfig> cfg;
    try {
        cfg = parse_args(argc, argv, out);
    } catch (const Error& e) {
        err << "nhqubit: invalid configuration: " << e.what() << '\n';
        return 1;
    }
    if (!cfg) return 0;
    return run(*cfg, out, err);
}

}  // namespace nhq::cli
