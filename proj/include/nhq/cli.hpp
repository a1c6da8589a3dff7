// cli.hpp — run configuration, flag parsing and command dispatch of the nhqubit tool

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nhq/info_measures.hpp"
#include "nhq/model.hpp"

namespace nhq::cli {

enum class Command { Decoherence, Entropy, Renyi, Fisher, Bloch, Table, Verify };

std::string_view command_name(Command c) noexcept;

struct RunConfig {
    Command command{Command::Decoherence};
    std::string preset;  // empty when none was given
    QubitSpec qubit{SymmetryClass::Hermitian, 1.0, 0.56, 0.81, 0.86};
    BathSpec bath{1.0, -0.5, 1.0, 0.5};
    double t_max{5.0};
    std::size_t steps{400};
    double r{2.0};
    FisherParameter fisher_param{FisherParameter::Beta};
    double theta0{1.5707963267948966};
    double phi0{0.0};
    std::string out_path;  // empty: standard output
    bool summary{false};
    std::optional<double> ratio_at;
    std::vector<SymmetryClass> classes{kAllClasses.begin(), kAllClasses.end()};

    /// Throws ConfigError naming the first offending field.
    void validate() const;
};

/// Parameter values of a named preset: fig1 ... fig6, fig56 (= fig6), table1 (= fig4).
struct Preset {
    double alpha, delta, xi, theta, j0, mu, wc, beta;
    std::optional<double> theta0;  // fig6 only
};

/// Throws ConfigError("--params-preset", ...) for unknown names.
Preset preset(std::string_view name);
std::vector<std::string> preset_names();

/// Parses argv (argv[0] is the program name). Explicit flags override the
/// preset, which overrides the built-in defaults. Throws ConfigError.
/// Returns std::nullopt when --help was handled (text written to `out`).
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Executes the command. Exit codes: 0 success, 1 invalid configuration,
/// 2 numerical failure, 3 verification failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the same exit-code mapping.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nhq::cli
