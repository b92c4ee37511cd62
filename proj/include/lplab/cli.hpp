#pragma once

#include <lplab/basis.hpp>
#include <lplab/difference.hpp>
#include <lplab/least_squares.hpp>
#include <lplab/signal.hpp>

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lplab::cli {

using Report = nlohmann::ordered_json;

inline constexpr std::string_view schema_version = "1";

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_data_error = 2;
inline constexpr int exit_numeric_failure = 3;
inline constexpr int exit_internal_error = 4;

int exit_code_for(ErrorKind kind);

// ---- signal files -------------------------------------------------------------------
// One finite decimal per line, optional leading "value" header, blank lines ignored.

Signal read_signal_csv(std::istream& in);
Signal read_signal_file(const std::string& path);
void write_signal_csv(std::ostream& out, const Signal& signal);

/// Shortest decimal that round-trips to the same double; -0 prints as 0.
std::string format_number(double value);

/// Parses a real number, also accepting multiples of pi such as "pi/4", "-3*pi/2", "2pi".
double parse_scalar(std::string_view token, int line);

// ---- synth spec ---------------------------------------------------------------------
// key = value lines. Either
//   a = 2, -1
//   initial = 0, 1
// or
//   bases = 1 0 0; 1 0 1        (rho theta power; ...)
//   weights = 3 0; 2 0          (b c; ... one pair per basis)

struct SynthSpec {
  std::optional<LpModel> model;
  std::optional<WeightedExpansion> expansion;
};

SynthSpec parse_synth_spec(std::istream& in);
Signal run_synth(const SynthSpec& spec, Index count);

// ---- experiment config --------------------------------------------------------------
//   function = sin | cos | exp | linear | poly
//   coefficients = c0, c1, ...     (poly only: c0 + c1 x + c2 x^2 + ...)
//   interval = 0, 2*pi             (required for refine; order-sweep defaults to x = 0..N-1)
//   p = 2                          (refine: one order; order-sweep: list or range like 2..5)
//   n = 32, 64, 128                (refine: list; order-sweep: one length)

struct ExperimentConfig {
  std::string function;
  std::vector<double> coefficients;
  std::optional<std::pair<double, double>> interval;
  std::vector<Index> orders;
  std::vector<Index> sample_counts;
};

ExperimentConfig parse_experiment_config(std::istream& in);
Sampler builtin_function(const ExperimentConfig& config);

// ---- reports ------------------------------------------------------------------------

Report fit_report(const Signal& signal, Index order, FitMethod method, const std::string& input);
Report construct_report(const Signal& signal, std::string_view method, Index p,
                        const std::string& input);
Report experiment_report(std::string_view kind, const ExperimentConfig& config,
                         const std::string& config_path);

/// Throws InternalInvariant unless `report` matches schema version 1.
void validate_report(const Report& report);
std::string render_report(const Report& report);

/// Entry point of the lp-lab executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lplab::cli
