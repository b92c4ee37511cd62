#include <lplab/cli.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace lplab::cli {

namespace {

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open output file '" + output + "'");
  file << text;
}

std::ifstream open_input(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument(std::string("cannot open ") + what + " '" + path + "'");
  return in;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"lp-lab: linear prediction through interpolation bases"};
  app.name("lp-lab");
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string method;
  std::string config;
  std::string kind;
  Index count = 0;
  Index order = 0;

  auto* synth = app.add_subcommand("synth", "generate a signal from a recurrence or a basis expansion");
  synth->add_option("--input", input, "spec file (a/initial or bases/weights)")->required();
  synth->add_option("--count", count, "number of samples")->required();
  synth->add_option("--output", output, "CSV output file (default stdout)");

  auto* fit = app.add_subcommand("fit", "least-squares LP fit and interpolation-basis recovery");
  fit->add_option("--input", input, "CSV signal file")->required();
  fit->add_option("-p,--order", order, "LP order")->required();
  fit->add_option("--method", method, "covariance (default) or autocorrelation")->default_val("covariance");
  fit->add_option("--output", output, "report file (default stdout)");

  auto* construct = app.add_subcommand("construct", "build an LP from DCT-1 or difference operators");
  construct->add_option("--input", input, "CSV signal file")->required();
  construct->add_option("--method", method, "dct or diff")->required();
  construct->add_option("-p,--order", order, "number of cosine bases (dct) or LP order (diff)")->required();
  construct->add_option("--output", output, "report file (default stdout)");

  auto* experiment = app.add_subcommand("experiment", "sampling-refinement or order-sweep tables");
  experiment->add_option("kind", kind, "refine or order-sweep")->required();
  experiment->add_option("--config", config, "experiment config file")->required();
  experiment->add_option("--output", output, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_data_error;
  }

  try {
    if (*synth) {
      std::ifstream in = open_input(input, "spec file");
      const SynthSpec spec = parse_synth_spec(in);
      std::ostringstream csv;
      write_signal_csv(csv, run_synth(spec, count));
      emit(csv.str(), output, out);
    } else if (*fit) {
      const Signal signal = read_signal_file(input);
      emit(render_report(fit_report(signal, order, parse_fit_method(method), input)), output, out);
    } else if (*construct) {
      const Signal signal = read_signal_file(input);
      emit(render_report(construct_report(signal, method, order, input)), output, out);
    } else if (*experiment) {
      std::ifstream in = open_input(config, "config file");
      const ExperimentConfig parsed = parse_experiment_config(in);
      emit(render_report(experiment_report(kind, parsed, config)), output, out);
    }
  } catch (const Error& e) {
    err << "lp-lab: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "lp-lab: internal error: " << e.what() << '\n';
    return exit_internal_error;
  }
  return exit_ok;
}

}  // namespace lplab::cli
