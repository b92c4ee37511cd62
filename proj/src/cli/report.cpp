#include <lplab/cli.hpp>
#include <lplab/dct.hpp>
#include <lplab/difference.hpp>
#include <lplab/least_squares.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lplab::cli {

namespace {

using Json = nlohmann::ordered_json;

double clean(double x) { return x == 0.0 ? 0.0 : x; }

Json number_list(const Eigen::Ref<const Eigen::VectorXd>& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(clean(v[i]));
  return out;
}

Json index_list(const std::vector<Index>& v) {
  Json out = Json::array();
  for (Index i : v) out.push_back(i);
  return out;
}

Json optional_number(double x) { return std::isfinite(x) ? Json(clean(x)) : Json(nullptr); }

Json basis_entry(const BasisTerm& basis, double b, double c) {
  Json entry = Json::object();
  entry["rho"] = clean(basis.rho());
  entry["theta"] = clean(basis.theta());
  entry["power"] = basis.power();
  entry["b"] = clean(b);
  entry["c"] = clean(c);
  return entry;
}

Json header(std::string_view command, Json inputs) {
  Json report = Json::object();
  report["schema_version"] = std::string(schema_version);
  report["command"] = std::string(command);
  report["inputs"] = std::move(inputs);
  return report;
}

void require_within_bound(double mse, double bound) {
  if (!(mse <= bound + 1e-12 * (1.0 + bound))) {
    throw InternalInvariant("approximation error " + format_number(mse) +
                            " exceeds its stated bound " + format_number(bound));
  }
}

// Recursive walk: every number finite.
void require_finite_numbers(const Json& node, const std::string& path) {
  if (node.is_number_float() && !std::isfinite(node.get<double>())) {
    throw InternalInvariant("report field " + path + " is not finite");
  }
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) require_finite_numbers(value, path + "." + key);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      require_finite_numbers(node[i], path + "[" + std::to_string(i) + "]");
    }
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InternalInvariant("report does not match schema: " + what);
}

bool is_number_list(const Json& node) {
  if (!node.is_array()) return false;
  for (const auto& x : node) {
    if (!x.is_number()) return false;
  }
  return true;
}

}  // namespace

Report fit_report(const Signal& signal, Index order, FitMethod method, const std::string& input) {
  Json inputs = Json::object();
  inputs["input"] = input;
  inputs["samples"] = signal.size();
  inputs["order"] = order;
  inputs["method"] = std::string(to_string(method));

  const BasisIdentification id = identify_bases(signal, order, method);
  Json report = header("fit", std::move(inputs));
  report["coefficients"] = number_list(id.fit.coefficients.weights());
  Json bases = Json::array();
  for (const WeightedTerm& t : id.expansion.terms()) bases.push_back(basis_entry(t.basis, t.b, t.c));
  report["bases"] = std::move(bases);
  report["mse"] = clean(id.report.mse);

  Json diagnostics = Json::object();
  diagnostics["rank"] = id.fit.diagnostics.rank;
  diagnostics["condition_estimate"] = optional_number(id.fit.diagnostics.condition_estimate);
  diagnostics["residual_mse"] = clean(id.fit.diagnostics.residual_mse);
  diagnostics["weight_condition"] = optional_number(id.weight_condition);
  report["diagnostics"] = std::move(diagnostics);
  validate_report(report);
  return report;
}

Report construct_report(const Signal& signal, std::string_view method, Index p,
                        const std::string& input) {
  Json inputs = Json::object();
  inputs["input"] = input;
  inputs["samples"] = signal.size();
  inputs["method"] = std::string(method);
  inputs["p"] = p;

  Json report = header("construct", std::move(inputs));
  if (method == "dct") {
    const Dct1Coefficients coeffs = dct1_forward(signal);
    const SelectionResult selection = select_top_p(coeffs, p);
    const DctConstruction built = construct_dct_lp(signal, p);
    report["coefficients"] = number_list(built.model.coefficients().weights());
    report["initial"] = number_list(built.model.initial());
    Json bases = Json::array();
    for (std::size_t i = 0; i < selection.selected.size(); ++i) {
      bases.push_back(basis_entry(built.bases[i], coeffs[selection.selected[i]], 0.0));
    }
    report["bases"] = std::move(bases);
    report["mse"] = clean(built.report.mse);
    report["bound"] = clean(*built.report.bound);
    Json diagnostics = Json::object();
    diagnostics["lp_order"] = built.model.order();
    diagnostics["nonzero_count"] = count_nonzero(coeffs);
    diagnostics["selected"] = index_list(selection.selected);
    diagnostics["rejected"] = index_list(selection.rejected);
    report["diagnostics"] = std::move(diagnostics);
    require_within_bound(built.report.mse, *built.report.bound);
  } else if (method == "diff") {
    const DiffConstruction built = construct_diff_lp(signal, p);
    report["coefficients"] = number_list(built.model.coefficients().weights());
    report["initial"] = number_list(built.model.initial());
    report["mse"] = clean(built.report.mse);
    report["bound"] = clean(built.bound.bound);
    Json diagnostics = Json::object();
    diagnostics["lp_order"] = built.model.order();
    diagnostics["lambda"] = built.bound.lambda;
    diagnostics["omega"] = clean(built.bound.omega);
    diagnostics["max_abs_diff"] = clean(built.bound.max_abs_diff);
    report["diagnostics"] = std::move(diagnostics);
    require_within_bound(built.report.mse, built.bound.bound);
  } else {
    throw InvalidArgument("unknown construction method '" + std::string(method) +
                          "' (expected dct or diff)");
  }
  validate_report(report);
  return report;
}

Report experiment_report(std::string_view kind, const ExperimentConfig& config,
                         const std::string& config_path) {
  const Sampler fn = builtin_function(config);
  Json inputs = Json::object();
  inputs["config"] = config_path;
  inputs["kind"] = std::string(kind);
  inputs["function"] = config.function;
  if (!config.coefficients.empty()) {
    inputs["coefficients"] = number_list(Eigen::Map<const Eigen::VectorXd>(
        config.coefficients.data(), static_cast<Index>(config.coefficients.size())));
  }
  if (config.interval) inputs["interval"] = Json::array({clean(config.interval->first), clean(config.interval->second)});

  Json tables = Json::array();
  if (kind == "refine") {
    if (!config.interval) throw InvalidArgument("refine: config needs 'interval'");
    if (config.orders.size() != 1) throw InvalidArgument("refine: config needs exactly one order 'p'");
    if (config.sample_counts.empty()) throw InvalidArgument("refine: config needs sample counts 'n'");
    inputs["p"] = config.orders.front();
    inputs["n"] = index_list(config.sample_counts);
    const auto rows = refinement_experiment(fn, config.interval->first, config.interval->second,
                                            config.orders.front(), config.sample_counts);
    for (const RefinementRow& row : rows) {
      Json r = Json::object();
      r["N"] = row.samples;
      r["mse"] = clean(row.mse);
      r["max_abs_diff"] = clean(row.max_abs_diff);
      r["bound"] = clean(row.bound);
      tables.push_back(std::move(r));
    }
  } else if (kind == "order-sweep") {
    if (config.sample_counts.size() != 1) throw InvalidArgument("order-sweep: config needs exactly one length 'n'");
    if (config.orders.empty()) throw InvalidArgument("order-sweep: config needs orders 'p'");
    const Index n = config.sample_counts.front();
    inputs["p"] = index_list(config.orders);
    inputs["n"] = n;
    Signal signal = [&] {
      if (config.interval) return sample_uniform(fn, config.interval->first, config.interval->second, n);
      if (n < 1) throw InvalidArgument("order-sweep: length must be positive");
      Eigen::VectorXd f(n);
      for (Index i = 0; i < n; ++i) f[i] = fn(static_cast<double>(i));
      return Signal(std::move(f), Grid{0.0, 1.0});
    }();
    for (const OrderSweepRow& row : order_sweep(signal, config.orders)) {
      Json r = Json::object();
      r["p"] = row.order;
      r["mse"] = clean(row.mse);
      tables.push_back(std::move(r));
    }
  } else {
    throw InvalidArgument("unknown experiment '" + std::string(kind) +
                          "' (expected refine or order-sweep)");
  }
  Json report = header("experiment", std::move(inputs));
  report["tables"] = std::move(tables);
  validate_report(report);
  return report;
}

void validate_report(const Report& report) {
  require(report.is_object(), "top level must be an object");
  require(report.contains("schema_version") && report["schema_version"] == std::string(schema_version),
          "schema_version must be \"1\"");
  require(report.contains("command") && report["command"].is_string(), "command must be a string");
  const std::string command = report["command"];
  require(command == "fit" || command == "construct" || command == "experiment",
          "unknown command '" + command + "'");
  require(report.contains("inputs") && report["inputs"].is_object(), "inputs must be an object");

  static const char* const known[] = {"schema_version", "command", "inputs", "coefficients", "initial",
                                      "bases", "mse", "bound", "diagnostics", "tables"};
  for (const auto& [key, _] : report.items()) {
    require(std::find(std::begin(known), std::end(known), key) != std::end(known),
            "unexpected field '" + key + "'");
  }
  for (const char* key : {"coefficients", "initial"}) {
    if (report.contains(key)) require(is_number_list(report[key]), std::string(key) + " must be a number list");
  }
  if (report.contains("bases")) {
    require(report["bases"].is_array(), "bases must be an array");
    for (const auto& b : report["bases"]) {
      require(b.is_object() && b.size() == 5, "basis entries need rho, theta, power, b, c");
      for (const char* key : {"rho", "theta", "b", "c"}) {
        require(b.contains(key) && b[key].is_number(), std::string("basis field ") + key + " must be a number");
      }
      require(b.contains("power") && b["power"].is_number_integer() && b["power"].get<long long>() >= 0,
              "basis power must be a nonnegative integer");
      require(b["rho"].get<double>() > 0.0, "basis rho must be positive");
      const double theta = b["theta"].get<double>();
      require(theta >= 0.0 && theta <= std::numbers::pi, "basis theta must lie in [0, pi]");
    }
  }
  for (const char* key : {"mse", "bound"}) {
    if (report.contains(key)) {
      require(report[key].is_number() && report[key].get<double>() >= 0.0,
              std::string(key) + " must be a nonnegative number");
    }
  }
  if (report.contains("diagnostics")) require(report["diagnostics"].is_object(), "diagnostics must be an object");
  if (report.contains("tables")) {
    require(report["tables"].is_array(), "tables must be an array");
    for (const auto& row : report["tables"]) {
      require(row.is_object(), "table rows must be objects");
      for (const auto& [key, value] : row.items()) require(value.is_number(), "table cell " + key + " must be a number");
    }
  }
  require_finite_numbers(report, "$");
}

std::string render_report(const Report& report) { return report.dump(2) + "\n"; }

}  // namespace lplab::cli
