#include <lplab/cli.hpp>
#include <lplab/recurrence.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

namespace lplab::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_decimal(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size() || token.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view s, std::string_view separators) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto stop = s.find_first_of(separators, start);
    const auto piece = trim(s.substr(start, stop == std::string_view::npos ? s.npos : stop - start));
    if (!piece.empty()) out.push_back(piece);
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return out;
}

struct Entry {
  std::string value;
  int line = 0;
};

using KeyValues = std::map<std::string, Entry, std::less<>>;

KeyValues parse_key_values(std::istream& in, std::initializer_list<std::string_view> allowed) {
  KeyValues out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line);
    const std::string key(trim(text.substr(0, eq)));
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError("unknown key '" + key + "'", line);
    }
    if (out.contains(key)) throw ParseError("duplicate key '" + key + "'", line);
    out.emplace(key, Entry{std::string(trim(text.substr(eq + 1))), line});
  }
  return out;
}

std::vector<double> parse_list(const Entry& entry) {
  std::vector<double> values;
  for (auto token : split(entry.value, ", \t")) values.push_back(parse_scalar(token, entry.line));
  if (values.empty()) throw ParseError("expected at least one number", entry.line);
  return values;
}

std::vector<std::vector<double>> parse_tuples(const Entry& entry) {
  std::vector<std::vector<double>> tuples;
  for (auto group : split(entry.value, ";")) {
    std::vector<double> tuple;
    for (auto token : split(group, ", \t")) tuple.push_back(parse_scalar(token, entry.line));
    tuples.push_back(std::move(tuple));
  }
  if (tuples.empty()) throw ParseError("expected at least one tuple", entry.line);
  return tuples;
}

Index parse_index_token(std::string_view token, int line) {
  Index value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

std::vector<Index> parse_index_list(const Entry& entry) {
  std::vector<Index> values;
  for (auto token : split(entry.value, ", \t")) {
    if (const auto dots = token.find(".."); dots != std::string_view::npos) {
      const Index lo = parse_index_token(token.substr(0, dots), entry.line);
      const Index hi = parse_index_token(token.substr(dots + 2), entry.line);
      if (hi < lo) throw ParseError("empty range '" + std::string(token) + "'", entry.line);
      for (Index v = lo; v <= hi; ++v) values.push_back(v);
    } else {
      values.push_back(parse_index_token(token, entry.line));
    }
  }
  if (values.empty()) throw ParseError("expected at least one integer", entry.line);
  return values;
}

template <typename Fn>
auto at_line(int line, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument:
    case ErrorKind::insufficient_data:
    case ErrorKind::parse_error:
    case ErrorKind::unsupported_root:
      return exit_data_error;
    case ErrorKind::numeric_overflow:
    case ErrorKind::numeric_failure:
    case ErrorKind::ill_conditioned:
      return exit_numeric_failure;
    case ErrorKind::internal_invariant:
      return exit_internal_error;
  }
  return exit_internal_error;
}

double parse_scalar(std::string_view token, int line) {
  token = trim(token);
  if (auto plain = parse_decimal(token)) {
    if (!std::isfinite(*plain)) throw ParseError("non-finite number '" + std::string(token) + "'", line);
    return *plain;
  }
  const auto at = token.find("pi");
  if (at == std::string_view::npos) throw ParseError("not a number: '" + std::string(token) + "'", line);

  double factor = 1.0;
  std::string_view head = token.substr(0, at);
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  if (head == "-") {
    factor = -1.0;
  } else if (!head.empty() && head != "+") {
    auto value = parse_decimal(head);
    if (!value) throw ParseError("not a number: '" + std::string(token) + "'", line);
    factor = *value;
  }
  double divisor = 1.0;
  std::string_view tail = token.substr(at + 2);
  if (!tail.empty()) {
    if (tail.front() != '/') throw ParseError("not a number: '" + std::string(token) + "'", line);
    auto value = parse_decimal(tail.substr(1));
    if (!value || *value == 0.0) throw ParseError("bad divisor in '" + std::string(token) + "'", line);
    divisor = *value;
  }
  const double result = factor * std::numbers::pi / divisor;
  if (!std::isfinite(result)) throw ParseError("non-finite number '" + std::string(token) + "'", line);
  return result;
}

Signal read_signal_csv(std::istream& in) {
  std::vector<double> samples;
  std::string raw;
  int line = 0;
  bool seen_content = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty()) continue;
    if (!seen_content && text == "value") {
      seen_content = true;
      continue;
    }
    seen_content = true;
    const auto value = parse_decimal(text);
    if (!value) throw ParseError("expected one decimal number, got '" + std::string(text) + "'", line);
    if (!std::isfinite(*value)) throw ParseError("non-finite sample", line);
    samples.push_back(*value);
  }
  if (samples.empty()) throw ParseError("signal file contains no samples", 0);
  return Signal::from(samples);
}

Signal read_signal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open signal file '" + path + "'");
  try {
    return read_signal_csv(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) throw InternalInvariant("number formatting failed");
  return std::string(buffer, end);
}

void write_signal_csv(std::ostream& out, const Signal& signal) {
  for (Index n = 0; n < signal.size(); ++n) out << format_number(signal[n]) << '\n';
}

SynthSpec parse_synth_spec(std::istream& in) {
  const KeyValues kv = parse_key_values(in, {"a", "initial", "bases", "weights"});
  const bool recurrence = kv.contains("a") || kv.contains("initial");
  const bool expansion = kv.contains("bases") || kv.contains("weights");
  if (recurrence == expansion) {
    throw ParseError("spec must give either 'a' and 'initial' or 'bases' and 'weights'", 0);
  }
  SynthSpec spec;
  if (recurrence) {
    if (!kv.contains("a") || !kv.contains("initial")) {
      throw ParseError("recurrence spec needs both 'a' and 'initial'", 0);
    }
    const Entry& a = kv.find("a")->second;
    const Entry& init = kv.find("initial")->second;
    const auto weights = parse_list(a);
    const auto seed = parse_list(init);
    LpCoefficients coeffs = at_line(a.line, [&] {
      return LpCoefficients(Eigen::Map<const Eigen::VectorXd>(weights.data(), static_cast<Index>(weights.size())));
    });
    spec.model = at_line(init.line, [&] {
      return LpModel(coeffs, Eigen::Map<const Eigen::VectorXd>(seed.data(), static_cast<Index>(seed.size())));
    });
    return spec;
  }
  if (!kv.contains("bases") || !kv.contains("weights")) {
    throw ParseError("expansion spec needs both 'bases' and 'weights'", 0);
  }
  const Entry& b = kv.find("bases")->second;
  const Entry& w = kv.find("weights")->second;
  const auto basis_tuples = parse_tuples(b);
  const auto weight_tuples = parse_tuples(w);
  if (basis_tuples.size() != weight_tuples.size()) {
    throw ParseError(std::to_string(weight_tuples.size()) + " weight tuples for " +
                         std::to_string(basis_tuples.size()) + " bases",
                     w.line);
  }
  std::vector<WeightedTerm> terms;
  for (std::size_t i = 0; i < basis_tuples.size(); ++i) {
    const auto& t = basis_tuples[i];
    if (t.size() != 3) throw ParseError("each basis needs 'rho theta power'", b.line);
    if (t[2] != std::floor(t[2]) || t[2] < 0 || t[2] > 64) {
      throw ParseError("basis power must be a small nonnegative integer", b.line);
    }
    BasisTerm basis = at_line(b.line, [&] { return BasisTerm(t[0], t[1], static_cast<int>(t[2])); });
    const auto& wt = weight_tuples[i];
    if (wt.empty() || wt.size() > 2) throw ParseError("each weight needs 'b' or 'b c'", w.line);
    terms.push_back({basis, wt[0], wt.size() == 2 ? wt[1] : 0.0});
  }
  spec.expansion = at_line(b.line, [&] { return WeightedExpansion(std::move(terms)); });
  return spec;
}

Signal run_synth(const SynthSpec& spec, Index count) {
  if (count < 1) throw InvalidArgument("synth: count must be positive");
  if (spec.model) return iterate(*spec.model, count);
  return synthesize(*spec.expansion, count);
}

ExperimentConfig parse_experiment_config(std::istream& in) {
  const KeyValues kv = parse_key_values(in, {"function", "coefficients", "interval", "p", "n"});
  ExperimentConfig config;
  const auto fn = kv.find("function");
  if (fn == kv.end()) throw ParseError("config needs 'function'", 0);
  config.function = fn->second.value;
  if (auto it = kv.find("coefficients"); it != kv.end()) config.coefficients = parse_list(it->second);
  if (auto it = kv.find("interval"); it != kv.end()) {
    const auto ends = parse_list(it->second);
    if (ends.size() != 2) throw ParseError("interval needs exactly two numbers", it->second.line);
    if (!(ends[0] < ends[1])) throw ParseError("interval must satisfy lo < hi", it->second.line);
    config.interval = std::make_pair(ends[0], ends[1]);
  }
  if (auto it = kv.find("p"); it != kv.end()) config.orders = parse_index_list(it->second);
  if (auto it = kv.find("n"); it != kv.end()) config.sample_counts = parse_index_list(it->second);
  return config;
}

Sampler builtin_function(const ExperimentConfig& config) {
  const std::string& name = config.function;
  if (name == "sin") return [](double x) { return std::sin(x); };
  if (name == "cos") return [](double x) { return std::cos(x); };
  if (name == "exp") return [](double x) { return std::exp(x); };
  if (name == "linear") return [](double x) { return x; };
  if (name == "poly") {
    if (config.coefficients.empty()) throw InvalidArgument("function 'poly' needs 'coefficients'");
    return [c = config.coefficients](double x) {
      double acc = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
      return acc;
    };
  }
  throw InvalidArgument("unknown function '" + name + "' (expected sin, cos, exp, linear or poly)");
}

}  // namespace lplab::cli
