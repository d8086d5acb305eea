#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "transcert/commands.hpp"

using transcert::io::Json;

namespace {

struct Extras {
  std::optional<std::uint64_t> prime, r, d;
  std::optional<std::string> value;
};

const std::map<std::string, std::string> kSummaries = {
    {"structural-rank", "Generic rank of a matrix over a span of log symbols"},
    {"det-rep", "Affine-linear matrix whose determinant is a given polynomial"},
    {"wm-decompose", "Rational row/column change exposing a large zero block"},
    {"mcc", "Rational vectors w, v with w^T M v = 0"},
    {"siegel", "Small integer kernel vector of a wide integer matrix"},
    {"mult-rel", "Lattice of multiplicative relations among rationals"},
    {"vandermonde", "Multiplicative relation from a polynomial vanishing on a power grid"},
    {"xn", "Enumerate X(N) and search for a vanishing polynomial"},
    {"theta", "Minimal total degree sum of d exponent tuples in r variables"},
    {"padic-log", "Iwasawa p-adic logarithm"},
    {"padic-exp", "p-adic exponential"},
    {"hensel", "Lift a simple root mod p to Z_p"},
    {"log-matrix", "p-adic logarithm matrix of units and its certified rank"},
    {"interp-det", "p-adic valuation of det(u^(a_i y_j))"},
    {"series", "Truncated power series: exp, log, relations, product-exp"},
    {"verify", "Re-check a certificate"},
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const transcert::Outcome& out, bool result_only) {
  const Json& j = result_only && out.output.contains("result") ? out.output.at("result") : out.output;
  std::cout << transcert::dump_canonical(j);
  if (out.output.contains("error")) std::cerr << "transcert: " << out.output["error"]["message"].get<std::string>() << "\n";
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for transcendence-theory computations"};
  app.require_subcommand(1);
  app.fallthrough();

  transcert::Params params;
  bool result_only = false;
  app.add_option("--seed", params.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--prec", params.prec, "p-adic precision k (digits)")->capture_default_str();
  app.add_option("--height", params.height, "Height bound for witness searches")->capture_default_str();
  app.add_option("--max-points", params.max_points, "Cap on enumerated exponent boxes")->capture_default_str();
  app.add_option("--strategy", params.strategy, "wm-decompose strategy: exhaustive or alternating")
      ->capture_default_str();
  app.add_flag("--result-only", result_only, "Print only the result object");

  std::string input_path;
  std::string inline_json;
  Extras extras;
  for (const auto& name : transcert::command_names()) {
    auto* sub = app.add_subcommand(name, kSummaries.at(name));
    sub->add_option("input", input_path, "JSON input file, '-' for stdin");
    sub->add_option("--json", inline_json, "Inline JSON input");
    if (name.rfind("padic", 0) == 0 || name == "hensel" || name == "log-matrix" || name == "interp-det")
      sub->add_option("--prime", extras.prime, "The prime p");
    if (name == "padic-log" || name == "padic-exp") sub->add_option("--value", extras.value, "Rational input \"a/b\"");
    if (name == "theta") {
      sub->add_option("--r", extras.r, "Number of variables");
      sub->add_option("--d", extras.d, "Number of exponent tuples");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  Json input = Json::object();
  try {
    if (!inline_json.empty())
      input = Json::parse(inline_json);
    else if (!input_path.empty())
      input = Json::parse(read_all(input_path));
  } catch (const std::exception& e) {
    return emit({2, {{"error", {{"kind", "parse"}, {"message", e.what()}, {"pointer", "/"}}}}}, false);
  }
  if (input.is_object()) {
    if (extras.prime) input["prime"] = *extras.prime;
    if (extras.value) input["value"] = *extras.value;
    if (extras.r) input["r"] = *extras.r;
    if (extras.d) input["d"] = *extras.d;
  }
  return emit(transcert::run_command(command, input, params), result_only && command != "verify");
}
