#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "asymexp/cli.hpp"
#include "asymexp/error.hpp"

namespace asymexp::cli {

namespace {

std::string scalar_text(const nlohmann::json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

// Values from a JSON config file fill options the command line left unset.
void apply_config(CLI::App& sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open config '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParseError, "config '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::kParseError, "config '" + path + "' must hold a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "config") continue;
    CLI::Option* option = sub.get_option_no_throw("--" + key);
    if (option == nullptr) throw CLI::ConfigError::Extras(key);
    if (option->count() > 0) continue;
    std::vector<std::string> inputs;
    if (value.is_array()) {
      for (const auto& v : value) inputs.push_back(scalar_text(v));
    } else {
      inputs.push_back(scalar_text(value));
    }
    option->clear();
    option->add_result(inputs);
    option->run_callback();
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymptotic expansion coefficients of a function from its Taylor coefficients"};
  app.name("asymexp");
  app.require_subcommand(1, 1);

  std::string config_path;
  const std::string input_help = "arctan | pole:<a> | alternating-geometric | file:<path>";

  TransformOptions transform;
  auto* tr = app.add_subcommand("transform", "Associated coefficients c*_n as CSV, plus a radius estimate");
  tr->add_option("--input", transform.input, input_help)->capture_default_str();
  tr->add_option("--m", transform.m, "Number of Taylor coefficients")->capture_default_str();
  tr->add_option("--lag", transform.lag, "Lag of the ratio test")->capture_default_str();
  tr->add_option("--digits", transform.digits, "Precision for decimal inputs")->capture_default_str();
  tr->add_option("--out", transform.out, "Output CSV")->required();

  ContinueOptions cont;
  auto* co = app.add_subcommand("continue", "Continue the associated series to 1 and extract q'_n");
  co->add_option("--input", cont.input, input_help)->capture_default_str();
  co->add_option("--m", cont.m, "Associated coefficients fed to the first step")->capture_default_str();
  co->add_option("--dx", cont.dx, "Step; 1/dx must be an integer")->capture_default_str();
  co->add_option("--alpha", cont.alpha, "Tail threshold")->capture_default_str();
  co->add_option("--digits", cont.digits, "Working precision, significant digits")->capture_default_str();
  co->add_option("--tail-window", cont.tail_window, "Trailing terms that must fall below alpha")->capture_default_str();
  co->add_option("--count", cont.count, "Number of q' coefficients to extract")->capture_default_str();
  co->add_option("--out", cont.out, "Output JSON report")->required();

  ConvertOptions conv;
  auto* cv = app.add_subcommand("convert", "Convert between q' (shifted) and q (plain) expansions");
  cv->add_option("--input", conv.input, "Coefficient file (CSV or JSON)")->required();
  cv->add_option("--direction", conv.direction, "to-q | to-qprime")
      ->check(CLI::IsMember({"to-q", "to-qprime"}))
      ->capture_default_str();
  cv->add_option("--digits", conv.digits, "Precision for decimal inputs")->capture_default_str();
  cv->add_option("--out", conv.out, "Output file; .json writes decimal JSON")->required();

  DirectOptions direct;
  auto* di = app.add_subcommand("direct", "Partial sums of the direct formula for q'_k");
  di->add_option("--input", direct.input, input_help)->capture_default_str();
  di->add_option("--k", direct.k, "Index of q'")->capture_default_str();
  di->add_option("--schedule", direct.schedule, "m values: a..b, a..b:step or a,b,c");
  di->add_option("--m", direct.m, "Number of Taylor coefficients (default: max schedule + 1)");
  di->add_option("--tol", direct.tol, "Relative agreement of three partials")->capture_default_str();
  di->add_option("--digits", direct.digits, "Output precision")->capture_default_str();
  di->add_option("--out", direct.out, "Output CSV")->required();

  SweepOptions sweep;
  auto* sw = app.add_subcommand("sweep", "Run the continuation over an (m, dx, alpha) grid");
  sw->add_option("--input", sweep.input, input_help)->capture_default_str();
  sw->add_option("--m", sweep.m, "Comma-separated m values")->delimiter(',')->capture_default_str();
  sw->add_option("--dx", sweep.dx, "Comma-separated steps")->delimiter(',')->capture_default_str();
  sw->add_option("--alpha", sweep.alpha, "Comma-separated thresholds")->delimiter(',')->capture_default_str();
  sw->add_option("--digits", sweep.digits, "Working precision")->capture_default_str();
  sw->add_option("--tail-window", sweep.tail_window, "Trailing terms that must fall below alpha")
      ->capture_default_str();
  sw->add_option("--jobs", sweep.jobs, "Concurrent cells (0: hardware threads)")->capture_default_str();
  sw->add_option("--out", sweep.out, "Output report (.json for JSON, CSV otherwise)")->required();

  for (auto* sub : {tr, co, cv, di, sw}) {
    sub->add_option("--config", config_path, "JSON file of option values; flags take precedence");
    // --out may come from the config file, checked after it is applied
    sub->get_option("--out")->required(false);
  }

  try {
    app.parse(argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    if (!config_path.empty()) apply_config(*sub, config_path);
    if (sub->get_option("--out")->count() == 0) throw CLI::RequiredError("--out");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }

  try {
    if (tr->parsed()) cmd_transform(transform, out);
    if (co->parsed()) cmd_continue(cont, out);
    if (cv->parsed()) cmd_convert(conv, out);
    if (di->parsed()) cmd_direct(direct, out);
    if (sw->parsed()) cmd_sweep(sweep, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace asymexp::cli
