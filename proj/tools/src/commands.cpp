#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "asymexp/cli.hpp"
#include "asymexp/conversion.hpp"
#include "asymexp/error.hpp"
#include "asymexp/transform.hpp"

namespace asymexp::cli {

namespace {

using AnyAssoc = std::variant<AssociatedSeries<Rational>, AssociatedSeries<Decimal>>;

void require_out(const std::filesystem::path& out) {
  if (out.empty()) throw Error(ErrorKind::kInvalidArgument, "--out is required");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::kIoError, "cannot write '" + path.string() + "'");
  file << text;
  if (!file) throw Error(ErrorKind::kIoError, "write failed for '" + path.string() + "'");
}

std::string cell(const Rational& x, int) { return to_string(x); }
std::string cell(const Decimal& x, int digits) { return x.to_string(digits); }

Decimal center_of(const AnySeries& series, int digits) {
  return std::visit([&](const auto& s) { return to_decimal(s.center, digits); }, series);
}

AnyAssoc associated_any(const AnySeries& series) {
  return std::visit([](const auto& s) -> AnyAssoc { return associated(s); }, series);
}

long parse_long(std::string_view text) {
  long value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::kParseError, "bad integer '" + std::string(text) + "'");
  }
  return value;
}

std::string json_text(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

int exit_code_for(const Error& error) { return error.is_numerical() ? kExitNumerical : kExitInput; }

std::vector<long> parse_schedule(std::string_view text) {
  std::vector<long> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  const auto dots = text.find("..");
  if (dots != std::string_view::npos) {
    std::string_view rest = text.substr(dots + 2);
    long step = 1;
    if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
      step = parse_long(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    const long first = parse_long(text.substr(0, dots));
    const long last = parse_long(rest);
    if (step < 1) throw Error(ErrorKind::kParseError, "schedule step must be positive");
    for (long m = first; m <= last; m += step) out.push_back(m);
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      out.push_back(parse_long(piece));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0 || (i > 0 && out[i] <= out[i - 1])) {
      throw Error(ErrorKind::kParseError, "schedule must be non-negative and strictly increasing");
    }
  }
  return out;
}

void cmd_transform(const TransformOptions& options, std::ostream& log) {
  require_out(options.out);
  const GeneratorSpec spec = parse_generator(options.input, options.m);
  const AnySeries series = generate(spec, options.digits);
  std::ostringstream csv;
  csv << "n,c_n,c_n_star,c_n_star_decimal\n";
  std::visit(
      [&](const auto& s) {
        const auto assoc = associated(s);
        for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
          csv << n << "," << cell(s.coeffs[n], options.digits) << "," << cell(assoc.coeffs[n], options.digits) << ","
              << to_decimal(assoc.coeffs[n], 10).to_string() << "\n";
        }
        write_text(options.out, csv.str());
        log << "wrote " << s.coeffs.size() << " rows to " << options.out.string() << "\n";
        log << "radius estimate (lag " << options.lag << "): ";
        try {
          const RadiusEstimate radius = estimate_radius(assoc, options.lag);
          if (radius.limit_guess) {
            log << std::setprecision(10) << *radius.limit_guess << "\n";
          } else {
            log << "undetermined, last ratio " << std::setprecision(10) << radius.values.back().estimate << "\n";
          }
        } catch (const Error& e) {
          log << "unavailable (" << e.what() << ")\n";
        }
      },
      series);
}

void cmd_continue(const ContinueOptions& options, std::ostream& log) {
  require_out(options.out);
  SchemeConfig config;
  config.m = options.m;
  config.step = Decimal::parse(options.dx, 0);
  config.alpha = Decimal::parse(options.alpha, 0);
  config.precision_digits = options.digits;
  config.tail_window = options.tail_window;
  config.validate();
  if (options.count < 0) throw Error(ErrorKind::kInvalidArgument, "--count must be non-negative");

  const GeneratorSpec spec = parse_generator(options.input, options.m);
  const AnySeries series = generate(spec, options.digits);
  std::vector<StepRecord> steps;
  const auto observe = [&](const StepRecord& r) { steps.push_back(r); };
  const ContinuationState state = std::visit(
      [&](const auto& s) { return continue_to_one(associated(s), config, observe); }, series);

  nlohmann::json doc;
  doc["input"] = spec.describe();
  doc["config"] = {{"m", config.m},
                   {"dx", config.step.to_string()},
                   {"alpha", config.alpha.to_string()},
                   {"digits", config.precision_digits},
                   {"tail_window", config.tail_window}};
  doc["converged_count"] = state.converged_count;
  auto at_one = nlohmann::json::array();
  for (const auto& c : state.coeffs) at_one.push_back(c.to_string(options.digits));
  doc["coefficients_at_1"] = std::move(at_one);
  auto trail = nlohmann::json::array();
  for (const auto& r : steps) {
    trail.push_back({{"center", r.center.to_string()}, {"consumed", r.consumed}, {"converged", r.converged}});
  }
  doc["steps"] = std::move(trail);
  if (state.converged_count < 2) {
    doc["note"] =
        "fewer than two coefficients converged at center 1; the path may pass too close to a singularity of the "
        "associated function (try a smaller dx or more coefficients)";
  }

  const Decimal center = center_of(series, options.digits);
  try {
    const ShiftedExpansion<Decimal> qprime = extract_qprime(state, options.count, center);
    doc["center"] = center.to_string(options.digits);
    auto values = nlohmann::json::array();
    for (const auto& q : qprime.coeffs) values.push_back(q.to_string(options.digits));
    doc["qprime"] = std::move(values);
    write_text(options.out, json_text(doc));
  } catch (const Error& e) {
    doc["qprime"] = nullptr;
    doc["error"] = e.what();
    write_text(options.out, json_text(doc));
    throw;
  }
  log << "converged coefficients at center 1: " << state.converged_count << "\n";
  for (std::size_t n = 0; n < static_cast<std::size_t>(options.count); ++n) {
    log << "q'_" << n << " = " << doc["qprime"][n].get<std::string>() << "\n";
  }
  if (doc.contains("note")) log << "note: " << doc["note"].get<std::string>() << "\n";
}

void cmd_convert(const ConvertOptions& options, std::ostream& log) {
  require_out(options.out);
  if (options.direction != "to-q" && options.direction != "to-qprime") {
    throw Error(ErrorKind::kInvalidArgument, "direction must be to-q or to-qprime");
  }
  std::string_view path = options.input;
  if (path.rfind("file:", 0) == 0) path.remove_prefix(5);
  if (path.empty()) throw Error(ErrorKind::kInvalidArgument, "--input is required");
  const AnySeries loaded = load_coeffs(std::filesystem::path(std::string(path)), options.digits);
  const AnySeries converted = std::visit(
      [&](const auto& s) -> AnySeries {
        using T = std::decay_t<decltype(s.center)>;
        if (options.direction == "to-q") {
          const auto plain = qprime_to_q(ShiftedExpansion<T>{s.center, s.coeffs});
          return TaylorSeries<T>{plain.center, plain.coeffs};
        }
        const auto shifted = q_to_qprime(PlainExpansion<T>{s.center, s.coeffs});
        return TaylorSeries<T>{shifted.center, shifted.coeffs};
      },
      loaded);
  save_coeffs(options.out, converted, options.digits);
  const std::size_t size = std::visit([](const auto& s) { return s.coeffs.size(); }, converted);
  log << "wrote " << size << " coefficients to " << options.out.string() << "\n";
}

void cmd_direct(const DirectOptions& options, std::ostream& log) {
  require_out(options.out);
  if (options.k < 0) throw Error(ErrorKind::kInvalidArgument, "--k must be non-negative");
  if (!(options.tol > 0)) throw Error(ErrorKind::kInvalidArgument, "--tol must be positive");
  const std::vector<long> schedule = parse_schedule(options.schedule);
  std::ostringstream csv;
  csv << "m,partial,converged\n";
  if (schedule.empty()) {
    write_text(options.out, csv.str());
    log << "empty schedule, no partial sums\n";
    return;
  }
  const long count = options.m > 0 ? options.m : schedule.back() + 1;
  const GeneratorSpec spec = parse_generator(options.input, count);
  const AnySeries series = generate(spec, options.digits);
  std::visit(
      [&](const auto& s) {
        const auto trace = direct_trace(s, options.k, schedule, options.tol);
        for (const auto& p : trace.partials) {
          csv << p.m << "," << to_decimal(p.value, options.digits).to_string() << ","
              << (p.converged ? "true" : "false") << "\n";
        }
        write_text(options.out, csv.str());
        log << "q'_" << options.k << " limit: ";
        if (trace.limit_guess) {
          log << to_decimal(*trace.limit_guess, options.digits).to_string() << "\n";
        } else {
          log << "not converged\n";
        }
      },
      series);
}

std::optional<SweepReference> reference_for(const GeneratorSpec& spec, int digits) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::kArctan:
      return SweepReference{(decimal_pi(digits + 5) / Decimal::exact(2)).with_digits(digits), Decimal(1, digits)};
    case GeneratorSpec::Kind::kRationalPole:
    case GeneratorSpec::Kind::kAlternatingGeometric:
      // u(x) = (1 - x)/(a - (a - 1)x): u(1) = 0, u'(1) = -1 for every a.
      return SweepReference{Decimal(0, digits), Decimal(-1, digits)};
    case GeneratorSpec::Kind::kFile: break;
  }
  return std::nullopt;
}

void cmd_sweep(const SweepOptions& options, std::ostream& log) {
  require_out(options.out);
  if (options.m.empty() || options.dx.empty() || options.alpha.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "sweep grid needs at least one m, dx and alpha");
  }
  SweepGrid grid;
  grid.m = options.m;
  for (const auto& dx : options.dx) grid.dx.push_back(Decimal::parse(dx, 0));
  for (const auto& alpha : options.alpha) grid.alpha.push_back(Decimal::parse(alpha, 0));
  grid.digits = options.digits;
  grid.tail_window = options.tail_window;

  const long max_m = *std::max_element(grid.m.begin(), grid.m.end());
  if (max_m < 1) throw Error(ErrorKind::kInvalidArgument, "m must be at least 1");
  const GeneratorSpec spec = parse_generator(options.input, max_m);
  const AnySeries series = generate(spec, options.digits);
  const SweepReport report = run_sweep(associated_any(series), grid, reference_for(spec, options.digits), options.jobs);
  write_text(options.out, options.out.extension() == ".json" ? report.to_json() : report.to_csv());
  const auto unconverged = std::count_if(report.rows.begin(), report.rows.end(),
                                         [](const SweepRow& r) { return r.unconverged(); });
  log << "wrote " << report.rows.size() << " rows (" << unconverged << " unconverged) to " << options.out.string()
      << "\n";
}

}  // namespace asymexp::cli
