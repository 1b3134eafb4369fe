#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "asymexp/cli.hpp"
#include "asymexp/error.hpp"

namespace asymexp::cli {

namespace {

constexpr const char* kUnconverged = "unconverged";
constexpr const char* kMissing = "n/a";

template <class T>
void sort_unique(std::vector<T>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

SweepRow run_cell(const std::variant<AssociatedSeries<Rational>, AssociatedSeries<Decimal>>& assoc,
                  const SchemeConfig& config, const std::optional<SweepReference>& reference) {
  SweepRow row;
  row.config = config;
  try {
    const ContinuationState state = std::visit(
        [&](const auto& a) { return continue_to_one(a, config, [&](const StepRecord&) { ++row.steps; }); }, assoc);
    if (!state.coeffs.empty()) row.c0 = state.coeffs[0];
    if (state.coeffs.size() > 1) row.c1 = state.coeffs[1];
    row.converged_count = state.converged_count;
    row.status = row.unconverged() ? kUnconverged : "ok";
  } catch (const Error& e) {
    if (!e.is_numerical()) throw;
    row.status = std::string(to_string(e.kind()));
  }
  if (reference) {
    if (row.c0) row.err0 = (*row.c0 - reference->c0).abs();
    if (row.c1) row.err1 = (*row.c1 - reference->c1).abs();
  }
  return row;
}

std::string text_or(const std::optional<Decimal>& value, int digits, const char* fallback) {
  return value ? value->to_string(digits) : fallback;
}

std::string value_at_1(const SweepRow& row, const std::optional<Decimal>& value) {
  return row.unconverged() ? kUnconverged : text_or(value, row.config.precision_digits, kUnconverged);
}

}  // namespace

SweepReport run_sweep(const std::variant<AssociatedSeries<Rational>, AssociatedSeries<Decimal>>& assoc,
                      const SweepGrid& grid, const std::optional<SweepReference>& reference, unsigned jobs) {
  SweepGrid ordered = grid;
  sort_unique(ordered.m);
  sort_unique(ordered.dx);
  sort_unique(ordered.alpha);

  std::vector<SchemeConfig> cells;
  for (long m : ordered.m) {
    for (const auto& dx : ordered.dx) {
      for (const auto& alpha : ordered.alpha) {
        SchemeConfig config{m, dx, alpha, ordered.digits, ordered.tail_window};
        config.validate();
        cells.push_back(std::move(config));
      }
    }
  }
  const long available = std::visit([](const auto& a) { return static_cast<long>(a.size()); }, assoc);
  if (!ordered.m.empty() && ordered.m.back() > available) {
    throw Error(ErrorKind::kInvalidArgument, "sweep needs " + std::to_string(ordered.m.back()) +
                                                 " associated coefficients, have " + std::to_string(available));
  }

  SweepReport report;
  report.rows.resize(cells.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(cells.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(jobs);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < cells.size(); i = next++) report.rows[i] = run_cell(assoc, cells[i], reference);
    } catch (...) {
      failures[id] = std::current_exception();
      next = cells.size();
    }
  };
  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return report;
}

std::string SweepReport::to_csv() const {
  std::ostringstream csv;
  csv << "m,dx,alpha,digits,c0_at_1,c1_at_1,err0,err1,steps,converged_count,c0_raw,c1_raw,status\n";
  for (const auto& row : rows) {
    const int digits = row.config.precision_digits;
    csv << row.config.m << "," << row.config.step.to_string() << "," << row.config.alpha.to_string() << "," << digits
        << "," << value_at_1(row, row.c0) << "," << value_at_1(row, row.c1) << "," << text_or(row.err0, digits, kMissing)
        << "," << text_or(row.err1, digits, kMissing) << "," << row.steps << "," << row.converged_count << ","
        << text_or(row.c0, digits, kMissing) << "," << text_or(row.c1, digits, kMissing) << "," << row.status << "\n";
  }
  return csv.str();
}

std::string SweepReport::to_json() const {
  auto list = nlohmann::json::array();
  for (const auto& row : rows) {
    const int digits = row.config.precision_digits;
    auto text = [&](const std::optional<Decimal>& v) -> nlohmann::json {
      return v ? nlohmann::json(v->to_string(digits)) : nlohmann::json(nullptr);
    };
    list.push_back({{"m", row.config.m},
                    {"dx", row.config.step.to_string()},
                    {"alpha", row.config.alpha.to_string()},
                    {"digits", digits},
                    {"tail_window", row.config.tail_window},
                    {"c0_at_1", value_at_1(row, row.c0)},
                    {"c1_at_1", value_at_1(row, row.c1)},
                    {"err0", text(row.err0)},
                    {"err1", text(row.err1)},
                    {"steps", row.steps},
                    {"converged_count", row.converged_count},
                    {"c0_raw", text(row.c0)},
                    {"c1_raw", text(row.c1)},
                    {"status", row.status}});
  }
  nlohmann::json doc;
  doc["rows"] = std::move(list);
  return doc.dump(2) + "\n";
}

}  // namespace asymexp::cli
