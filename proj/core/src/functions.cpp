#include "asymexp/functions.hpp"

#include <cctype>
#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "asymexp/error.hpp"

namespace asymexp {

namespace {

void require_count(long count) {
  if (count < 1) throw Error(ErrorKind::kInvalidArgument, "coefficient count must be at least 1");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

long parse_index(std::string_view text, long line_no) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorKind::kParseError, "line " + std::to_string(line_no) + ": bad index '" + std::string(text) + "'");
  }
  return std::stol(std::string(text));
}

AnySeries parse_csv(std::string_view text, int digits) {
  std::istringstream in{std::string(text)};
  std::string raw;
  long line_no = 0;
  std::optional<std::string> center_text;
  std::vector<std::string_view> header;
  std::string header_line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body.rfind("center:", 0) == 0) center_text = std::string(trim(body.substr(7)));
      continue;
    }
    if (header_line.empty()) {
      header_line = std::string(line);
      header = split_commas(header_line);
      continue;
    }
    std::vector<std::string> fields;
    for (auto f : split_commas(line)) fields.emplace_back(f);
    if (fields.size() != header.size()) {
      throw Error(ErrorKind::kParseError, "line " + std::to_string(line_no) + ": expected " +
                                              std::to_string(header.size()) + " fields");
    }
    const long index = parse_index(fields[0], line_no);
    if (index != static_cast<long>(rows.size())) {
      throw Error(ErrorKind::kParseError, "line " + std::to_string(line_no) + ": index " + std::to_string(index) +
                                              " out of order, expected " + std::to_string(rows.size()));
    }
    rows.push_back(std::move(fields));
  }
  const bool exact = header.size() == 3 && header[0] == "n" && header[1] == "numerator" && header[2] == "denominator";
  const bool real = header.size() == 2 && header[0] == "n" && header[1] == "value";
  if (!exact && !real) {
    throw Error(ErrorKind::kParseError, "CSV header must be 'n,numerator,denominator' or 'n,value'");
  }
  if (rows.empty()) throw Error(ErrorKind::kParseError, "no coefficient rows");
  if (exact) {
    TaylorSeries<Rational> series;
    if (center_text) series.center = parse_rational(*center_text);
    for (const auto& row : rows) series.coeffs.push_back(parse_rational(row[1] + "/" + row[2]));
    return series;
  }
  TaylorSeries<Decimal> series;
  series.center = center_text ? Decimal::parse(*center_text, 0) : Decimal::exact(0);
  for (const auto& row : rows) series.coeffs.push_back(Decimal::parse(row[1], digits));
  return series;
}

Decimal json_decimal(const nlohmann::json& value, int digits) {
  if (value.is_string()) return Decimal::parse(value.get<std::string>(), digits);
  if (value.is_number_integer()) return Decimal::parse(value.dump(), digits);
  throw Error(ErrorKind::kParseError, "coefficients must be decimal strings, got " + value.dump());
}

AnySeries parse_json(std::string_view text, int digits) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
  TaylorSeries<Decimal> series;
  series.center = Decimal::exact(0);
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("coefficients")) throw Error(ErrorKind::kParseError, "missing 'coefficients'");
    list = &doc["coefficients"];
    if (doc.contains("center")) series.center = json_decimal(doc["center"], 0);
  }
  if (!list->is_array() || list->empty()) throw Error(ErrorKind::kParseError, "coefficients must be a non-empty array");
  for (const auto& v : *list) series.coeffs.push_back(json_decimal(v, digits));
  return series;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIoError, "read failed for '" + path.string() + "'");
  return buf.str();
}

}  // namespace

TaylorSeries<Rational> arctan_coeffs(long count) {
  require_count(count);
  TaylorSeries<Rational> series;
  series.coeffs.resize(static_cast<std::size_t>(count));
  for (long n = 1; n < count; n += 2) {
    series.coeffs[n] = Rational(((n - 1) / 2) % 2 == 0 ? 1 : -1, n);
  }
  return series;
}

Rational arctan_assoc_closed_form(long n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "n must be >= 0");
  if (n % 4 == 0) return 0;
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(n / 2));
  Rational out(sign_power(n / 4) * power, n);
  out.canonicalize();
  return out;
}

TaylorSeries<Rational> rational_pole_coeffs(const Rational& a, long count) {
  if (a == 0) throw Error(ErrorKind::kDegeneratePole, "1/(a + x) needs a != 0");
  require_count(count);
  TaylorSeries<Rational> series;
  series.coeffs.reserve(static_cast<std::size_t>(count));
  const Rational ratio = Rational(-1) / a;
  Rational c = Rational(1) / a;
  for (long n = 0; n < count; ++n) {
    series.coeffs.push_back(c);
    c *= ratio;
  }
  return series;
}

TaylorSeries<Rational> alternating_geometric_coeffs(long count) { return rational_pole_coeffs(1, count); }

CoeffFormat format_for(const std::filesystem::path& path) {
  return path.extension() == ".json" ? CoeffFormat::kJson : CoeffFormat::kCsv;
}

AnySeries parse_coeffs(std::string_view text, CoeffFormat format, int digits) {
  return format == CoeffFormat::kCsv ? parse_csv(text, digits) : parse_json(text, digits);
}

AnySeries load_coeffs(const std::filesystem::path& path, CoeffFormat format, int digits) {
  return parse_coeffs(read_file(path), format, digits);
}

AnySeries load_coeffs(const std::filesystem::path& path, int digits) {
  return load_coeffs(path, format_for(path), digits);
}

std::string format_coeffs(const TaylorSeries<Rational>& series) {
  std::ostringstream out;
  if (series.center != 0) out << "# center: " << to_string(series.center) << "\n";
  out << "n,numerator,denominator\n";
  for (std::size_t n = 0; n < series.coeffs.size(); ++n) {
    out << n << "," << series.coeffs[n].get_num().get_str() << "," << series.coeffs[n].get_den().get_str() << "\n";
  }
  return out.str();
}

std::string format_coeffs(const TaylorSeries<Decimal>& series, CoeffFormat format, int digits) {
  if (format == CoeffFormat::kCsv) {
    std::ostringstream out;
    if (!series.center.is_zero()) out << "# center: " << series.center.to_string() << "\n";
    out << "n,value\n";
    for (std::size_t n = 0; n < series.coeffs.size(); ++n) out << n << "," << series.coeffs[n].to_string(digits) << "\n";
    return out.str();
  }
  nlohmann::json doc;
  doc["center"] = series.center.to_string();
  auto list = nlohmann::json::array();
  for (const auto& c : series.coeffs) list.push_back(c.to_string(digits));
  doc["coefficients"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string format_coeffs(const AnySeries& series, CoeffFormat format, int digits) {
  if (const auto* exact = std::get_if<TaylorSeries<Rational>>(&series)) {
    if (format == CoeffFormat::kJson) {
      throw Error(ErrorKind::kInvalidArgument, "exact coefficients are written as CSV, not JSON");
    }
    return format_coeffs(*exact);
  }
  return format_coeffs(std::get<TaylorSeries<Decimal>>(series), format, digits);
}

void save_coeffs(const std::filesystem::path& path, const AnySeries& series, int digits) {
  const std::string text = format_coeffs(series, format_for(path), digits);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIoError, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorKind::kIoError, "write failed for '" + path.string() + "'");
}

std::string GeneratorSpec::describe() const {
  switch (kind) {
    case Kind::kArctan: return "arctan";
    case Kind::kRationalPole: return "pole:" + to_string(pole);
    case Kind::kAlternatingGeometric: return "alternating-geometric";
    case Kind::kFile: return "file:" + path.string();
  }
  return "unknown";
}

GeneratorSpec parse_generator(std::string_view text, long count) {
  GeneratorSpec spec;
  spec.count = count;
  text = trim(text);
  if (text == "arctan") {
    spec.kind = GeneratorSpec::Kind::kArctan;
  } else if (text == "alternating-geometric") {
    spec.kind = GeneratorSpec::Kind::kAlternatingGeometric;
  } else if (text.rfind("pole:", 0) == 0) {
    spec.kind = GeneratorSpec::Kind::kRationalPole;
    spec.pole = parse_rational(text.substr(5));
    if (spec.pole == 0) throw Error(ErrorKind::kDegeneratePole, "1/(a + x) needs a != 0");
  } else if (text.rfind("file:", 0) == 0 && text.size() > 5) {
    spec.kind = GeneratorSpec::Kind::kFile;
    spec.path = std::string(text.substr(5));
  } else {
    throw Error(ErrorKind::kParseError, "unknown input '" + std::string(text) +
                                            "' (expected arctan, pole:<a>, alternating-geometric or file:<path>)");
  }
  if (spec.kind != GeneratorSpec::Kind::kFile) require_count(count);
  return spec;
}

AnySeries generate(const GeneratorSpec& spec, int digits) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::kArctan: return arctan_coeffs(spec.count);
    case GeneratorSpec::Kind::kRationalPole: return rational_pole_coeffs(spec.pole, spec.count);
    case GeneratorSpec::Kind::kAlternatingGeometric: return alternating_geometric_coeffs(spec.count);
    case GeneratorSpec::Kind::kFile: break;
  }
  AnySeries loaded = load_coeffs(spec.path, digits);
  if (spec.count > 0) {
    std::visit(
        [&](auto& s) {
          if (static_cast<long>(s.coeffs.size()) < spec.count) {
            throw Error(ErrorKind::kInvalidArgument, "'" + spec.path.string() + "' holds " +
                                                         std::to_string(s.coeffs.size()) + " coefficients, need " +
                                                         std::to_string(spec.count));
          }
          s.coeffs.resize(static_cast<std::size_t>(spec.count));
        },
        loaded);
  }
  return loaded;
}

}  // namespace asymexp
