#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "asymexp/series.hpp"

namespace asymexp {

/// arctan at 0: c_n = 0 for even n, (-1)^((n-1)/2)/n for odd n.
TaylorSeries<Rational> arctan_coeffs(long count);

/// Closed form of the arctan associated coefficients: 0 when n mod 4 == 0
/// (n = 0 included), otherwise (-1)^(n div 4) 2^(n div 2) / n.
Rational arctan_assoc_closed_form(long n);

/// f(x) = 1/(a + x) at 0: c_n = (-1)^n / a^(n+1). Throws kDegeneratePole for a == 0.
TaylorSeries<Rational> rational_pole_coeffs(const Rational& a, long count);

/// 1/(1 + x) at 0: c_n = (-1)^n.
TaylorSeries<Rational> alternating_geometric_coeffs(long count);

using AnySeries = std::variant<TaylorSeries<Rational>, TaylorSeries<Decimal>>;

enum class CoeffFormat { kCsv, kJson };

/// Picks the format from the extension (.json -> JSON, anything else CSV).
CoeffFormat format_for(const std::filesystem::path& path);

/// CSV: header `n,numerator,denominator` (exact) or `n,value` (decimal), rows
/// with n = 0, 1, 2, ... in order. Lines starting with '#' are comments; a
/// `# center: <value>` comment sets the expansion center.
/// JSON: array of decimal strings, or {"center": "...", "coefficients": [...]}.
/// Decimal values are rounded to `digits`.
AnySeries parse_coeffs(std::string_view text, CoeffFormat format, int digits);
AnySeries load_coeffs(const std::filesystem::path& path, CoeffFormat format, int digits);
AnySeries load_coeffs(const std::filesystem::path& path, int digits);

/// Exact series are always CSV with numerator/denominator columns. Decimal
/// series are rounded to `digits` and written as `n,value` CSV or as a JSON
/// object with "center" and "coefficients".
std::string format_coeffs(const TaylorSeries<Rational>& series);
std::string format_coeffs(const TaylorSeries<Decimal>& series, CoeffFormat format, int digits);
/// Throws kInvalidArgument when asked for exact JSON.
std::string format_coeffs(const AnySeries& series, CoeffFormat format, int digits);
/// Format from the extension, as in load_coeffs().
void save_coeffs(const std::filesystem::path& path, const AnySeries& series, int digits);

/// A builtin or file-backed coefficient source.
struct GeneratorSpec {
  enum class Kind { kArctan, kRationalPole, kAlternatingGeometric, kFile };
  Kind kind = Kind::kArctan;
  Rational pole = 1;  ///< a in 1/(a + x)
  std::filesystem::path path;
  long count = 1;  ///< coefficients to produce; 0 takes a whole file

  std::string describe() const;
};

/// "arctan", "pole:<a>" (a rational, nonzero), "alternating-geometric",
/// "file:<path>". Throws kParseError / kDegeneratePole.
GeneratorSpec parse_generator(std::string_view text, long count);

/// Builtins are exact; files keep their own kind. Throws kInvalidArgument when
/// a file holds fewer than `count` coefficients.
AnySeries generate(const GeneratorSpec& spec, int digits);

}  // namespace asymexp
