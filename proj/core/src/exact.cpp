#include "asymexp/exact.hpp"

#include <cctype>

#include "asymexp/error.hpp"

namespace asymexp {

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text)) {
    throw Error(ErrorKind::kParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  BigInt den = parse_integer(den_text);
  if (den == 0) throw Error(ErrorKind::kParseError, "zero denominator in '" + std::string(text) + "'");
  Rational out(parse_integer(num_text), den);
  out.canonicalize();
  return out;
}

}  // namespace asymexp
