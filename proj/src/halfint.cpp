#include "pya/halfint.hpp"

#include <charconv>

#include "pya/errors.hpp"

namespace pya {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty() || text.front() == '+') {
    throw ParseError("malformed half-integer '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("malformed half-integer '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::int64_t HalfInt::to_integer() const {
  if (!is_integer()) throw DomainError(to_string() + " is not an integer");
  return twice_ / 2;
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return from_twice(2 * parse_integer(text, text));
  }
  if (text.substr(slash + 1) != "2") {
    throw ParseError("malformed half-integer '" + std::string(text) + "': denominator must be 2");
  }
  const std::int64_t numerator = parse_integer(text.substr(0, slash), text);
  if (numerator % 2 == 0) {
    throw ParseError("malformed half-integer '" + std::string(text) + "': numerator over 2 must be odd");
  }
  return from_twice(numerator);
}

std::int64_t integer_distance(HalfInt a, HalfInt b) {
  const HalfInt d = a - b;
  if (!d.is_integer()) {
    throw DomainError("exponents " + a.to_string() + " and " + b.to_string() + " lie on different grids");
  }
  return d.twice() / 2;
}

}  // namespace pya
