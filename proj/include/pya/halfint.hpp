#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace pya {

/// Exact element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int value) : twice_(2 * static_cast<std::int64_t>(value)) {}  // NOLINT: implicit by intent

  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt half() { return from_twice(1); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Grid offset in {0, 1/2}.
  constexpr HalfInt frac() const { return from_twice(((twice_ % 2) + 2) % 2); }

  /// Value as an integer; requires is_integer().
  std::int64_t to_integer() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  friend constexpr bool operator==(HalfInt, HalfInt) = default;

  /// "k" for integers, "k/2" with odd k otherwise.
  std::string to_string() const;

  /// Inverse of to_string. Throws ParseError on anything else ("1/3", "2/2", "0.5").
  static HalfInt parse(std::string_view text);

 private:
  std::int64_t twice_ = 0;
};

/// Integer difference a - b; throws DomainError when it is not integral.
std::int64_t integer_distance(HalfInt a, HalfInt b);

}  // namespace pya

template <>
struct std::hash<pya::HalfInt> {
  std::size_t operator()(pya::HalfInt h) const noexcept { return std::hash<std::int64_t>{}(h.twice()); }
};
