#pragma once

#include <charconv>
#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tacs {

/// An exact integer or half-integer, stored as twice its value.
///
/// Used for the total angular momentum J and the magnetic quantum number M.
class HalfInt {
public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }

  /// Parses "21/2", "10.5", "4" or "-3/2". Throws std::invalid_argument on
  /// anything that is not an exact multiple of 1/2.
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_half_integer() const { return !is_integer(); }

  /// Dimension 2J+1 of the multiplet.
  constexpr int multiplicity() const { return twice_ + 1; }

  /// Canonical form: "p/2" for half-integers, "p" otherwise.
  std::string str() const {
    return is_integer() ? std::to_string(twice_ / 2) : std::to_string(twice_) + "/2";
  }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr auto operator<=>(const HalfInt &) const = default;

private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline HalfInt HalfInt::parse(std::string_view text) {
  auto fail = [&]() -> HalfInt {
    throw std::invalid_argument("not an integer or half-integer: '" + std::string(text) + "'");
  };
  if (text.empty())
    return fail();

  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      fail();
    return v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    int num = parse_int(text.substr(0, slash));
    int den = parse_int(text.substr(slash + 1));
    if (den == 1)
      return HalfInt(2 * num);
    if (den != 2)
      return fail();
    return HalfInt(num);
  }

  if (text.find_first_of(".eE") == std::string_view::npos)
    return HalfInt(2 * parse_int(text));

  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    return fail();
  double twice = 2.0 * v;
  if (std::abs(twice) > 1e8 || twice != std::round(twice))
    return fail();
  return HalfInt(static_cast<int>(std::lround(twice)));
}

} // namespace tacs
