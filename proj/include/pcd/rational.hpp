#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pcd {

/// Exact fraction with 64-bit numerator/denominator, always normalized
/// (den > 0, gcd 1). Arithmetic throws std::overflow_error rather than wrap.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(Rational a, Rational b);

  /// Parses "p/q", an integer, or a terminating decimal such as "1.25".
  static std::optional<Rational> parse(std::string_view text);
  std::string str() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace pcd
