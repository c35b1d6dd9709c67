#include "pcd/rational.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace pcd {
namespace {

__extension__ using wide_int = __int128;

std::int64_t narrow(wide_int v) {
  if (v > INT64_MAX || v < -INT64_MAX) throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

Rational from_wide(wide_int num, wide_int den) {
  if (den == 0) throw std::domain_error("rational division by zero");
  if (den < 0) num = -num, den = -den;
  wide_int a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    const wide_int t = a % b;
    a = b, b = t;
  }
  if (a > 1) num /= a, den /= a;
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  if (den_ < 0) num_ = -num_, den_ = -den_;
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) num_ /= g, den_ /= g;
}

Rational operator+(Rational a, Rational b) {
  return from_wide(static_cast<wide_int>(a.num_) * b.den_ + static_cast<wide_int>(b.num_) * a.den_,
                   static_cast<wide_int>(a.den_) * b.den_);
}
Rational operator-(Rational a, Rational b) { return a + Rational(-b.num_, b.den_); }
Rational operator*(Rational a, Rational b) {
  return from_wide(static_cast<wide_int>(a.num_) * b.num_, static_cast<wide_int>(a.den_) * b.den_);
}
Rational operator/(Rational a, Rational b) {
  return from_wide(static_cast<wide_int>(a.num_) * b.den_, static_cast<wide_int>(a.den_) * b.num_);
}
std::strong_ordering operator<=>(Rational a, Rational b) {
  const wide_int l = static_cast<wide_int>(a.num_) * b.den_;
  const wide_int r = static_cast<wide_int>(b.num_) * a.den_;
  return l <=> r;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::optional<std::int64_t> {
    if (s.empty()) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
  };
  try {
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
      const auto n = parse_int(text.substr(0, slash));
      const auto d = parse_int(text.substr(slash + 1));
      if (!n || !d || *d == 0) return std::nullopt;
      return Rational(*n, *d);
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view whole = text.substr(0, dot), frac = text.substr(dot + 1);
      if (frac.empty() || frac.size() > 15) return std::nullopt;
      for (char c : frac)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      const bool negative = !whole.empty() && whole.front() == '-';
      std::int64_t w = 0;
      if (!whole.empty() && whole != "-" && whole != "+") {
        const auto pw = parse_int(whole);
        if (!pw) return std::nullopt;
        w = *pw < 0 ? -*pw : *pw;
      }
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const auto f = parse_int(frac);
      if (!f) return std::nullopt;
      Rational out = Rational(w) + Rational(*f, scale);
      return negative ? Rational(0) - out : out;
    }
    if (const auto v = parse_int(text)) return Rational(*v);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace pcd
