#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sgeo {

// Thrown when an exact result does not fit the 64-bit representation.
// Callers that can meet large intermediates (the LP) catch this and retry
// over an arbitrary-precision field.
struct RationalOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// Exact rational number in canonical form: den > 0, gcd(|num|, den) == 1.
// Arithmetic is carried out in 128 bits and checked on the way back down.
class Rational {
 public:
  using int_type = std::int64_t;

  constexpr Rational() noexcept = default;
  constexpr Rational(int_type value) noexcept : num_{value} {}  // NOLINT(implicit)
  Rational(int_type num, int_type den) { assign(num, den); }

  constexpr int_type num() const noexcept { return num_; }
  constexpr int_type den() const noexcept { return den_; }

  constexpr bool is_zero() const noexcept { return num_ == 0; }
  constexpr bool is_positive() const noexcept { return num_ > 0; }
  constexpr bool is_negative() const noexcept { return num_ < 0; }
  constexpr bool is_integer() const noexcept { return den_ == 1; }

  // Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    const wide d = static_cast<wide>(a.den_) * b.den_;
    const wide n = static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    const wide d = static_cast<wide>(a.den_) * b.den_;
    const wide n = static_cast<wide>(a.num_) * b.den_ - static_cast<wide>(b.num_) * a.den_;
    return from_wide(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from_wide(static_cast<wide>(a.num_) * b.den_, static_cast<wide>(a.den_) * b.num_);
  }
  Rational operator-() const {
    if (num_ == std::numeric_limits<int_type>::min()) throw RationalOverflow("rational negation");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const wide lhs = static_cast<wide>(a.num_) * b.den_;
    const wide rhs = static_cast<wide>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using wide = __int128;

  void assign(int_type num, int_type den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(num, den);
  }

  static wide wide_abs(wide v) { return v < 0 ? -v : v; }

  static wide wide_gcd(wide a, wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
      const wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(wide n, wide d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const wide g = wide_gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr wide lo = std::numeric_limits<int_type>::min();
    constexpr wide hi = std::numeric_limits<int_type>::max();
    if (n < lo || n > hi || d > hi) throw RationalOverflow("rational exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<int_type>(n);
    r.den_ = static_cast<int_type>(d);
    if (r.num_ == 0) r.den_ = 1;
    return r;
  }

  int_type num_ = 0;
  int_type den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) -> int_type {
    if (part.empty()) throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
    std::size_t i = 0;
    bool negative = false;
    if (part[0] == '-' || part[0] == '+') {
      negative = part[0] == '-';
      i = 1;
    }
    if (i == part.size()) throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
    wide value = 0;
    for (; i < part.size(); ++i) {
      const char c = part[i];
      if (c < '0' || c > '9') throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
      value = value * 10 + (c - '0');
      if (value > std::numeric_limits<int_type>::max()) throw RationalOverflow("rational literal too large");
    }
    return static_cast<int_type>(negative ? -value : value);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

inline std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// Non-negative rational extended by +infinity; used for distances, where a
// disconnected terminal set has infinite Steiner distance.
class Distance {
 public:
  constexpr Distance() noexcept = default;
  Distance(Rational value) noexcept : finite_{true}, value_{value} {}  // NOLINT(implicit)

  static constexpr Distance infinity() noexcept { return Distance{}; }

  constexpr bool is_finite() const noexcept { return finite_; }
  const Rational& value() const {
    if (!finite_) throw std::logic_error("value() of an infinite distance");
    return value_;
  }

  friend Distance operator+(const Distance& a, const Distance& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return a.value_ + b.value_;
  }

  friend bool operator==(const Distance& a, const Distance& b) noexcept {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Distance& a, const Distance& b) noexcept {
    if (a.finite_ && b.finite_) return a.value_ <=> b.value_;
    if (a.finite_ == b.finite_) return std::strong_ordering::equal;
    return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  friend Distance min_distance(const Distance& a, const Distance& b) { return b < a ? b : a; }

  std::string str() const { return finite_ ? value_.str() : std::string("inf"); }
  friend std::ostream& operator<<(std::ostream& os, const Distance& d) { return os << d.str(); }

 private:
  bool finite_ = false;
  Rational value_;
};

}  // namespace sgeo

template <>
struct std::hash<sgeo::Rational> {
  std::size_t operator()(const sgeo::Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 31u ^ std::hash<std::int64_t>{}(r.den());
  }
};
