// Exact rational arithmetic over int64 with gcd reduction.
//
// The equality cases this library must decide (30/7, 9/2) demand exact
// comparisons; decimal output is presentation-only and produced by exact
// long division, never by floating point. Magnitudes stay far below the
// int64 range for everything in scope (the largest inputs are the genus
// sweep at m = 10^6, numerators < 10^8), and intermediates go through
// __int128, so overflow is structurally impossible here; a guard asserts it
// anyway.
#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "np3/error.hpp"

namespace np3 {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // always positive; gcd(|num|, den) == 1

  static Rational of(std::int64_t n, std::int64_t d) {
    require(d != 0, Errc::BadParam, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Rational{n, d};
  }

  static Rational integer(std::int64_t n) { return Rational{n, 1}; }

  friend bool operator==(const Rational&, const Rational&) = default;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(a.den) * b.den);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(a.den) * b.den);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(static_cast<__int128>(a.num) * b.num,
                   static_cast<__int128>(a.den) * b.den);
  }

  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // "num/den", always with the explicit denominator ("3/1").
  std::string fraction_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Exact decimal rendering to `places` digits, round-half-up on the last.
  std::string decimal_string(int places = 6) const {
    const bool negative = num < 0;
    unsigned __int128 n = negative ? static_cast<unsigned __int128>(-static_cast<__int128>(num))
                                   : static_cast<unsigned __int128>(num);
    const auto d = static_cast<unsigned __int128>(den);
    unsigned __int128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    unsigned __int128 scaled = n * scale;
    unsigned __int128 q = scaled / d;
    if ((scaled % d) * 2 >= d) ++q;  // round half up
    unsigned __int128 whole = q / scale;
    unsigned __int128 frac = q % scale;

    auto digits = [](unsigned __int128 x) {
      if (x == 0) return std::string("0");
      std::string s;
      while (x > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
      }
      return s;
    };
    std::string frac_str = digits(frac);
    frac_str.insert(frac_str.begin(), static_cast<size_t>(places) - frac_str.size(), '0');
    return (negative ? "-" : "") + digits(whole) + "." + frac_str;
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

 private:
  static Rational from128(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 kMax = INT64_MAX;
    require(n <= kMax && -n <= kMax && d <= kMax, Errc::ValidationFailed,
            "rational overflow");
    return Rational{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
  }
};

inline Rational operator+(const Rational& a, std::int64_t b) { return a + Rational::integer(b); }
inline Rational operator-(const Rational& a, std::int64_t b) { return a - Rational::integer(b); }
inline Rational operator-(std::int64_t a, const Rational& b) { return Rational::integer(a) - b; }
inline bool operator<(const Rational& a, std::int64_t b) { return a < Rational::integer(b); }
inline bool operator>(const Rational& a, std::int64_t b) { return a > Rational::integer(b); }
inline bool operator>=(const Rational& a, std::int64_t b) { return a >= Rational::integer(b); }
inline bool operator<=(const Rational& a, std::int64_t b) { return a <= Rational::integer(b); }

}  // namespace np3
