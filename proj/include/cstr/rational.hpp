#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cstr {

// Exact rational arithmetic on 64-bit numerator/denominator, always kept
// normalized (den > 0, gcd(|num|, den) = 1). Intermediate products go
// through __int128; anything that cannot be reduced back into 64 bits
// throws instead of silently wrapping. The chain analysis relies on these
// values being exact, so there is no fallback to floating point here.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize_();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Parses "n" or "n/d"; throws on malformed input.
  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        return Rational(checked_stoll_(text));
      }
      return Rational(checked_stoll_(text.substr(0, slash)),
                      checked_stoll_(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    } catch (const std::out_of_range&) {
      throw std::overflow_error("Rational: value out of range in '" + text + "'");
    }
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                 static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide_(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide_(n, d);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    __int128 n = static_cast<__int128>(a.num_) * b.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.num_;
    return from_wide_(n, d);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  static std::int64_t checked_stoll_(const std::string& s) {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  }

  static Rational from_wide_(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd_wide_(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
    constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
    if (n < lo || n > hi || d > hi) {
      throw std::overflow_error("Rational: 64-bit overflow after reduction");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static __int128 gcd_wide_(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize_() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

}  // namespace cstr
