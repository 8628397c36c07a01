// Exact rational arithmetic on 64-bit numerator/denominator.
//
// All intermediates go through __int128 and every result is range-checked, so
// an overflow raises rat_overflow instead of silently wrapping.  The small-case
// suites this library runs stay far below the 64-bit range; the check is there
// to make any future blow-up loud.

#pragma once

#include <cstdint>
#include <compare>
#include <functional>
#include <stdexcept>
#include <string>

namespace kstar {

struct rat_overflow : std::overflow_error {
  rat_overflow() : std::overflow_error("rational overflow past 64 bits") {}
};

namespace detail {

inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t narrow64(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw rat_overflow{};
  return static_cast<std::int64_t>(v);
}

} // namespace detail

class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
  Rat(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return make(n, d);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return make(n, d);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    __int128 l = (__int128)a.num_ * b.den_;
    __int128 r = (__int128)b.num_ * a.den_;
    return l < r ? std::strong_ordering::less
         : l > r ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  double to_double() const { return double(num_) / double(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Parses "p" or "p/q".  Throws std::invalid_argument on junk.
  static Rat parse(const std::string& s) {
    size_t slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(std::stoll(s));
      std::int64_t p = std::stoll(s.substr(0, slash));
      std::int64_t q = std::stoll(s.substr(slash + 1));
      return Rat(p, q);
    } catch (const std::out_of_range&) {
      throw rat_overflow{};
    }
  }

 private:
  static Rat make(__int128 n, __int128 d) {
    Rat r;
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    r.num_ = detail::narrow64(n);
    r.den_ = detail::narrow64(d);
    return r;
  }
  void assign(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

// n! as a rational (handy for state-sum vertex factors and series assembly).
inline Rat factorial(int n) {
  Rat r = 1;
  for (int i = 2; i <= n; ++i) r *= Rat(i);
  return r;
}

} // namespace kstar

template <>
struct std::hash<kstar::Rat> {
  size_t operator()(const kstar::Rat& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 1315423911u ^
           std::hash<std::int64_t>{}(r.den());
  }
};
