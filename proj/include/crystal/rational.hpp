// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace crystal {

/// Exact rational arithmetic on 64-bit terms; plenty for desk-scale
/// polytope queries. Comparisons cross-multiply in 128 bits.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long num) : num_(num) {}
  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    normalize();
  }

  /// Parses "p" or "p/q" with optional leading minus.
  static Rational parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  std::string str() const {
    return is_integer() ? std::to_string(num_)
                        : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a) { return {-a.num_, a.den_}; }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto to_ll = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational component");
    std::size_t pos = 0;
    long long v = std::stoll(std::string(s), &pos);
    if (pos != s.size())
      throw std::invalid_argument("bad rational: " + std::string(s));
    return v;
  };
  if (slash == std::string_view::npos) return Rational(to_ll(text));
  return Rational(to_ll(text.substr(0, slash)), to_ll(text.substr(slash + 1)));
}

}  // namespace crystal
