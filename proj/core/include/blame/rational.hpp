// ============================================================================
// blame/rational.hpp — exact rational arithmetic for the payoff pipeline
// ============================================================================
//
// Threshold propositions compare expected payoffs against exact bounds, so
// the whole valuation pipeline runs on normalized int64 fractions; floating
// point never enters.  Overflow is not a concern at the magnitudes involved
// (utilities are small integers, strategy weights have tiny denominators).
//
// ============================================================================

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace blame {

class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  constexpr Rational(std::int64_t numerator, std::int64_t denominator)
      : num_(numerator), den_(denominator) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  constexpr std::int64_t numerator() const noexcept { return num_; }
  constexpr std::int64_t denominator() const noexcept { return den_; }
  constexpr bool is_integer() const noexcept { return den_ == 1; }

  constexpr Rational operator-() const { return Rational(-num_, den_); }

  friend constexpr Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend constexpr Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  // Normalized representation makes equality memberwise; ordering by
  // cross-multiplication (denominators are positive).
  friend constexpr bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Rational& a,
                                                    const Rational& b) noexcept {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Parses "7", "-5", or "p/q" (whitespace-trimmed); throws on anything else.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: integers print bare, everything else as "p/q".
std::string to_string(const Rational& r);

}  // namespace blame
