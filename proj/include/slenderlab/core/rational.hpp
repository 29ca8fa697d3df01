#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace slenderlab {

  //! Exact rational with 64-bit numerator and positive denominator, always
  //! in lowest terms.
  //!
  //! boost::rational's mixed-type comparison operators recurse forever under
  //! C++20 rewritten-candidate rules, hence this small replacement.
  class Rational {
   public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
      if (den_ == 0) {
        throw std::domain_error("Rational: zero denominator");
      }
      normalize();
    }

    [[nodiscard]] constexpr std::int64_t numerator() const { return num_; }
    [[nodiscard]] constexpr std::int64_t denominator() const { return den_; }

    //! Largest integer <= *this.
    [[nodiscard]] constexpr std::int64_t floor() const {
      auto q = num_ / den_;
      return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
    }
    //! Smallest integer >= *this.
    [[nodiscard]] constexpr std::int64_t ceil() const {
      auto q = num_ / den_;
      return (num_ % den_ != 0 && num_ > 0) ? q + 1 : q;
    }

    friend constexpr Rational operator+(Rational a, Rational const& b) {
      return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend constexpr Rational operator-(Rational a, Rational const& b) {
      return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend constexpr Rational operator*(Rational a, Rational const& b) {
      return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend constexpr Rational operator/(Rational a, Rational const& b) {
      return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    constexpr Rational operator-() const { return Rational(-num_, den_); }
    constexpr Rational& operator+=(Rational const& b) { return *this = *this + b; }
    constexpr Rational& operator-=(Rational const& b) { return *this = *this - b; }

    friend constexpr bool operator==(Rational const&, Rational const&) = default;
    friend constexpr std::strong_ordering operator<=>(Rational const& a, Rational const& b) {
      // denominators are positive
      return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    [[nodiscard]] std::string to_string() const {
      if (den_ == 1) {
        return std::to_string(num_);
      }
      return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, Rational const& r) {
      return os << r.to_string();
    }

   private:
    constexpr void normalize() {
      if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
      }
      auto g = std::gcd(num_, den_);
      if (g > 1) {
        num_ /= g;
        den_ /= g;
      }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
  };

}  // namespace slenderlab
