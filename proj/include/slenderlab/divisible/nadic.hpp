#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "slenderlab/core/error.hpp"

namespace slenderlab::divisible {

  using BigInt = boost::multiprecision::cpp_int;

  //! numerator / base^exponent, kept with exponent = 0 or base not dividing
  //! the numerator. Zero is 0 / base^0.
  class NAdicRational {
   public:
    explicit NAdicRational(std::int64_t base = 2, BigInt numerator = 0, std::uint64_t exponent = 0)
        : base_(base), num_(std::move(numerator)), exp_(exponent) {
      if (base_ < 2) {
        throw PreconditionError("Z[1/n] needs n >= 2, got " + std::to_string(base_));
      }
      normalize();
    }

    static NAdicRational integer(std::int64_t base, BigInt v) { return NAdicRational(base, std::move(v)); }

    [[nodiscard]] std::int64_t  base() const { return base_; }
    [[nodiscard]] BigInt const& numerator() const { return num_; }
    [[nodiscard]] std::uint64_t exponent() const { return exp_; }
    [[nodiscard]] bool          is_zero() const { return num_ == 0; }

    NAdicRational operator-() const { return NAdicRational(base_, -num_, exp_); }

    friend NAdicRational operator+(NAdicRational const& a, NAdicRational const& b) {
      a.same_base(b);
      auto e = std::max(a.exp_, b.exp_);
      return NAdicRational(a.base_, a.num_ * a.power(e - a.exp_) + b.num_ * b.power(e - b.exp_), e);
    }

    friend NAdicRational operator-(NAdicRational const& a, NAdicRational const& b) { return a + -b; }

    friend NAdicRational operator*(NAdicRational const& a, NAdicRational const& b) {
      a.same_base(b);
      return NAdicRational(a.base_, a.num_ * b.num_, a.exp_ + b.exp_);
    }

    //! Multiplication by base^t for any integer t.
    [[nodiscard]] NAdicRational shifted(std::int64_t t) const {
      if (t >= 0) {
        auto up = static_cast<std::uint64_t>(t);
        if (up >= exp_) {
          return NAdicRational(base_, num_ * power(up - exp_), 0);
        }
        return NAdicRational(base_, num_, exp_ - up);
      }
      return NAdicRational(base_, num_, exp_ + static_cast<std::uint64_t>(-t));
    }

    [[nodiscard]] NAdicRational times(BigInt const& k) const { return NAdicRational(base_, num_ * k, exp_); }

    bool operator==(NAdicRational const& o) const {
      return base_ == o.base_ && num_ == o.num_ && exp_ == o.exp_;
    }

    //! "r" or "r/n^e".
    [[nodiscard]] std::string to_string() const {
      auto s = num_.str();
      if (exp_ > 0) {
        s += "/" + std::to_string(base_) + "^" + std::to_string(exp_);
      }
      return s;
    }

    [[nodiscard]] BigInt power(std::uint64_t e) const {
      BigInt r = 1;
      for (std::uint64_t i = 0; i < e; ++i) {
        r *= base_;
      }
      return r;
    }

   private:
    void normalize() {
      if (num_ == 0) {
        exp_ = 0;
        return;
      }
      while (exp_ > 0 && num_ % base_ == 0) {
        num_ /= base_;
        --exp_;
      }
    }

    void same_base(NAdicRational const& o) const {
      if (base_ != o.base_) {
        throw PreconditionError("Z[1/n] base mismatch: " + std::to_string(base_) + " vs "
                                + std::to_string(o.base_));
      }
    }

    std::int64_t  base_;
    BigInt        num_;
    std::uint64_t exp_;
  };

  inline bool is_prime(std::int64_t p) {
    if (p < 2) {
      return false;
    }
    for (std::int64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  struct DivisibilityStep {
    std::int64_t                 j;
    bool                         divisible;
    std::optional<NAdicRational> witness;  // y with p^j y = x
  };

  struct DivisibilityReport {
    NAdicRational                 x;
    std::int64_t                  p;
    std::vector<DivisibilityStep> steps;
    std::optional<std::int64_t>   first_failure;
    bool                          infinitely_divisible;  // verdict for every depth
  };

  //! For j = 1..depth: is x / p^j in Z[1/n]? With x = r/n^e normalized, it is
  //! iff p | n or p^j | r. Every witness is checked by multiplying back.
  [[nodiscard]] inline DivisibilityReport zn_divisible(NAdicRational const& x, std::int64_t p,
                                                       std::int64_t depth) {
    if (!is_prime(p)) {
      throw PreconditionError(std::to_string(p) + " is not prime");
    }
    if (depth < 1) {
      throw PreconditionError("depth must be >= 1");
    }
    auto const n   = x.base();
    bool const p_n = n % p == 0;
    DivisibilityReport rep{x, p, {}, std::nullopt, x.is_zero() || p_n};
    BigInt pj = 1;
    for (std::int64_t j = 1; j <= depth; ++j) {
      pj *= p;
      DivisibilityStep step{j, false, std::nullopt};
      if (p_n) {
        // 1/p = (n/p) / n
        BigInt cof = 1;
        for (std::int64_t i = 0; i < j; ++i) {
          cof *= n / p;
        }
        step.witness = NAdicRational(n, x.numerator() * cof, x.exponent() + static_cast<std::uint64_t>(j));
      } else if (x.numerator() % pj == 0) {
        step.witness = NAdicRational(n, x.numerator() / pj, x.exponent());
      }
      if (step.witness) {
        if (step.witness->times(pj) != x) {
          throw std::logic_error("divisibility witness does not multiply back");
        }
        step.divisible = true;
      } else if (!rep.first_failure) {
        rep.first_failure = j;
      }
      rep.steps.push_back(std::move(step));
    }
    return rep;
  }

}  // namespace slenderlab::divisible
