#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "slenderlab/core/error.hpp"
#include "slenderlab/divisible/nadic.hpp"

// BS(1,n) = <a, b | b a b^-1 = a^n> acting on Z[1/n] by x -> n^t x + r.
// a = (0, 1), b = (1, 0).
namespace slenderlab::divisible {

  struct BSElement {
    std::int64_t  t = 0;
    NAdicRational r;

    [[nodiscard]] std::int64_t base() const { return r.base(); }

    bool operator==(BSElement const&) const = default;

    //! "(t, r)"
    [[nodiscard]] std::string to_string() const {
      return "(" + std::to_string(t) + ", " + r.to_string() + ")";
    }
  };

  inline BSElement bs_identity(std::int64_t n) { return {0, NAdicRational(n)}; }
  inline BSElement bs_a(std::int64_t n) { return {0, NAdicRational(n, 1)}; }
  inline BSElement bs_b(std::int64_t n) { return {1, NAdicRational(n)}; }

  //! (t1, r1)(t2, r2) = (t1 + t2, r1 + n^t1 r2)
  [[nodiscard]] inline BSElement bs_mul(BSElement const& g, BSElement const& h) {
    if (g.base() != h.base()) {
      throw PreconditionError("BS(1,n) base mismatch: " + std::to_string(g.base()) + " vs "
                              + std::to_string(h.base()));
    }
    return {g.t + h.t, g.r + h.r.shifted(g.t)};
  }

  //! (-t, -n^-t r)
  [[nodiscard]] inline BSElement bs_inverse(BSElement const& g) { return {-g.t, (-g.r).shifted(-g.t)}; }

  //! g^e by square and multiply; e may be negative.
  [[nodiscard]] inline BSElement bs_pow(BSElement g, std::int64_t e) {
    if (e < 0) {
      g = bs_inverse(g);
      e = -e;
    }
    auto acc = bs_identity(g.base());
    while (e > 0) {
      if (e & 1) {
        acc = bs_mul(acc, g);
      }
      g = bs_mul(g, g);
      e >>= 1;
    }
    return acc;
  }

  //! The retraction onto <b>: b -> b, a -> 1.
  [[nodiscard]] inline std::int64_t retraction_q(BSElement const& g) { return g.t; }

  //! Tokens over a, b, A, B, optionally with integer exponents ("a^3", "B^2"),
  //! whitespace separated or run together.
  [[nodiscard]] inline BSElement bs_parse(std::int64_t n, std::string const& text) {
    auto acc = bs_identity(n);
    for (std::size_t i = 0; i < text.size();) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        ++i;
        continue;
      }
      BSElement g;
      switch (c) {
        case 'a': g = bs_a(n); break;
        case 'b': g = bs_b(n); break;
        case 'A': g = bs_inverse(bs_a(n)); break;
        case 'B': g = bs_inverse(bs_b(n)); break;
        default: throw ParseError(std::string("bad BS(1,n) letter '") + c + "'");
      }
      ++i;
      std::int64_t e = 1;
      if (i < text.size() && text[i] == '^') {
        std::size_t used = 0;
        try {
          e = std::stoll(text.substr(i + 1), &used);
        } catch (std::logic_error const&) {
          throw ParseError("bad exponent in '" + text + "'");
        }
        i += 1 + used;
      }
      acc = bs_mul(acc, bs_pow(g, e));
    }
    return acc;
  }

  struct RootWitness {
    std::int64_t n = 0, k = 0;
    BSElement    x;         // b^-k a b^k
    BigInt       exponent;  // n^k
    BSElement    power;     // x^{n^k}, by repeated multiplication
    bool         verified = false;
  };

  //! x = b^-k a b^k = (0, n^-k), and x multiplied by itself n^k times is a.
  [[nodiscard]] inline RootWitness root_witness(std::int64_t n, std::int64_t k) {
    if (k < 0) {
      throw PreconditionError("root_witness needs k >= 0");
    }
    if (k > 20) {
      throw PreconditionError("root_witness k too large: " + std::to_string(k));
    }
    RootWitness w;
    w.n  = n;
    w.k  = k;
    auto bk = bs_pow(bs_b(n), k);
    w.x  = bs_mul(bs_mul(bs_inverse(bk), bs_a(n)), bk);
    w.exponent = NAdicRational(n).power(static_cast<std::uint64_t>(k));
    w.power    = bs_identity(n);
    for (BigInt i = 0; i < w.exponent; ++i) {
      w.power = bs_mul(w.power, w.x);
    }
    w.verified = w.power == bs_a(n) && w.x.t == 0;
    return w;
  }

}  // namespace slenderlab::divisible
