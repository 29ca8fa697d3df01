#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "catch_amalgamated.hpp"

#include "slenderlab/divisible/baumslag_solitar.hpp"
#include "slenderlab/divisible/nadic.hpp"
#include "slenderlab/divisible/slender.hpp"

using namespace slenderlab;
using namespace slenderlab::divisible;
using boost::multiprecision::cpp_rational;

namespace {

  cpp_rational as_rational(NAdicRational const& x) {
    return cpp_rational(x.numerator()) / cpp_rational(x.power(x.exponent()));
  }

  NAdicRational random_nadic(std::int64_t n, std::mt19937_64& rng) {
    auto num = static_cast<std::int64_t>(rng() % 41) - 20;
    return NAdicRational(n, num, rng() % 5);
  }

  BSElement random_bs(std::int64_t n, std::mt19937_64& rng) {
    auto t = static_cast<std::int64_t>(rng() % 7) - 3;
    return {t, random_nadic(n, rng)};
  }

  // Independent model: the affine map x -> n^t x + r on Q, composed as
  // functions (g h)(x) = g(h(x)).
  struct Affine {
    cpp_rational scale, shift;
    Affine       then_inner(Affine const& h) const { return {scale * h.scale, scale * h.shift + shift}; }
    bool         operator==(Affine const&) const = default;
  };

  Affine as_affine(BSElement const& g) {
    cpp_rational s = 1;
    for (std::int64_t i = 0; i < std::abs(g.t); ++i) {
      s *= g.base();
    }
    if (g.t < 0) {
      s = 1 / s;
    }
    return {s, as_rational(g.r)};
  }

}  // namespace

TEST_CASE("n-adic rationals", "[divisible]") {
  NAdicRational x(2, 6, 3);
  CHECK(x.numerator() == 3);
  CHECK(x.exponent() == 2);
  CHECK(x.to_string() == "3/2^2");
  CHECK(NAdicRational(2, 0, 5).exponent() == 0);
  CHECK(NAdicRational(3, 9, 2) == NAdicRational(3, 1));
  CHECK((NAdicRational(2, 1, 1) + NAdicRational(2, 1, 1)) == NAdicRational(2, 1));
  CHECK(NAdicRational(2, 1).shifted(-3) == NAdicRational(2, 1, 3));
  CHECK(NAdicRational(2, 1, 3).shifted(5) == NAdicRational(2, 4));
  CHECK_THROWS_AS(NAdicRational(1, 1), PreconditionError);
  CHECK_THROWS_AS(NAdicRational(2, 1) + NAdicRational(3, 1), PreconditionError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 6);
    auto a = random_nadic(n, rng);
    auto b = random_nadic(n, rng);
    CHECK(as_rational(a + b) == as_rational(a) + as_rational(b));
    CHECK(as_rational(a * b) == as_rational(a) * as_rational(b));
    CHECK(as_rational(a - b) == as_rational(a) - as_rational(b));
  }
}

TEST_CASE("BS(1,n) products", "[divisible]") {
  auto a = bs_a(2), b = bs_b(2);
  CHECK(bs_mul(b, a) == BSElement{1, NAdicRational(2, 2)});
  CHECK(bs_mul(a, b) == BSElement{1, NAdicRational(2, 1)});
  CHECK_FALSE(bs_mul(a, b) == bs_mul(b, a));
  CHECK(bs_mul(bs_mul(b, a), bs_inverse(b)) == bs_pow(a, 2));
  CHECK(bs_mul(b, bs_inverse(b)) == bs_identity(2));
  CHECK(bs_parse(2, "b a B") == bs_parse(2, "a^2"));
  CHECK(bs_parse(2, "") == bs_identity(2));
  CHECK_THROWS_AS(bs_parse(2, "c"), ParseError);
  CHECK_THROWS_AS(bs_mul(bs_a(2), bs_a(3)), PreconditionError);

  for (std::int64_t n = 2; n <= 7; ++n) {
    auto an = bs_a(n), bn = bs_b(n);
    CHECK(bs_mul(bs_mul(bn, an), bs_inverse(bn)) == bs_pow(an, n));
  }
}

TEST_CASE("retraction onto <b>", "[divisible]") {
  CHECK(retraction_q(bs_parse(2, "b^2 a^3")) == 2);
  CHECK(retraction_q(bs_a(2)) == 0);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    auto g = random_bs(3, rng);
    auto h = random_bs(3, rng);
    CHECK(retraction_q(bs_mul(g, h)) == retraction_q(g) + retraction_q(h));
  }
}

TEST_CASE("affine model group laws", "[divisible][property]") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 10000; ++i) {
    std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 6);
    auto g = random_bs(n, rng);
    auto h = random_bs(n, rng);
    auto k = random_bs(n, rng);
    CHECK(bs_mul(bs_mul(g, h), k) == bs_mul(g, bs_mul(h, k)));
    CHECK(bs_mul(g, bs_identity(n)) == g);
    CHECK(bs_mul(bs_identity(n), g) == g);
    CHECK(bs_mul(g, bs_inverse(g)) == bs_identity(n));
    CHECK(bs_mul(bs_inverse(g), g) == bs_identity(n));
    CHECK(as_affine(bs_mul(g, h)) == as_affine(g).then_inner(as_affine(h)));
  }
}

TEST_CASE("kernel is Z[1/n]", "[divisible][property]") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 6);
    auto r = random_nadic(n, rng);
    auto s = random_nadic(n, rng);
    BSElement g{0, r}, h{0, s};
    CHECK(bs_mul(g, h) == BSElement{0, r + s});
    CHECK(retraction_q(g) == 0);
  }
}

TEST_CASE("root witnesses", "[divisible]") {
  auto w = root_witness(2, 1);
  CHECK(w.x == BSElement{0, NAdicRational(2, 1, 1)});
  CHECK(w.verified);
  CHECK(root_witness(2, 6).exponent == 64);
  CHECK(root_witness(2, 6).verified);
  CHECK(root_witness(3, 4).exponent == 81);
  CHECK(root_witness(3, 4).verified);
  for (std::int64_t n : {2, 3}) {
    for (std::int64_t k = 0; k <= 8; ++k) {
      auto r = root_witness(n, k);
      CHECK(r.verified);
      CHECK(bs_pow(r.x, static_cast<std::int64_t>(r.exponent)) == bs_a(n));
    }
  }
  CHECK_THROWS_AS(root_witness(2, -1), PreconditionError);
}

TEST_CASE("divisibility in Z[1/n]", "[divisible]") {
  auto r = zn_divisible(NAdicRational(2, 1), 3, 8);
  REQUIRE(r.first_failure);
  CHECK(*r.first_failure == 1);
  CHECK_FALSE(r.infinitely_divisible);

  auto d = zn_divisible(NAdicRational(2, 1), 2, 8);
  CHECK_FALSE(d.first_failure);
  CHECK(d.infinitely_divisible);
  CHECK(*d.steps[4].witness == NAdicRational(2, 1, 5));

  auto z = zn_divisible(NAdicRational(2), 5, 4);
  CHECK_FALSE(z.first_failure);
  CHECK(z.infinitely_divisible);

  // 9/2 is divisible by 3 twice, not three times
  auto nine = zn_divisible(NAdicRational(2, 9, 1), 3, 4);
  CHECK(*nine.first_failure == 3);

  // agrees with exact rational arithmetic
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 6);
    auto x = random_nadic(n, rng);
    for (std::int64_t p : {2, 3, 5, 7}) {
      auto rep = zn_divisible(x, p, 3);
      for (auto const& s : rep.steps) {
        cpp_rational q = as_rational(x);
        for (std::int64_t j = 0; j < s.j; ++j) {
          q /= p;
        }
        // q in Z[1/n] iff its reduced denominator divides a power of n
        auto den = denominator(q);
        for (int it = 0; it < 64 && den != 1; ++it) {
          auto g = boost::multiprecision::gcd(den, boost::multiprecision::cpp_int(n));
          if (g == 1) {
            break;
          }
          den /= g;
        }
        CHECK(s.divisible == (den == 1));
      }
    }
  }
  CHECK_THROWS_AS(zn_divisible(NAdicRational(2, 1), 4, 1), PreconditionError);
}

TEST_CASE("slender criterion", "[divisible]") {
  auto z2 = slender_criterion(parse_descriptor("Z[1/2]"));
  CHECK(z2.slender);
  CHECK(z2.reasons.size() == 1);
  auto q = slender_criterion(parse_descriptor("Q"));
  CHECK_FALSE(q.slender);
  CHECK_FALSE(q.reduced);
  CHECK(q.torsion_free);
  auto t = slender_criterion(parse_descriptor("Z+Z/4"));
  CHECK_FALSE(t.slender);
  CHECK_FALSE(t.torsion_free);
  CHECK(t.reduced);
  CHECK(t.reasons.at(0).find("Z/4") != std::string::npos);
  CHECK(slender_criterion(parse_descriptor("Z + Z")).slender);
  CHECK(slender_criterion(parse_descriptor("0")).slender);
  CHECK(parse_descriptor("Z+Z/4+Z[1/6]+Q").to_string() == "Z+Z/4+Z[1/6]+Q");
  CHECK_THROWS_AS(parse_descriptor("Z/1"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("R"), ParseError);
  CHECK_THROWS_AS(parse_descriptor("Z+"), ParseError);
}
