#include <functional>
#include <random>
#include <string>

#include "catch_amalgamated.hpp"

#include "slenderlab/heg/heg.hpp"

using namespace slenderlab;
using namespace slenderlab::heg;

namespace {

  Word w(char const* s) { return words::parse(s); }

  HegWord random_heg(std::mt19937_64& rng, std::size_t max_len, std::uint32_t max_index) {
    HegWord     out;
    std::size_t n = rng() % (max_len + 1);
    for (std::size_t i = 0; i < n; ++i) {
      out.emplace_back(static_cast<std::uint32_t>(rng() % (max_index + 1)), rng() % 2 ? 1 : -1);
    }
    return out;
  }

  LetterAssignment<Word> to_f2(std::map<std::uint32_t, Word> images) {
    return {std::move(images), free_group::ops(), free_group::word_length("F2"),
            free_group::witness()};
  }

}  // namespace

TEST_CASE("project_low and project_high examples", "[heg]") {
  CHECK(project_low(w("a0 a2 A1 a2"), 1) == w("a0 A1"));
  CHECK(project_low(w("a0 a1"), 5) == w("a0 a1"));
  CHECK(project_low(w("a2 a2"), 1).empty());
  CHECK(project_high(w("a0 a2 A1 a2"), 1) == w("a2 a2"));
  CHECK(project_high(w("a0 a1"), 1).empty());
  // surviving letters cancel after projection
  CHECK(project_low(w("a0 a5 A0"), 1).empty());
}

TEST_CASE("alternating_decomposition examples", "[heg]") {
  auto b = alternating_decomposition(w("a0 a2 a2 a1"), 1);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Block{true, w("a0")});
  CHECK(b[1] == Block{false, w("a2 a2")});
  CHECK(b[2] == Block{true, w("a1")});
  CHECK(alternating_decomposition(w("a0 a1"), 1).size() == 1);
  auto single = alternating_decomposition(w("a2"), 1);
  REQUIRE(single.size() == 1);
  CHECK_FALSE(single[0].low);
}

TEST_CASE("projections are idempotent and blocks partition the word", "[heg][property]") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    auto          u = free_reduce(random_heg(rng, 30, 6));
    std::uint32_t N = static_cast<std::uint32_t>(rng() % 6);
    auto          lo = project_low(u, N);
    auto          hi = project_high(u, N);
    CHECK(project_low(lo, N) == lo);
    CHECK(project_high(hi, N) == hi);
    CHECK(project_high(lo, N).empty());
    CHECK(project_low(hi, N).empty());

    auto blocks = alternating_decomposition(u, N);
    Word joined;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      CHECK_FALSE(blocks[k].letters.empty());
      if (k > 0) {
        CHECK(blocks[k].low != blocks[k - 1].low);
      }
      for (auto g : blocks[k].letters) {
        CHECK((g.index() <= N) == blocks[k].low);
      }
      joined.insert(joined.end(), blocks[k].letters.begin(), blocks[k].letters.end());
    }
    CHECK(joined == u);
  }
}

TEST_CASE("projections are homomorphisms", "[heg][property]") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    auto          u = random_heg(rng, 20, 5);
    auto          v = random_heg(rng, 20, 5);
    std::uint32_t N = static_cast<std::uint32_t>(rng() % 5);
    CHECK(project_low(words::concat(u, v), N)
          == free_reduce(words::concat(project_low(u, N), project_low(v, N))));
    CHECK(project_high(words::concat(u, v), N)
          == free_reduce(words::concat(project_high(u, N), project_high(v, N))));
  }
}

TEST_CASE("build_nested examples", "[heg]") {
  NestedSpec two{{{w("a1"), 2}, {w("a2"), 2}}};
  auto       chain = build_nested(two);
  REQUIRE(chain.U.size() == 3);
  CHECK(chain.U[2].empty());
  CHECK(chain.U[1] == w("a2"));
  CHECK(chain.U[0] == w("a1 a2 a2"));

  NestedSpec one{{{w("a1"), 7}}};
  CHECK(build_nested(one).top() == w("a1"));

  // oracle: textual expansion of a1 (a2 (a3)^2)^2
  std::function<std::string(int)> expand = [&](int p) -> std::string {
    if (p > 3) {
      return "";
    }
    std::string inner = expand(p + 1);
    return " a" + std::to_string(p) + inner + inner;
  };
  NestedSpec three{{{w("a1"), 2}, {w("a2"), 2}, {w("a3"), 2}}};
  auto       top = build_nested(three).top();
  CHECK(top == words::parse(expand(1)));
  CHECK(top.size() == 7);

  CHECK_THROWS_AS(build_nested(NestedSpec{}), PreconditionError);
  CHECK_THROWS_AS(build_nested(NestedSpec{{{Word{}, 1}}}), PreconditionError);
}

TEST_CASE("nested spec file format", "[heg]") {
  auto spec = parse_nested("# comment\nW=a1 A2 k=3\n\nW=a2 k=1\n");
  REQUIRE(spec.depth() == 2);
  CHECK(spec.levels[0].word == w("a1 A2"));
  CHECK(spec.levels[0].exponent == 3);
  CHECK(spec.levels[1].exponent == 1);
  CHECK_THROWS_AS(parse_nested("W=a1\n"), ParseError);
  CHECK_THROWS_AS(parse_nested("W=a1 k=0\n"), ParseError);
  CHECK_THROWS_AS(parse_nested("W=a1 k=x\n"), ParseError);
  CHECK_THROWS_AS(parse_nested(""), PreconditionError);
}

TEST_CASE("higman_chain_verify: depth two into F2", "[heg]") {
  NestedSpec spec{{{w("a1"), 1}, {w("a2"), 1}}};
  auto       phi = to_f2({{1, w("a0")}, {2, w("a1")}});
  auto       rep = higman_chain_verify(spec, phi);
  REQUIRE(rep.lengths.size() == 3);
  CHECK(rep.lengths[0] == 0);
  CHECK(rep.lengths[1] == 1);  // U_1 = b
  CHECK(rep.lengths[2] == 4);  // U_0 = a b^3
  REQUIRE(rep.steps.size() == 2);
  CHECK(rep.steps[0].exempt);
  CHECK(rep.steps[1].k_p == 3);
  CHECK(rep.steps[1].r_p == 1);
  CHECK(rep.pass);
  CHECK(rep.forced_trivial_index == 5);
  // oracle: evaluate a b^3 directly
  CHECK(phi.evaluate(build_nested(NestedSpec{{{w("a1"), 3}, {w("a2"), 1}}}).top())
        == w("a0 a1 a1 a1"));
}

TEST_CASE("higman_chain_verify rejects trivial images", "[heg]") {
  NestedSpec spec{{{w("a1"), 1}, {w("a2 A2"), 1}}};
  auto       phi = to_f2({{1, w("a0")}, {2, w("a1")}});
  CHECK_THROWS_AS(higman_chain_verify(spec, phi), PreconditionError);
  NestedSpec killed{{{w("a1"), 1}, {w("a3"), 1}}};
  auto       phi2 = to_f2({{1, w("a0")}, {3, Word{}}});
  CHECK_THROWS_AS(higman_chain_verify(killed, phi2), PreconditionError);
  auto phi3 = to_f2({{1, w("a0")}});
  CHECK_THROWS_AS(higman_chain_verify(killed, phi3), PreconditionError);
}

TEST_CASE("higman descent at depth 8 with a_i -> a b^i", "[heg]") {
  NestedSpec                    spec;
  std::map<std::uint32_t, Word> images;
  for (std::uint32_t p = 1; p <= 8; ++p) {
    spec.levels.push_back({Word{Generator::positive(p)}, 1});
    Word img{Generator::positive(0)};
    img.insert(img.end(), p, Generator::positive(1));
    images[p] = img;
  }
  auto rep = higman_chain_verify(spec, to_f2(images));
  CHECK(rep.pass);
  for (std::size_t i = 1; i < rep.steps.size(); ++i) {
    auto const& s = rep.steps[i];
    CHECK(s.k_p == static_cast<std::uint64_t>(s.r_p.numerator()) + 2);
    CHECK(s.after >= s.before + 1);
    CHECK(rep.lengths[i + 1] > rep.lengths[i]);
  }
}

TEST_CASE("descent holds for random specs into F2", "[heg][property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    NestedSpec                    spec;
    std::map<std::uint32_t, Word> images;
    std::size_t                   d = 1 + rng() % 4;
    for (std::uint32_t idx = 0; idx < 8; ++idx) {
      Word img;
      do {
        img = free_reduce(random_heg(rng, 3, 1));
      } while (img.empty());
      images[idx] = img;
    }
    for (std::size_t p = 1; p <= d; ++p) {
      HegWord wp;
      Word    image;
      do {
        wp.clear();
        std::size_t len = 1 + rng() % 3;
        for (std::size_t i = 0; i < len; ++i) {
          wp.emplace_back(static_cast<std::uint32_t>(p + rng() % 3), rng() % 2 ? 1 : -1);
        }
        image = to_f2(images).evaluate(wp);
      } while (image.empty());
      spec.levels.push_back({wp, 1});
    }
    auto rep = higman_chain_verify(spec, to_f2(images));
    CHECK(rep.pass);
  }
}
