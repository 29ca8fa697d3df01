#include <deque>
#include <map>
#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "slenderlab/diagrams/counterexample.hpp"
#include "slenderlab/diagrams/diagram.hpp"
#include "slenderlab/diagrams/random.hpp"
#include "slenderlab/diagrams/reduce.hpp"
#include "slenderlab/diagrams/thompson.hpp"

using namespace slenderlab;
using namespace slenderlab::diagrams;
namespace th = slenderlab::diagrams::thompson;

namespace {

  // Literal reading of dipole cancellation on atom sequences: search the
  // closure under swaps of adjacent independent atoms for an adjacent pair
  // at the same pad that undo each other; cancel it and start over.
  struct SwapOracle {
    RuleSet const& rules;

    std::size_t in_len(Atom const& a) const {
      return (a.dir > 0 ? rules[a.rule].top : rules[a.rule].bottom).size();
    }
    std::size_t out_len(Atom const& a) const {
      return (a.dir > 0 ? rules[a.rule].bottom : rules[a.rule].top).size();
    }

    // a then b adjacent; if they act on disjoint intervals, return b then a.
    std::optional<std::pair<Atom, Atom>> swap(Atom a, Atom b) const {
      if (b.pad >= a.pad + out_len(a)) {
        b.pad = b.pad - out_len(a) + in_len(a);
        return std::pair{b, a};
      }
      if (b.pad + in_len(b) <= a.pad) {
        a.pad = a.pad - in_len(b) + out_len(b);
        return std::pair{b, a};
      }
      return std::nullopt;
    }

    static std::string key(std::vector<Atom> const& s) {
      std::string k;
      for (auto const& a : s) {
        k += std::to_string(a.pad) + "," + std::to_string(a.rule) + (a.dir > 0 ? "+;" : "-;");
      }
      return k;
    }

    std::vector<Atom> reduce(std::vector<Atom> seq) const {
      for (;;) {
        std::set<std::string>         seen{key(seq)};
        std::deque<std::vector<Atom>> todo{seq};
        bool                          cancelled = false;
        while (!todo.empty() && !cancelled) {
          auto cur = todo.front();
          todo.pop_front();
          for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            auto const& a = cur[i];
            auto const& b = cur[i + 1];
            if (a.rule == b.rule && a.dir == -b.dir && a.pad == b.pad) {
              cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i),
                        cur.begin() + static_cast<std::ptrdiff_t>(i) + 2);
              seq       = cur;
              cancelled = true;
              break;
            }
            if (auto s = swap(a, b)) {
              auto next     = cur;
              next[i]       = s->first;
              next[i + 1]   = s->second;
              if (seen.insert(key(next)).second) {
                todo.push_back(std::move(next));
              }
            }
          }
        }
        if (!cancelled) {
          return seq;
        }
      }
    }
  };

  Diagram eps(std::size_t n) { return th::epsilon(n); }

}  // namespace

TEST_CASE("d_sum", "[diagram]") {
  auto rho = family::rho();
  auto s   = d_sum(rho, eps(1));
  CHECK(s.cells() == 1);
  CHECK(s.top() == "xx");
  CHECK(s.bottom() == "xxx");
  CHECK(d_sum(eps(2), eps(3)) == eps(5));

  // Δ1's cells are shifted past bottom(Δ0)
  auto t = d_sum(rho, rho);
  CHECK(t.atoms()[1].pad == 2);
  CHECK(t.bottom() == "xxxx");

  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    auto a = th::f_element_engine("x0 x1 X0");
    auto b = d_reduce(random_diagram(mixed_rules(), "ab", rng, 10));
    auto c = d_reduce(random_diagram(mixed_rules(), "ab", rng, 10));
    auto bc = d_sum(b, c);
    CHECK(bc.cells() == b.cells() + c.cells());
    CHECK(is_reduced(bc));
    CHECK(is_reduced(d_sum(a, a)));
  }
}

TEST_CASE("d_compose and d_inverse", "[diagram]") {
  auto rho = family::rho();
  auto rr  = d_compose(rho, d_inverse(rho));
  CHECK(rr.cells() == 2);
  CHECK(rr.top() == "x");
  CHECK(d_inverse(rho).top() == "xx");
  CHECK(d_inverse(rho).bottom() == "x");
  CHECK(d_reduce(rr) == eps(1));

  auto theta = family::theta();
  CHECK(d_compose(theta, eps(1)) == theta);
  auto tt = d_compose(theta, theta);
  CHECK(tt.cells() == 8);
  CHECK(d_reduce(tt).cells() == 6);
  CHECK_THROWS_AS(d_compose(rho, rho), PreconditionError);

  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    auto d = random_diagram(mixed_rules(), "ab", rng, 20);
    CHECK(d_inverse(d_inverse(d)) == d);
    CHECK(d_reduce(d_compose(d, d_inverse(d))) == Diagram::identity(d.rules(), d.top()));
  }
}

TEST_CASE("d_reduce on small cases", "[diagram]") {
  auto theta = family::theta();
  CHECK(theta.cells() == 4);
  CHECK(is_reduced(theta));
  CHECK(d_reduce(theta) == canonical(theta));
  // a dipole whose cells are far apart in the sequence
  Diagram far(th::rules(), "xx",
              {th::split(0), th::split(2), th::split(3), th::merge(0), th::merge(2),
               th::merge(1)});
  CHECK(far.bottom() == "xx");
  CHECK(d_reduce(far).cells() == 0);
}

TEST_CASE("d_reduce matches exhaustive swap search", "[diagram][property]") {
  std::mt19937_64 rng(77);
  for (auto const& [rules, alphabet] :
       std::vector<std::pair<std::shared_ptr<RuleSet const>, std::string>>{
           {th::rules(), "x"}, {mixed_rules(), "ab"}}) {
    SwapOracle oracle{*rules};
    for (int i = 0; i < 150; ++i) {
      auto d   = random_diagram(rules, alphabet, rng, 7, 3);
      auto ref = Diagram(rules, d.top(), oracle.reduce(d.atoms()));
      auto red = d_reduce(d);
      CHECK(red.cells() == ref.cells());
      CHECK(red == canonical(ref));
      CHECK(red.bottom() == d.bottom());
    }
  }
}

TEST_CASE("dipole reduction is confluent", "[diagram][property]") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 1000; ++i) {
    auto const& rules    = i % 2 ? mixed_rules() : th::rules();
    auto        d        = random_diagram(rules, i % 2 ? "ab" : "x", rng, 40);
    auto        first    = d_reduce(d);
    auto        expected = serialize(first);
    CHECK(is_reduced(first));
    for (int order = 0; order < 10; ++order) {
      auto r = d_reduce(d, &rng);
      CHECK(r.cells() == first.cells());
      CHECK(serialize(r) == expected);
    }
  }
}

TEST_CASE("canonical form is invariant under independent swaps", "[diagram][property]") {
  std::mt19937_64 rng(9);
  SwapOracle      oracle{*mixed_rules()};
  for (int i = 0; i < 300; ++i) {
    auto d     = random_diagram(mixed_rules(), "ab", rng, 15);
    auto atoms = d.atoms();
    for (int s = 0; s < 50 && atoms.size() > 1; ++s) {
      std::size_t k = rng() % (atoms.size() - 1);
      if (auto sw = oracle.swap(atoms[k], atoms[k + 1])) {
        atoms[k]     = sw->first;
        atoms[k + 1] = sw->second;
      }
    }
    Diagram shuffled(d.rules(), d.top(), atoms);
    CHECK(shuffled.bottom() == d.bottom());
    CHECK(canonical(shuffled) == canonical(d));
  }
}

TEST_CASE("group axioms in F", "[diagram][property]") {
  std::mt19937_64 rng(31);
  auto            random_f = [&]() {
    std::string w;
    std::size_t len = rng() % 6;
    for (std::size_t i = 0; i < len; ++i) {
      w += rng() % 2 ? "x" : "X";
      w += std::to_string(rng() % 3) + " ";
    }
    return th::f_element(w);
  };
  for (int i = 0; i < 1000; ++i) {
    auto a = random_f(), b = random_f(), c = random_f();
    CHECK(d_reduce(d_compose(d_reduce(d_compose(a, b)), c))
          == d_reduce(d_compose(a, d_reduce(d_compose(b, c)))));
    CHECK(d_reduce(d_compose(a, d_inverse(a))) == eps(1));
    CHECK(d_reduce(d_compose(d_inverse(a), a)) == eps(1));
    CHECK(d_reduce(d_compose(a, eps(1))) == a);
  }
}

TEST_CASE("serialization round trips", "[diagram]") {
  auto theta = family::theta();
  auto text  = serialize(theta);
  CHECK(text.rfind("top: x\n", 0) == 0);
  CHECK(parse_diagram(text, th::rules()) == theta);
  CHECK(parse_diagram("top: x\npad=0 rule=0 dir=\xe2\x88\x92\n", th::rules()) == family::rho());
  CHECK_THROWS_AS(parse_diagram("pad=0 rule=0 dir=+\n", th::rules()), ParseError);
  CHECK_THROWS_AS(parse_diagram("top: x\npad=0 rule=0 dir=+\n", th::rules()), ParseError);
  CHECK_THROWS_AS(parse_diagram("top: x\npad=0 rule=0\n", th::rules()), ParseError);
  CHECK_THROWS_AS(parse_diagram("top: x\npad=0 rule=7 dir=-\n", th::rules()), ParseError);
  CHECK_THROWS_AS(parse_diagram("top: x\npad=-1 rule=0 dir=-\n", th::rules()), ParseError);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    auto d = random_diagram(mixed_rules(), "ab", rng, 20);
    CHECK(parse_diagram(serialize(d), mixed_rules()) == d);
  }
}

TEST_CASE("theta family counts", "[diagram][family]") {
  auto rep = theta_family_check(family::theta(), 10);
  CHECK(rep.pass);
  CHECK(rep.theta_cells == 4);
  REQUIRE(rep.power_cells.size() == 10);
  for (std::size_t m = 1; m <= 10; ++m) {
    CHECK(rep.power_cells[m - 1] == 2 + 2 * m);
  }
  // 5-cell variant: not an (x, x)-diagram, rejected
  auto bad = theta_family_check(d_compose(family::theta(), family::rho()));
  CHECK(bad.theta_cells == 5);
  CHECK_FALSE(bad.composable);
  CHECK_FALSE(bad.pass);
  // a 4-cell (x, x)-diagram with the wrong growth is rejected too
  auto flat = theta_family_check(d_compose(family::rho(), d_compose(d_inverse(family::rho()),
                                                                     d_compose(family::rho(),
                                                                               d_inverse(family::rho())))));
  CHECK_FALSE(flat.pass);

  for (std::int64_t n = 2; n <= 5; ++n) {
    CHECK(family::delta_n(family::theta(), n).cells() == static_cast<std::size_t>(2 + 6 * (n - 1)));
  }
  CHECK(family::left_comb(34).cells() == 33);
}

TEST_CASE("counterexample parameters", "[diagram][family]") {
  auto p2 = CounterexampleParams::choose(2);
  CHECK(p2.k == 4);
  CHECK(p2.k1 == 4);
  CHECK(p2.k2 == 19);
  CHECK(p2.m == 5);
  CHECK(p2.admissible());
  CHECK(p2.closed_form_length() == 100);
  CHECK(p2.stated_power_bound() == 74);
  CHECK(p2.power_bound() == 78);
  auto p3 = CounterexampleParams::choose(3);
  CHECK(p3.k == 9);
  CHECK(p3.k1 == 5);
  CHECK(p3.k2 == 31);
  CHECK(p3.m == 6);
  CHECK(p3.closed_form_length() == 258);
  CHECK(p3.stated_power_bound() == 148);
  CHECK(p3.power_bound() == 156);
  for (std::int64_t n = 2; n <= 12; ++n) {
    auto p = CounterexampleParams::choose(n);
    CHECK(p.admissible());
    // minimality of m and k
    CHECK((std::int64_t{1} << (p.m - 1)) - 1 - p.k1 - n * p.k <= n + 1);
    CHECK(2 * n * n >= 2 * (p.k - 1) + 2);
  }
  CHECK_THROWS_AS(CounterexampleParams::choose(1), PreconditionError);
}

TEST_CASE("counterexample n = 2", "[diagram][family]") {
  auto r = make_counterexample(2);
  CHECK(r.theta_cells == 4);
  CHECK(r.delta_n_cells == 8);
  CHECK(r.psi_cells == 33);
  CHECK(r.delta.top() == "x");
  CHECK(r.delta.bottom() == "x");
  CHECK(r.delta_was_reduced);
  CHECK(r.delta_cells == 100);
  CHECK(r.delta_reduced == 100);
  CHECK(r.closed_form == 100);
  CHECK(r.power_cells <= 74);
  CHECK(r.power_cells < 100);
  CHECK(r.power_within_stated_bound());
  // Hand count of reduced χ^2: two splits (Γ1), θ^-1, θ, two merges (Γ2).
  CHECK(r.chi_power_cells == 2 + 4 + 4 + 2);
  CHECK_FALSE(r.chi_power_matches_stated());
  CHECK(r.power_bound == 12 + 66);
  CHECK(r.pass());

  CHECK_THROWS_AS(make_counterexample(2, d_compose(family::theta(), family::rho())),
                  PreconditionError);
}

TEST_CASE("counterexample n = 3", "[diagram][family]") {
  auto r = make_counterexample(3);
  CHECK(r.params.k == 9);
  CHECK(r.params.k1 == 5);
  CHECK(r.params.k2 == 31);
  CHECK(r.params.m == 6);
  CHECK(r.psi_cells == 65);
  CHECK(r.delta_was_reduced);
  CHECK(r.delta_reduced == 258);
  CHECK(r.closed_form == 258);
  // Γ1 3 + (4 + 6) + (4 + 6) + Γ2 3.
  CHECK(r.chi_power_cells == 26);
  CHECK(r.power_bound == 26 + 130);
  CHECK(r.power_cells <= 156);
  CHECK(r.power_cells < 258);
  CHECK(r.pass());
}

TEST_CASE("left comb psi meets rho", "[diagram][family]") {
  auto p     = CounterexampleParams::choose(2);
  auto comb  = family::left_comb((std::size_t{1} << p.m) + 2);
  auto chi   = family::chi(family::theta(), p);
  auto delta = d_compose(d_compose(comb, chi), d_inverse(comb));
  CHECK_FALSE(is_reduced(delta));
  CHECK(d_reduce(delta).cells() < 100);

  auto psi = family::psi(p.m);
  CHECK(psi.bottom().size() == 34);
  CHECK(is_reduced(d_compose(d_compose(psi, chi), d_inverse(psi))));
}
