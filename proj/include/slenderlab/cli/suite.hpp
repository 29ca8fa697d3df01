#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "slenderlab/cli/report.hpp"
#include "slenderlab/core/length.hpp"
#include "slenderlab/diagrams/counterexample.hpp"
#include "slenderlab/diagrams/random.hpp"
#include "slenderlab/diagrams/thompson.hpp"
#include "slenderlab/divisible/baumslag_solitar.hpp"
#include "slenderlab/divisible/slender.hpp"
#include "slenderlab/graph_products/kernel.hpp"
#include "slenderlab/heg/heg.hpp"
#include "slenderlab/hyperbolic/checks.hpp"

// The reproduction table: one function per numbered item, each returning
// records. Shared by `reproduce` and `selftest`.
namespace slenderlab::cli::suite {

  struct Options {
    std::uint64_t seed         = 1;
    bool          tamper_theta = false;  // use a 5-cell non-(x,x) theta
  };

  inline diagrams::Diagram theta(Options const& o) {
    auto t = diagrams::family::theta();
    return o.tamper_theta ? diagrams::d_compose(t, diagrams::family::rho()) : t;
  }

  inline Json params_json(diagrams::CounterexampleParams const& p) {
    return Json{{"k", p.k}, {"k1", p.k1}, {"k2", p.k2}, {"m", p.m}};
  }

  inline Report family_counts(Options const& o) {
    Report r;
    auto   rep = diagrams::theta_family_check(theta(o), 10);
    r.add("theta cells", 4, rep.theta_cells, rep.theta_cells == 4);
    r.add("theta is an (x,x)-diagram", true, rep.composable, rep.composable);
    Json expected = Json::array(), actual = Json::array();
    for (std::size_t m = 1; m <= 10; ++m) {
      expected.push_back(2 + 2 * m);
    }
    for (auto c : rep.power_cells) {
      actual.push_back(c);
    }
    r.add("theta^m cells, m = 1..10", expected, actual, rep.pass && expected == actual);
    return r;
  }

  inline Report counterexample(Options const& o, std::int64_t n) {
    Report r;
    auto   tag = "n=" + std::to_string(n) + " ";
    auto   p   = diagrams::CounterexampleParams::choose(n);
    auto   rep = diagrams::make_counterexample(n, theta(o));
    auto   big = std::int64_t{1} << p.m;
    r.add(tag + "params", params_json(p), params_json(rep.params), p.admissible());
    r.add(tag + "Delta_n cells", 2 + 6 * (n - 1), rep.delta_n_cells,
          static_cast<std::int64_t>(rep.delta_n_cells) == 2 + 6 * (n - 1));
    r.add(tag + "Psi cells", big + 1, rep.psi_cells, static_cast<std::int64_t>(rep.psi_cells) == big + 1);
    r.add(tag + "Delta is reduced", true, rep.delta_was_reduced, rep.delta_was_reduced);
    r.add(tag + "l(Delta) = closed form", rep.closed_form, rep.delta_reduced,
          static_cast<std::int64_t>(rep.delta_reduced) == rep.closed_form);
    r.add(tag + "l(chi^n)", p.chi_power_cells(), rep.chi_power_cells, rep.chi_power_ok());
    r.add(tag + "l(Delta^n) <= l(chi^n) + 2 l(Psi) and < l(Delta)",
          Json{{"at_most", rep.power_bound}, {"below", rep.delta_reduced}}, rep.power_cells,
          rep.power_ok());
    r.notes[tag + "stated figures"] =
        Json{{"chi_power_cells", {{"stated", p.stated_chi_power_cells()}, {"measured", rep.chi_power_cells}}},
             {"power_bound",
              {{"stated", rep.stated_power_bound},
               {"measured", rep.power_cells},
               {"within", rep.power_within_stated_bound()}}}};
    return r;
  }

  inline Report confluence(Options const& o, std::size_t diagrams_count = 1000, std::size_t orders = 10) {
    using namespace diagrams;
    Report          r;
    std::mt19937_64 rng(o.seed);
    std::size_t     bad = 0, unreduced = 0;
    for (std::size_t i = 0; i < diagrams_count; ++i) {
      auto const& rules = i % 2 ? mixed_rules() : thompson::rules();
      auto        d     = random_diagram(rules, i % 2 ? "ab" : "x", rng, 40);
      auto        first = d_reduce(d);
      auto        ser   = serialize(first);
      unreduced += is_reduced(first) ? 0 : 1;
      for (std::size_t k = 0; k < orders; ++k) {
        auto again = d_reduce(d, &rng);
        bad += (again.cells() != first.cells() || serialize(again) != ser) ? 1 : 0;
      }
    }
    r.add("diagrams x orders", diagrams_count * orders, diagrams_count * orders, true);
    r.add("reductions disagreeing with the first", 0, bad, bad == 0);
    r.add("reductions left with a dipole", 0, unreduced, unreduced == 0);
    return r;
  }

  inline std::string random_f_word(std::mt19937_64& rng, std::size_t max_len) {
    std::string w;
    std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
      bool inv = rng() % 2 == 1;
      auto idx = rng() % 4;
      w += (w.empty() ? "" : " ") + std::string(inv ? "X" : "x") + std::to_string(idx);
    }
    return w;
  }

  inline Report f_oracle(Options const& o, std::size_t words = 200) {
    using namespace diagrams;
    Report          r;
    std::mt19937_64 rng(o.seed);
    std::size_t     count_bad = 0, mul_bad = 0;
    for (std::size_t i = 0; i < words; ++i) {
      auto w  = random_f_word(rng, 6);
      auto v  = random_f_word(rng, 6);
      auto pw = thompson::treepair_of(thompson::parse_word(w));
      auto pv = thompson::treepair_of(thompson::parse_word(v));
      count_bad += pw.carets() == thompson::f_element_engine(w).cells() ? 0 : 1;
      auto lhs = thompson::to_diagram(treepair_mul(pw, pv));
      auto rhs = d_reduce(d_compose(thompson::to_diagram(pw), thompson::to_diagram(pv)));
      mul_bad += d_equal(lhs, rhs) ? 0 : 1;
    }
    r.add("words", words, words, true);
    r.add("caret total != engine cells", 0, count_bad, count_bad == 0);
    r.add("products disagreeing through the conversion", 0, mul_bad, mul_bad == 0);
    return r;
  }

  inline Report square_growth(Options const& o, std::size_t samples = 1000) {
    using namespace graph_products;
    Report          r;
    std::mt19937_64 rng(o.seed);
    std::size_t     checked = 0, graphs = 0, no_growth = 0, identity_bad = 0, produced = 0;
    // spread samples over at least ten graphs
    std::size_t const per_graph = std::max<std::size_t>(1, samples / 10);
    while (checked < samples) {
      auto G = random_graph_product(rng, 5);
      ++graphs;
      std::size_t here = 0;
      for (auto const& s : sample_kernel(G, rng(), 100)) {
        if (!s.nontrivial || checked >= samples || here >= per_graph) {
          continue;
        }
        ++here;
        auto g = square_growth_check(G, s.word);
        no_growth += g.grows ? 0 : 1;
        ++produced;
        identity_bad += g.identity_holds && g.square_word_reduced ? 0 : 1;
        ++checked;
      }
    }
    r.add("nontrivial kernel samples", samples, checked, checked == samples);
    r.add("random graphs", ">= 10", graphs, graphs >= 10);
    r.add("samples with l(g^2) <= l(g)", 0, no_growth, no_growth == 0);
    r.add("decompositions produced", samples, produced, produced == samples);
    r.add("decompositions breaking 2l(w2)+3l(w1)+2l(w0)", 0, identity_bad, identity_bad == 0);
    return r;
  }

  inline Report hyperbolic_lab(Options const&) {
    using namespace hyperbolic;
    Report r;
    auto   F2 = presentations::free(2);
    auto   B5 = ball(F2, 5);
    r.add("F2 radius-5 ball size", 485, B5.size(), B5.size() == 485);
    std::size_t flat = 0;
    for (std::size_t i = 1; i < B5.size(); ++i) {
      auto const& g = B5.element(i);
      flat += free_reduce(words::concat(g, g)).size() > g.size() ? 0 : 1;
    }
    r.add("g != 1 with l(g^2) <= l(g)", 0, flat, flat == 0);
    auto pe = min_power_exponent(B5, 10);
    r.add("min_power_exponent", 2, pe.exponent ? Json(*pe.exponent) : Json(nullptr),
          pe.exponent && *pe.exponent == 2);
    auto d = delta_estimate(ball(F2, 3));
    r.add("F2 radius-3 delta (exhaustive)", "0", to_string(d.delta), d.exhaustive && d.delta == 0);
    auto S   = presentations::surface(2);
    auto c16 = c16_check(S);
    r.add("genus-2 C'(1/6)", true, c16.holds, c16.holds);
    r.add("genus-2 max piece", 1, c16.max_piece, c16.max_piece == 1);
    auto red = dehn_reduce(S, S.relators()[0]);
    r.add("dehn_reduce(relator)", "", words::to_string(red), red.empty());
    return r;
  }

  inline Report higman_descent(Options const&) {
    using namespace heg;
    Report                        r;
    NestedSpec                    spec;
    std::map<std::uint32_t, Word> images;
    for (std::uint32_t p = 1; p <= 8; ++p) {
      spec.levels.push_back({Word{Generator::positive(p)}, 1});
      Word img{Generator::positive(0)};
      img.insert(img.end(), p, Generator::positive(1));
      images[p] = img;
    }
    LetterAssignment<Word> phi{images, free_group::ops(), free_group::word_length("F2"),
                               free_group::witness(4)};
    auto   rep = higman_chain_verify(spec, phi);
    bool   k_ok = true, gain_ok = true;
    Json   gains = Json::array();
    for (auto const& s : rep.steps) {
      k_ok    = k_ok && s.k_p == static_cast<std::uint64_t>(s.r_p.numerator()) + 2;
      gain_ok = gain_ok && (s.exempt || s.after >= s.before + 1);
      gains.push_back(to_string(s.after - s.before));
    }
    r.add("depth", 8, spec.depth(), spec.depth() == 8);
    r.add("k_p = r_p + 2", true, k_ok, k_ok);
    r.add("every step gains >= 1", true, gain_ok && rep.pass, gain_ok && rep.pass);
    r.info("gains", gains);

    auto ball4 = hyperbolic::ball(hyperbolic::presentations::free(2), 4);
    auto K     = free_group::witness(4);
    std::size_t bad = 0;
    for (std::int64_t rr = 1; rr <= 6; ++rr) {
      if (K(Length(rr)) != static_cast<std::uint64_t>(rr + 1)) {
        ++bad;
      }
      for (std::size_t i = 1; i < ball4.size(); ++i) {
        auto const& g = ball4.element(i);
        Word        pw;
        for (std::int64_t j = 0; j <= rr; ++j) {
          pw.insert(pw.end(), g.begin(), g.end());
        }
        bad += free_reduce(pw).size() >= g.size() + static_cast<std::size_t>(rr) ? 0 : 1;
      }
    }
    r.add("K_r = r + 1 failures on the radius-4 ball, r <= 6", 0, bad, bad == 0);
    return r;
  }

  inline Report bs_witnesses(Options const&) {
    using namespace divisible;
    Report r;
    bool   rel = true;
    for (std::int64_t n = 2; n <= 7; ++n) {
      rel = rel && bs_mul(bs_mul(bs_b(n), bs_a(n)), bs_inverse(bs_b(n))) == bs_pow(bs_a(n), n);
    }
    r.add("b a b^-1 = a^n, n = 2..7", true, rel, rel);
    bool roots = true;
    for (std::int64_t n : {2, 3}) {
      for (std::int64_t k = 0; k <= 8; ++k) {
        roots = roots && root_witness(n, k).verified;
      }
    }
    r.add("(b^-k a b^k)^(n^k) = a, n in {2,3}, k <= 8", true, roots, roots);
    auto dv = zn_divisible(NAdicRational(2, 1), 3, 8);
    r.add("zn_divisible(1, 3, 8), n = 2: first failure", 1,
          dv.first_failure ? Json(*dv.first_failure) : Json(nullptr), dv.first_failure == 1);
    for (auto [desc, want] : {std::pair{"Z[1/2]", true}, std::pair{"Q", false}, std::pair{"Z+Z/4", false}}) {
      auto v = slender_criterion(parse_descriptor(desc));
      r.add(std::string("slender(") + desc + ")", want, v.slender, v.slender == want);
    }
    return r;
  }

  struct Item {
    int                                   number;
    std::string                           title;
    std::function<Report(Options const&)> run;
  };

  inline std::vector<Item> items() {
    return {
        {1, "diagram family counts", family_counts},
        {2, "counterexample n=2", [](Options const& o) { return counterexample(o, 2); }},
        {3, "counterexample n=3", [](Options const& o) { return counterexample(o, 3); }},
        {4, "dipole-reduction confluence", [](Options const& o) { return confluence(o); }},
        {5, "F oracle equivalence", [](Options const& o) { return f_oracle(o); }},
        {6, "graph-product square growth", [](Options const& o) { return square_growth(o); }},
        {7, "hyperbolic lab", hyperbolic_lab},
        {8, "Higman descent", higman_descent},
        {9, "BS(1,n) witnesses", bs_witnesses},
    };
  }

  //! Runs one item; an exception becomes a single failed record.
  inline Report run_item(Item const& item, Options const& o) {
    Report r;
    try {
      r = item.run(o);
    } catch (std::exception const& e) {
      r.add("error", nullptr, e.what(), false);
    }
    for (auto& rec : r.records) {
      rec.name = std::to_string(item.number) + ". " + item.title + ": " + rec.name;
    }
    Json prefixed = Json::object();
    for (auto const& [k, v] : r.notes.items()) {
      prefixed[std::to_string(item.number) + ". " + k] = v;
    }
    r.notes = std::move(prefixed);
    return r;
  }

}  // namespace slenderlab::cli::suite
