#pragma once

#include <memory>
#include <string>
#include <vector>

#include "slenderlab/diagrams/diagram.hpp"

namespace slenderlab::diagrams {

  //! Up to max_cells cells, each chosen uniformly among the applicable ones,
  //! starting from a random top word over the alphabet. Stops early if no
  //! cell applies or the frontier passes 12 letters.
  template <typename Rng>
  [[nodiscard]] Diagram random_diagram(std::shared_ptr<RuleSet const> const& rules,
                                       std::string const& alphabet, Rng& rng,
                                       std::size_t max_cells, std::size_t max_top = 4) {
    std::string top;
    std::size_t len = 1 + rng() % max_top;
    for (std::size_t i = 0; i < len; ++i) {
      top += alphabet[rng() % alphabet.size()];
    }
    std::string       frontier = top;
    std::vector<Atom> atoms;
    std::size_t       cells = rng() % (max_cells + 1);
    for (std::size_t c = 0; c < cells; ++c) {
      std::vector<Atom> options;
      for (std::size_t r = 0; r < rules->size(); ++r) {
        for (int dir : {+1, -1}) {
          auto const& in = dir > 0 ? (*rules)[r].top : (*rules)[r].bottom;
          for (std::size_t p = 0; p + in.size() <= frontier.size(); ++p) {
            if (frontier.compare(p, in.size(), in) == 0) {
              options.push_back({p, r, dir});
            }
          }
        }
      }
      if (options.empty() || frontier.size() > 12) {
        break;
      }
      auto        a   = options[rng() % options.size()];
      auto const& in  = a.dir > 0 ? (*rules)[a.rule].top : (*rules)[a.rule].bottom;
      auto const& out = a.dir > 0 ? (*rules)[a.rule].bottom : (*rules)[a.rule].top;
      frontier.replace(a.pad, in.size(), out);
      atoms.push_back(a);
    }
    return {rules, top, atoms};
  }

  //! Rules {ab -> ba, a -> aa, bb -> b}: a mix of lengths and a swap rule.
  inline std::shared_ptr<RuleSet const> const& mixed_rules() {
    static auto const r = std::make_shared<RuleSet const>(RuleSet{{"ab", "ba"}, {"a", "aa"}, {"bb", "b"}});
    return r;
  }

}  // namespace slenderlab::diagrams
