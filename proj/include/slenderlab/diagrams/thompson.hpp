#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "slenderlab/core/error.hpp"
#include "slenderlab/diagrams/diagram.hpp"
#include "slenderlab/diagrams/reduce.hpp"
#include "slenderlab/diagrams/tree_pair.hpp"

// Thompson's group F as the diagram group of the single rule xx -> x over
// the base word x.
namespace slenderlab::diagrams::thompson {

  inline std::shared_ptr<RuleSet const> const& rules() {
    static auto const r = std::make_shared<RuleSet const>(RuleSet{{"xx", "x"}});
    return r;
  }

  //! x -> xx at the given pad.
  inline Atom split(std::size_t pad) { return {pad, 0, -1}; }
  //! xx -> x at the given pad.
  inline Atom merge(std::size_t pad) { return {pad, 0, +1}; }

  inline Diagram epsilon(std::size_t letters = 1) {
    return Diagram::identity(rules(), std::string(letters, 'x'));
  }

  //! Splits along the domain tree (preorder), then merges along the range
  //! tree (reverse preorder). A caret at preorder position p sits over the
  //! leaf whose index is the number of leaves before p.
  [[nodiscard]] inline Diagram to_diagram(TreePair const& p) {
    std::vector<Atom> atoms;
    std::size_t       zeros = 0;
    for (char c : p.domain) {
      if (c == '1') {
        atoms.push_back(split(zeros));
      } else {
        ++zeros;
      }
    }
    std::vector<Atom> merges;
    zeros = 0;
    for (char c : p.range) {
      if (c == '1') {
        merges.push_back(merge(zeros));
      } else {
        ++zeros;
      }
    }
    atoms.insert(atoms.end(), merges.rbegin(), merges.rend());
    return {rules(), "x", std::move(atoms)};
  }

  struct Letter {
    std::size_t index;
    int         sign;
  };

  //! Tokens `x<n>` and their inverses `X<n>` or `x<n>^-1`.
  [[nodiscard]] inline std::vector<Letter> parse_word(std::string const& text) {
    std::istringstream in(text);
    std::string        tok;
    std::vector<Letter> out;
    while (in >> tok) {
      int sign = +1;
      if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
        sign = -1;
        tok.resize(tok.size() - 3);
      }
      if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X')
          || tok.find_first_not_of("0123456789", 1) != std::string::npos) {
        throw ParseError("bad F generator '" + tok + "'");
      }
      if (tok[0] == 'X') {
        sign = -sign;
      }
      out.push_back({std::stoul(tok.substr(1)), sign});
    }
    return out;
  }

  [[nodiscard]] inline TreePair treepair_of(std::vector<Letter> const& w) {
    TreePair acc;
    for (auto l : w) {
      auto g = treepair_generator(l.index);
      acc    = treepair_mul(acc, l.sign > 0 ? g : treepair_inverse(g));
    }
    return acc;
  }

  //! Reduced diagram of a word in x_n^{±1}, via tree-pair arithmetic.
  [[nodiscard]] inline Diagram f_element(std::string const& word) {
    return canonical(to_diagram(treepair_of(parse_word(word))));
  }

  //! Same element through the diagram engine alone: compose generator
  //! diagrams, then cancel dipoles.
  [[nodiscard]] inline Diagram f_element_engine(std::string const& word) {
    Diagram acc = epsilon();
    for (auto l : parse_word(word)) {
      auto g = to_diagram(treepair_generator(l.index));
      acc    = d_compose(acc, l.sign > 0 ? g : d_inverse(g));
    }
    return d_reduce(acc);
  }

}  // namespace slenderlab::diagrams::thompson
