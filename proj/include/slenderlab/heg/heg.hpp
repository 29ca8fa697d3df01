#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "slenderlab/core/error.hpp"
#include "slenderlab/core/length.hpp"
#include "slenderlab/core/word.hpp"

// Finite-support fragment of the Hawaiian Earring group. Letters are a_n with
// n the circle index; only finitely many letters ever occur.
namespace slenderlab::heg {

  using HegWord = Word;

  //! Letters of index <= N, order kept, result freely reduced.
  [[nodiscard]] inline HegWord project_low(HegWord const& w, std::uint32_t N) {
    HegWord out;
    for (auto g : w) {
      if (g.index() <= N) {
        out.push_back(g);
      }
    }
    return words::free_reduce(out);
  }

  //! Letters of index > N, order kept, result freely reduced.
  [[nodiscard]] inline HegWord project_high(HegWord const& w, std::uint32_t N) {
    HegWord out;
    for (auto g : w) {
      if (g.index() > N) {
        out.push_back(g);
      }
    }
    return words::free_reduce(out);
  }

  struct Block {
    bool    low;  // all letters of index <= N
    HegWord letters;

    bool operator==(Block const&) const = default;
  };

  //! Maximal alternating blocks realising HEG = HEG_N * HEG^N on a word.
  [[nodiscard]] inline std::vector<Block>
  alternating_decomposition(HegWord const& w, std::uint32_t N) {
    std::vector<Block> blocks;
    for (auto g : w) {
      bool low = g.index() <= N;
      if (blocks.empty() || blocks.back().low != low) {
        blocks.push_back({low, {}});
      }
      blocks.back().letters.push_back(g);
    }
    return blocks;
  }

  //! One level W_p, k_p of a nested expression W_1(W_2(W_3(...)^k_3)^k_2)^k_1.
  struct NestedLevel {
    HegWord       word;
    std::uint64_t exponent = 1;
  };

  struct NestedSpec {
    std::vector<NestedLevel> levels;  // levels[p-1] holds W_p, k_p

    [[nodiscard]] std::size_t depth() const { return levels.size(); }

    void validate() const {
      if (levels.empty()) {
        throw PreconditionError("nested spec: depth must be >= 1");
      }
      for (std::size_t p = 0; p < levels.size(); ++p) {
        if (levels[p].word.empty()) {
          throw PreconditionError("nested spec: W_" + std::to_string(p + 1)
                                  + " is empty");
        }
        if (levels[p].exponent < 1) {
          throw PreconditionError("nested spec: k_" + std::to_string(p + 1)
                                  + " must be >= 1");
        }
      }
    }
  };

  //! Parse lines of the form `W=<word tokens> k=<int>`; '#' starts a comment.
  inline NestedSpec parse_nested(std::istream& in) {
    NestedSpec  spec;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) {
        line.resize(h);
      }
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      auto wpos = line.find("W=");
      auto kpos = line.find("k=");
      if (wpos == std::string::npos || kpos == std::string::npos || kpos < wpos) {
        throw ParseError("nested spec line " + std::to_string(lineno)
                         + ": expected 'W=<word> k=<int>'");
      }
      NestedLevel lvl;
      lvl.word = words::parse(line.substr(wpos + 2, kpos - wpos - 2));
      try {
        long long k = std::stoll(line.substr(kpos + 2));
        if (k < 1) {
          throw ParseError("nested spec line " + std::to_string(lineno)
                           + ": k must be >= 1");
        }
        lvl.exponent = static_cast<std::uint64_t>(k);
      } catch (std::logic_error const&) {
        throw ParseError("nested spec line " + std::to_string(lineno)
                         + ": bad exponent");
      }
      spec.levels.push_back(std::move(lvl));
    }
    spec.validate();
    return spec;
  }

  inline NestedSpec parse_nested(std::string const& text) {
    std::istringstream in(text);
    return parse_nested(in);
  }

  //! All truncations U_d (empty), U_{d-1}, ..., U_0 of a nested spec.
  struct NestedChain {
    std::vector<HegWord> U;  // U[p] for p = 0..d

    [[nodiscard]] HegWord const& top() const { return U.front(); }
  };

  //! U_d = 1 and U_{p-1} = W_p U_p^{k_p}, each freely reduced.
  //!
  //! Expanded lengths grow like the product of the exponents; this is meant
  //! for small specs. Use higman_chain_verify to evaluate large ones through
  //! a target group instead.
  [[nodiscard]] inline NestedChain build_nested(NestedSpec const& spec) {
    spec.validate();
    NestedChain chain;
    chain.U.resize(spec.depth() + 1);
    for (std::size_t p = spec.depth(); p >= 1; --p) {
      auto const& lvl = spec.levels[p - 1];
      chain.U[p - 1]  = words::free_reduce(words::concat(
          lvl.word, words::power(chain.U[p], static_cast<std::int64_t>(lvl.exponent))));
    }
    return chain;
  }

  //! A homomorphism phi on finitely many letters a_n, into a group with a
  //! length function and a universal-monotonicity witness.
  template <typename Element>
  struct LetterAssignment {
    std::map<std::uint32_t, Element> images;
    GroupOps<Element>                ops;
    LengthFunction<Element>          length;
    UmWitness                        witness;

    [[nodiscard]] Element evaluate(HegWord const& w) const {
      Element acc = ops.identity();
      for (auto g : w) {
        auto it = images.find(g.index());
        if (it == images.end()) {
          throw PreconditionError("letter assignment is not defined on a"
                                  + std::to_string(g.index()));
        }
        acc = ops.multiply(acc, g.sign() > 0 ? it->second : ops.inverse(it->second));
      }
      return acc;
    }
  };

  struct DescentStep {
    std::size_t   p;               // step from U_p to U_{p-1}
    Length        r_p;             // l(phi(W_p))
    std::uint64_t k_p;             // exponent used
    Length        before;          // l(phi(U_p))
    Length        after;           // l(phi(U_{p-1}))
    bool          exempt = false;  // phi(U_p) = 1, no gain required
    bool          pass   = true;
  };

  struct DescentReport {
    std::vector<Length>      lengths;  // l(phi(U_d)), ..., l(phi(U_0))
    std::vector<DescentStep> steps;
    //! Smallest p at which an unbounded chain would be forced to have
    //! phi(U_p) = 1, namely floor(l(phi(U_0))) + 1.
    std::int64_t             forced_trivial_index = 0;
    bool                     pass = true;
  };

  //! Evaluate the nested chain through phi and check that every level gains
  //! at least one unit of length.
  //!
  //! When \p recompute_exponents is set, k_p is replaced by K_{r_p + 1} from
  //! the target's witness, with r_p = l(phi(W_p)).
  template <typename Element>
  DescentReport higman_chain_verify(NestedSpec const&                 spec,
                                    LetterAssignment<Element> const&  phi,
                                    bool recompute_exponents = true) {
    spec.validate();
    auto const& ops = phi.ops;
    auto const  d   = spec.depth();

    std::vector<Element> images;
    std::vector<Length>  r(d + 1);
    for (std::size_t p = 1; p <= d; ++p) {
      images.push_back(phi.evaluate(spec.levels[p - 1].word));
      if (ops.is_identity(images.back())) {
        throw PreconditionError("phi(W_" + std::to_string(p)
                                + ") = 1: the nested-word hypothesis fails");
      }
      r[p] = phi.length(images.back());
    }

    DescentReport rep;
    Element       u = ops.identity();
    rep.lengths.push_back(phi.length(u));
    for (std::size_t p = d; p >= 1; --p) {
      DescentStep s;
      s.p      = p;
      s.r_p    = r[p];
      s.k_p    = recompute_exponents ? phi.witness(r[p] + 1)
                                     : spec.levels[p - 1].exponent;
      s.before = phi.length(u);
      s.exempt = ops.is_identity(u);
      u        = ops.multiply(images[p - 1], ops.power(u, s.k_p));
      s.after  = phi.length(u);
      s.pass   = s.exempt || s.after >= s.before + 1;
      rep.pass = rep.pass && s.pass;
      rep.lengths.push_back(s.after);
      rep.steps.push_back(s);
    }
    Length top               = rep.lengths.back();
    rep.forced_trivial_index = top.floor() + 1;
    return rep;
  }

}  // namespace slenderlab::heg
