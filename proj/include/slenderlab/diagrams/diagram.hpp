#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "slenderlab/core/error.hpp"

// Diagrams over a semigroup presentation, stored as a top word plus a
// sequence of positioned rule applications (a vertical decomposition).
// Letters are single non-space characters.
namespace slenderlab::diagrams {

  struct Rule {
    std::string top;
    std::string bottom;

    bool operator==(Rule const&) const = default;
  };

  using RuleSet = std::vector<Rule>;

  //! One cell in context: rule `rule` applied at `pad` letters from the
  //! left, forward (top -> bottom, dir = +1) or inverse (dir = -1).
  struct Atom {
    std::size_t pad  = 0;
    std::size_t rule = 0;
    int         dir  = +1;

    bool operator==(Atom const&) const = default;
  };

  class Diagram {
   public:
    Diagram() : rules_(std::make_shared<RuleSet const>()) {}

    Diagram(std::shared_ptr<RuleSet const> rules, std::string top, std::vector<Atom> atoms = {})
        : rules_(std::move(rules)), top_(std::move(top)), atoms_(std::move(atoms)) {
      if (!rules_) {
        throw PreconditionError("diagram needs a rule set");
      }
      for (std::size_t r = 0; r < rules_->size(); ++r) {
        if ((*rules_)[r].top.empty() || (*rules_)[r].bottom.empty()) {
          throw PreconditionError("rule " + std::to_string(r) + " has an empty side");
        }
      }
      bottom_ = top_;
      for (std::size_t i = 0; i < atoms_.size(); ++i) {
        apply(bottom_, atoms_[i], i);
      }
    }

    //! ε(u): no cells, top = bottom = u.
    static Diagram identity(std::shared_ptr<RuleSet const> rules, std::string word) {
      return {std::move(rules), std::move(word)};
    }

    [[nodiscard]] std::string const& top() const { return top_; }
    [[nodiscard]] std::string const& bottom() const { return bottom_; }
    [[nodiscard]] std::vector<Atom> const& atoms() const { return atoms_; }
    [[nodiscard]] std::size_t cells() const { return atoms_.size(); }
    [[nodiscard]] std::shared_ptr<RuleSet const> const& rules() const { return rules_; }

    //! Word consumed (first) and produced (second) by an atom.
    [[nodiscard]] std::pair<std::string const&, std::string const&> sides(Atom const& a) const {
      auto const& r = (*rules_)[a.rule];
      if (a.dir > 0) {
        return {r.top, r.bottom};
      }
      return {r.bottom, r.top};
    }

    //! Same rules, top word and atom sequence.
    bool operator==(Diagram const& o) const {
      return *rules_ == *o.rules_ && top_ == o.top_ && atoms_ == o.atoms_;
    }

   private:
    void apply(std::string& frontier, Atom const& a, std::size_t index) const {
      if (a.rule >= rules_->size() || (a.dir != 1 && a.dir != -1)) {
        throw PreconditionError("atom " + std::to_string(index) + ": bad rule or direction");
      }
      auto [in, out] = sides(a);
      if (a.pad + in.size() > frontier.size() || frontier.compare(a.pad, in.size(), in) != 0) {
        throw PreconditionError("atom " + std::to_string(index) + " does not apply to '"
                                + frontier + "' at pad " + std::to_string(a.pad));
      }
      frontier.replace(a.pad, in.size(), out);
    }

    std::shared_ptr<RuleSet const> rules_;
    std::string                    top_;
    std::vector<Atom>              atoms_;
    std::string                    bottom_;
  };

  namespace detail {
    inline void same_rules(Diagram const& a, Diagram const& b) {
      if (a.rules() != b.rules() && *a.rules() != *b.rules()) {
        throw PreconditionError("diagrams over different rule sets");
      }
    }
  }  // namespace detail

  //! Δ0 + Δ1: side by side. Δ1's cells run after Δ0's, shifted past bottom(Δ0).
  [[nodiscard]] inline Diagram d_sum(Diagram const& a, Diagram const& b) {
    detail::same_rules(a, b);
    std::vector<Atom> atoms = a.atoms();
    for (auto at : b.atoms()) {
      at.pad += a.bottom().size();
      atoms.push_back(at);
    }
    return {a.rules(), a.top() + b.top(), std::move(atoms)};
  }

  //! Δ0 ∘ Δ1: Δ0 on top, bottom(Δ0) glued to top(Δ1). No reduction.
  [[nodiscard]] inline Diagram d_compose(Diagram const& a, Diagram const& b) {
    detail::same_rules(a, b);
    if (a.bottom() != b.top()) {
      throw PreconditionError("d_compose: bottom '" + a.bottom() + "' does not match top '"
                              + b.top() + "'");
    }
    std::vector<Atom> atoms = a.atoms();
    atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
    return {a.rules(), a.top(), std::move(atoms)};
  }

  //! Mirror image: atoms reversed, orientations flipped.
  [[nodiscard]] inline Diagram d_inverse(Diagram const& d) {
    std::vector<Atom> atoms(d.atoms().rbegin(), d.atoms().rend());
    for (auto& a : atoms) {
      a.dir = -a.dir;
    }
    return {d.rules(), d.bottom(), std::move(atoms)};
  }

  //! Left-to-right sum of several diagrams.
  [[nodiscard]] inline Diagram d_sum(std::vector<Diagram> const& parts) {
    if (parts.empty()) {
      throw PreconditionError("d_sum of nothing");
    }
    Diagram out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      out = d_sum(out, parts[i]);
    }
    return out;
  }

  //! `top: <word>` then one `pad=<int> rule=<id> dir=+|-` line per atom.
  [[nodiscard]] inline std::string serialize(Diagram const& d) {
    std::string out = "top: " + d.top() + "\n";
    for (auto const& a : d.atoms()) {
      out += "pad=" + std::to_string(a.pad) + " rule=" + std::to_string(a.rule)
             + " dir=" + (a.dir > 0 ? "+" : "-") + "\n";
    }
    return out;
  }

  //! Inverse of serialize. Accepts U+2212 as a minus sign; `#` starts a comment.
  [[nodiscard]] inline Diagram parse_diagram(std::istream& in,
                                             std::shared_ptr<RuleSet const> rules) {
    std::string       line, top;
    bool              have_top = false;
    std::vector<Atom> atoms;
    std::size_t       lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.resize(hash);
      }
      std::istringstream ls(line);
      std::string        tok;
      if (!(ls >> tok)) {
        continue;
      }
      auto where = " (line " + std::to_string(lineno) + ")";
      if (!have_top) {
        if (tok != "top:") {
          throw ParseError("diagram must start with `top: <word>`" + where);
        }
        ls >> top;
        std::string extra;
        if (ls >> extra) {
          throw ParseError("top word must not contain spaces" + where);
        }
        have_top = true;
        continue;
      }
      Atom a;
      bool got_pad = false, got_rule = false, got_dir = false;
      do {
        auto eq = tok.find('=');
        if (eq == std::string::npos) {
          throw ParseError("expected key=value, got '" + tok + "'" + where);
        }
        auto key = tok.substr(0, eq), val = tok.substr(eq + 1);
        try {
          if (key == "pad" && !got_pad) {
            std::size_t used = 0;
            a.pad            = std::stoul(val, &used);
            got_pad          = used == val.size() && val[0] != '-';
          } else if (key == "rule" && !got_rule) {
            std::size_t used = 0;
            a.rule           = std::stoul(val, &used);
            got_rule         = used == val.size() && val[0] != '-';
          } else if (key == "dir" && !got_dir) {
            if (val == "+") {
              a.dir = 1;
            } else if (val == "-" || val == "−") {
              a.dir = -1;
            } else {
              throw ParseError("bad dir '" + val + "'" + where);
            }
            got_dir = true;
          } else {
            throw ParseError("unexpected key '" + key + "'" + where);
          }
        } catch (std::logic_error const&) {
          throw ParseError("bad value in '" + tok + "'" + where);
        }
      } while (ls >> tok);
      if (!got_pad || !got_rule || !got_dir) {
        throw ParseError("atom needs pad, rule and dir" + where);
      }
      atoms.push_back(a);
    }
    if (!have_top) {
      throw ParseError("missing `top:` line");
    }
    try {
      return {std::move(rules), top, std::move(atoms)};
    } catch (PreconditionError const& e) {
      throw ParseError(e.what());
    }
  }

  [[nodiscard]] inline Diagram parse_diagram(std::string const& text,
                                             std::shared_ptr<RuleSet const> rules) {
    std::istringstream in(text);
    return parse_diagram(in, std::move(rules));
  }

}  // namespace slenderlab::diagrams
