#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slenderlab/core/error.hpp"

// Elements of Thompson's group F as pairs of finite binary trees. Trees are
// preorder strings: '1' is a caret, '0' a leaf.
namespace slenderlab::diagrams {

  namespace tree {

    //! Index just past the subtree starting at i.
    inline std::size_t skip(std::string const& t, std::size_t i) {
      std::size_t need = 1;
      while (need > 0) {
        if (i >= t.size()) {
          throw PreconditionError("malformed tree '" + t + "'");
        }
        need += t[i] == '1' ? 1 : -1;
        ++i;
      }
      return i;
    }

    inline bool valid(std::string const& t) {
      if (t.empty()) {
        return false;
      }
      std::size_t need = 1;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (need == 0 || (t[i] != '0' && t[i] != '1')) {
          return false;
        }
        need += t[i] == '1' ? 1 : -1;
      }
      return need == 0;
    }

    inline std::size_t carets(std::string const& t) {
      return static_cast<std::size_t>(std::count(t.begin(), t.end(), '1'));
    }

    inline std::size_t leaves(std::string const& t) { return carets(t) + 1; }

    //! Smallest common refinement.
    inline std::string join(std::string const& a, std::size_t& i, std::string const& b,
                            std::size_t& j) {
      if (a[i] == '0') {
        ++i;
        auto e = skip(b, j);
        auto s = b.substr(j, e - j);
        j      = e;
        return s;
      }
      if (b[j] == '0') {
        ++j;
        auto e = skip(a, i);
        auto s = a.substr(i, e - i);
        i      = e;
        return s;
      }
      ++i;
      ++j;
      auto left  = join(a, i, b, j);
      auto right = join(a, i, b, j);
      return "1" + left + right;
    }

    inline std::string join(std::string const& a, std::string const& b) {
      std::size_t i = 0, j = 0;
      return join(a, i, b, j);
    }

    //! For t a rooted subtree of u: the subtree of u hanging at each leaf of t.
    inline void hanging(std::string const& t, std::size_t& i, std::string const& u,
                        std::size_t& j, std::vector<std::string>& out) {
      if (t[i] == '0') {
        ++i;
        auto e = skip(u, j);
        out.push_back(u.substr(j, e - j));
        j = e;
        return;
      }
      if (u[j] != '1') {
        throw PreconditionError("tree '" + u + "' does not refine '" + t + "'");
      }
      ++i;
      ++j;
      hanging(t, i, u, j, out);
      hanging(t, i, u, j, out);
    }

    inline std::vector<std::string> hanging(std::string const& t, std::string const& u) {
      std::vector<std::string> out;
      std::size_t              i = 0, j = 0;
      hanging(t, i, u, j, out);
      return out;
    }

    //! t with leaf k replaced by parts[k].
    inline std::string graft(std::string const& t, std::vector<std::string> const& parts) {
      std::string out;
      std::size_t k = 0;
      for (char c : t) {
        if (c == '1') {
          out += '1';
        } else {
          out += parts.at(k++);
        }
      }
      return out;
    }

    //! Leaf indices l such that leaves l, l+1 hang from one caret.
    inline std::vector<std::size_t> exposed(std::string const& t) {
      std::vector<std::size_t> out;
      std::size_t              zeros = 0;
      for (std::size_t p = 0; p < t.size(); ++p) {
        if (t.compare(p, 3, "100") == 0) {
          out.push_back(zeros);
        }
        if (t[p] == '0') {
          ++zeros;
        }
      }
      return out;
    }

    //! Removes the exposed caret over leaves l, l+1.
    inline std::string prune(std::string const& t, std::size_t l) {
      std::size_t zeros = 0;
      for (std::size_t p = 0; p < t.size(); ++p) {
        if (zeros == l && t.compare(p, 3, "100") == 0) {
          return t.substr(0, p) + "0" + t.substr(p + 3);
        }
        if (t[p] == '0') {
          ++zeros;
        }
      }
      throw PreconditionError("no exposed caret at leaf " + std::to_string(l));
    }

  }  // namespace tree

  //! (domain, range) with equal leaf counts; read top to bottom as
  //! "split by domain, then merge by range".
  struct TreePair {
    std::string domain = "0";
    std::string range  = "0";

    TreePair() = default;
    TreePair(std::string d, std::string r) : domain(std::move(d)), range(std::move(r)) {
      if (!tree::valid(domain) || !tree::valid(range)) {
        throw PreconditionError("malformed tree pair (" + domain + ", " + range + ")");
      }
      if (tree::leaves(domain) != tree::leaves(range)) {
        throw PreconditionError("tree pair leaf counts differ");
      }
    }

    [[nodiscard]] std::size_t carets() const {
      return tree::carets(domain) + tree::carets(range);
    }

    [[nodiscard]] bool is_identity() const { return domain == "0" && range == "0"; }

    bool operator==(TreePair const&) const = default;
  };

  //! Cancels common exposed carets until none is left.
  [[nodiscard]] inline TreePair treepair_reduce(TreePair p) {
    bool again = true;
    while (again) {
      again = false;
      auto in_range = tree::exposed(p.range);
      for (auto l : tree::exposed(p.domain)) {
        if (std::find(in_range.begin(), in_range.end(), l) != in_range.end()) {
          p.domain = tree::prune(p.domain, l);
          p.range  = tree::prune(p.range, l);
          again    = true;
          break;
        }
      }
    }
    return p;
  }

  [[nodiscard]] inline TreePair treepair_inverse(TreePair const& p) { return {p.range, p.domain}; }

  //! p then q: refine range(p) and domain(q) to their join, carry the
  //! refinement to domain(p) and range(q), then reduce.
  [[nodiscard]] inline TreePair treepair_mul(TreePair const& p, TreePair const& q) {
    auto u = tree::join(p.range, q.domain);
    auto d = tree::graft(p.domain, tree::hanging(p.range, u));
    auto r = tree::graft(q.range, tree::hanging(q.domain, u));
    return treepair_reduce({d, r});
  }

  //! Generator x_n: left-leaning caret pair to right-leaning, on the
  //! rightmost leaf after n steps down the right spine.
  [[nodiscard]] inline TreePair treepair_generator(std::size_t n) {
    std::string spine;
    for (std::size_t i = 0; i < n; ++i) {
      spine += "10";
    }
    return {spine + "11000", spine + "10100"};
  }

}  // namespace slenderlab::diagrams
