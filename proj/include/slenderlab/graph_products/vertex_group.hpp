#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "slenderlab/core/error.hpp"
#include "slenderlab/core/word.hpp"

namespace slenderlab::graph_products {

  //! Element handle: an integer for Z, Z/m and finite tables, a reduced word for F_k.
  using Element = std::variant<std::int64_t, Word>;

  //! Exact oracle for one vertex group.
  class VertexGroup {
   public:
    enum class Kind { integers, cyclic, free, table };

    static VertexGroup integers() { return VertexGroup(Kind::integers); }

    static VertexGroup cyclic(std::int64_t m) {
      if (m < 1) {
        throw PreconditionError("Z/m needs m >= 1, got " + std::to_string(m));
      }
      VertexGroup g(Kind::cyclic);
      g.param_ = m;
      return g;
    }

    static VertexGroup free(std::int64_t rank) {
      if (rank < 1) {
        throw PreconditionError("F_k needs k >= 1, got " + std::to_string(rank));
      }
      VertexGroup g(Kind::free);
      g.param_ = rank;
      return g;
    }

    //! table[a][b] = a*b on {0..n-1}. Checked for closure, identity,
    //! inverses and associativity.
    static VertexGroup table(std::vector<std::vector<std::int64_t>> t) {
      auto n = static_cast<std::int64_t>(t.size());
      if (n == 0) {
        throw PreconditionError("empty multiplication table");
      }
      for (auto const& row : t) {
        if (static_cast<std::int64_t>(row.size()) != n) {
          throw PreconditionError("multiplication table is not square");
        }
        for (auto x : row) {
          if (x < 0 || x >= n) {
            throw PreconditionError("multiplication table entry out of range");
          }
        }
      }
      std::int64_t e = -1;
      for (std::int64_t a = 0; a < n && e < 0; ++a) {
        bool ok = true;
        for (std::int64_t x = 0; x < n && ok; ++x) {
          ok = t[a][x] == x && t[x][a] == x;
        }
        if (ok) {
          e = a;
        }
      }
      if (e < 0) {
        throw PreconditionError("multiplication table has no identity");
      }
      for (std::int64_t a = 0; a < n; ++a) {
        for (std::int64_t b = 0; b < n; ++b) {
          for (std::int64_t c = 0; c < n; ++c) {
            if (t[t[a][b]][c] != t[a][t[b][c]]) {
              throw PreconditionError("multiplication table is not associative");
            }
          }
        }
      }
      VertexGroup g(Kind::table);
      g.param_ = n;
      g.identity_ = e;
      g.inverse_.assign(n, -1);
      for (std::int64_t a = 0; a < n; ++a) {
        for (std::int64_t b = 0; b < n; ++b) {
          if (t[a][b] == e && t[b][a] == e) {
            g.inverse_[a] = b;
          }
        }
        if (g.inverse_[a] < 0) {
          throw PreconditionError("multiplication table element without inverse");
        }
      }
      g.table_ = std::move(t);
      return g;
    }

    //! Parses `Z`, `Z/m`, `F<k>` or `table:<path>`. A relative table path is
    //! taken from `base_dir` when given.
    static VertexGroup parse(std::string const& s, std::filesystem::path const& base_dir = {}) {
      try {
        if (s == "Z") {
          return integers();
        }
        if (s.rfind("Z/", 0) == 0) {
          return cyclic(std::stoll(s.substr(2)));
        }
        if (s.size() > 1 && s[0] == 'F') {
          return free(std::stoll(s.substr(1)));
        }
      } catch (std::logic_error const&) {
        throw ParseError("bad vertex group '" + s + "'");
      }
      if (s.rfind("table:", 0) == 0) {
        std::filesystem::path path(s.substr(6));
        if (path.is_relative() && !base_dir.empty()) {
          path = base_dir / path;
        }
        std::ifstream in(path);
        if (!in) {
          throw ParseError("cannot open table file '" + s.substr(6) + "'");
        }
        std::int64_t n = 0;
        if (!(in >> n) || n < 1) {
          throw ParseError("table file must start with its order");
        }
        std::vector<std::vector<std::int64_t>> t(n, std::vector<std::int64_t>(n));
        for (auto& row : t) {
          for (auto& x : row) {
            if (!(in >> x)) {
              throw ParseError("table file truncated");
            }
          }
        }
        return table(std::move(t));
      }
      throw ParseError("bad vertex group '" + s + "'");
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] std::int64_t parameter() const { return param_; }

    [[nodiscard]] std::string name() const {
      switch (kind_) {
        case Kind::integers: return "Z";
        case Kind::cyclic: return "Z/" + std::to_string(param_);
        case Kind::free: return "F" + std::to_string(param_);
        case Kind::table: return "table(" + std::to_string(param_) + ")";
      }
      return "?";
    }

    [[nodiscard]] Element identity() const {
      if (kind_ == Kind::free) {
        return Word{};
      }
      return kind_ == Kind::table ? identity_ : 0;
    }

    [[nodiscard]] Element multiply(Element const& a, Element const& b) const {
      check(a);
      check(b);
      switch (kind_) {
        case Kind::integers: return num(a) + num(b);
        case Kind::cyclic: return (num(a) + num(b)) % param_;
        case Kind::free: return words::multiply(std::get<Word>(a), std::get<Word>(b));
        case Kind::table: return table_[num(a)][num(b)];
      }
      return a;
    }

    [[nodiscard]] Element inverse(Element const& a) const {
      check(a);
      switch (kind_) {
        case Kind::integers: return -num(a);
        case Kind::cyclic: return (param_ - num(a)) % param_;
        case Kind::free: return words::inverse(std::get<Word>(a));
        case Kind::table: return inverse_[num(a)];
      }
      return a;
    }

    [[nodiscard]] bool is_identity(Element const& a) const { return a == identity(); }

    //! Throws unless a is a valid element in canonical representation.
    void check(Element const& a) const {
      if (kind_ == Kind::free) {
        auto const* w = std::get_if<Word>(&a);
        if (w == nullptr || !words::is_reduced(*w)) {
          throw PreconditionError("F_k element must be a reduced word");
        }
        for (auto g : *w) {
          if (g.index() >= param_) {
            throw PreconditionError("letter " + g.to_string() + " outside " + name());
          }
        }
        return;
      }
      auto const* x = std::get_if<std::int64_t>(&a);
      if (x == nullptr) {
        throw PreconditionError(name() + " element must be an integer");
      }
      if (kind_ != Kind::integers && (*x < 0 || *x >= param_)) {
        throw PreconditionError("element " + std::to_string(*x) + " outside " + name());
      }
    }

    //! Brings an integer into range for Z/m; words are freely reduced.
    [[nodiscard]] Element canonical(Element a) const {
      if (kind_ == Kind::cyclic) {
        if (auto* x = std::get_if<std::int64_t>(&a)) {
          *x = ((*x % param_) + param_) % param_;
        }
      } else if (kind_ == Kind::free) {
        if (auto* w = std::get_if<Word>(&a)) {
          *w = words::free_reduce(*w);
        }
      }
      check(a);
      return a;
    }

    //! Integers print in decimal, words as comma-joined tokens ("a0,A1"),
    //! the empty word as "1".
    [[nodiscard]] std::string to_string(Element const& a) const {
      if (auto const* w = std::get_if<Word>(&a)) {
        if (w->empty()) {
          return "1";
        }
        std::string s;
        for (auto g : *w) {
          s += (s.empty() ? "" : ",") + g.to_string();
        }
        return s;
      }
      return std::to_string(std::get<std::int64_t>(a));
    }

    [[nodiscard]] Element parse_element(std::string const& s) const {
      if (kind_ == Kind::free) {
        if (s == "1") {
          return canonical(Word{});
        }
        std::string spaced = s;
        for (auto& c : spaced) {
          if (c == ',') {
            c = ' ';
          }
        }
        return canonical(words::parse(spaced));
      }
      std::size_t  used = 0;
      std::int64_t x    = 0;
      try {
        x = std::stoll(s, &used);
      } catch (std::logic_error const&) {
        throw ParseError("bad " + name() + " element '" + s + "'");
      }
      if (used != s.size()) {
        throw ParseError("bad " + name() + " element '" + s + "'");
      }
      return canonical(x);
    }

    //! Uniform-ish nontrivial element; for Z/1 or the trivial table, the identity.
    template <typename Rng>
    [[nodiscard]] Element random_nontrivial(Rng& rng) const {
      switch (kind_) {
        case Kind::integers: {
          auto x = static_cast<std::int64_t>(rng() % 3) + 1;
          return rng() % 2 ? x : -x;
        }
        case Kind::cyclic:
          return param_ == 1 ? 0 : static_cast<std::int64_t>(rng() % (param_ - 1)) + 1;
        case Kind::free: {
          Word w;
          std::size_t len = 1 + rng() % 2;
          while (w.size() < len) {
            auto      idx = static_cast<std::uint32_t>(rng() % param_);
            Generator g(idx, rng() % 2 ? 1 : -1);
            if (!w.empty() && w.back().is_inverse_of(g)) {
              continue;
            }
            w.push_back(g);
          }
          return w;
        }
        case Kind::table: {
          if (param_ == 1) {
            return identity_;
          }
          auto x = static_cast<std::int64_t>(rng() % (param_ - 1));
          return x >= identity_ ? x + 1 : x;
        }
      }
      return identity();
    }

   private:
    explicit VertexGroup(Kind k) : kind_(k) {}

    static std::int64_t num(Element const& a) { return std::get<std::int64_t>(a); }

    Kind                                   kind_;
    std::int64_t                           param_    = 0;
    std::int64_t                           identity_ = 0;
    std::vector<std::int64_t>              inverse_;
    std::vector<std::vector<std::int64_t>> table_;
  };

}  // namespace slenderlab::graph_products
