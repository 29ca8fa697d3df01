#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "slenderlab/core/error.hpp"

namespace slenderlab {

  //! A signed generator letter \c a_i or its inverse.
  //!
  //! Stored as a single nonzero integer, +(i+1) for a_i and -(i+1) for its
  //! inverse, so that words of several million letters stay compact.
  class Generator {
   public:
    constexpr Generator() = default;

    constexpr Generator(std::uint32_t index, int sign)
        : code_(sign < 0 ? -static_cast<std::int32_t>(index + 1)
                         : static_cast<std::int32_t>(index + 1)) {}

    static constexpr Generator positive(std::uint32_t index) {
      return Generator(index, +1);
    }
    static constexpr Generator negative(std::uint32_t index) {
      return Generator(index, -1);
    }

    [[nodiscard]] constexpr std::uint32_t index() const {
      return static_cast<std::uint32_t>((code_ < 0 ? -code_ : code_) - 1);
    }
    [[nodiscard]] constexpr int sign() const { return code_ < 0 ? -1 : +1; }
    [[nodiscard]] constexpr Generator inverse() const {
      Generator g;
      g.code_ = -code_;
      return g;
    }
    [[nodiscard]] constexpr bool is_inverse_of(Generator other) const {
      return code_ == -other.code_;
    }

    constexpr bool operator==(Generator const&) const = default;

    //! Shortlex letter order: a_0 < A_0 < a_1 < A_1 < ...
    constexpr std::strong_ordering operator<=>(Generator const& other) const {
      if (auto c = index() <=> other.index(); c != 0) {
        return c;
      }
      return (sign() < 0) <=> (other.sign() < 0);
    }

    //! Position of this letter in the shortlex order (2i or 2i+1).
    [[nodiscard]] constexpr std::size_t ordinal() const {
      return 2 * static_cast<std::size_t>(index()) + (sign() < 0 ? 1 : 0);
    }

    [[nodiscard]] std::string to_string() const {
      return (sign() < 0 ? "A" : "a") + std::to_string(index());
    }

   private:
    std::int32_t code_ = 1;
  };

  //! A finite word over signed generators; not necessarily reduced.
  using Word = std::vector<Generator>;

  namespace words {

    //! Parse one token of the form \c a3 (generator) or \c A3 (inverse).
    inline Generator parse_token(std::string_view tok) {
      if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'A')) {
        throw ParseError("bad word token '" + std::string(tok) + "'");
      }
      std::uint32_t idx = 0;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        char c = tok[i];
        if (c < '0' || c > '9') {
          throw ParseError("bad word token '" + std::string(tok) + "'");
        }
        idx = idx * 10 + static_cast<std::uint32_t>(c - '0');
        if (idx > 1'000'000) {
          throw ParseError("generator index too large in '"
                           + std::string(tok) + "'");
        }
      }
      return Generator(idx, tok[0] == 'A' ? -1 : +1);
    }

    //! Parse whitespace separated tokens; the empty string is the empty word.
    inline Word parse(std::string_view text) {
      Word               w;
      std::istringstream in{std::string(text)};
      std::string        tok;
      while (in >> tok) {
        w.push_back(parse_token(tok));
      }
      return w;
    }

    inline std::string to_string(Word const& w) {
      std::string out;
      for (auto const& g : w) {
        if (!out.empty()) {
          out += ' ';
        }
        out += g.to_string();
      }
      return out;
    }

    inline Word from(std::initializer_list<int> codes) {
      // Test helper: +i means a_{i-1}, -i means A_{i-1}.
      Word w;
      for (int c : codes) {
        w.emplace_back(static_cast<std::uint32_t>(std::abs(c) - 1), c);
      }
      return w;
    }

    [[nodiscard]] inline bool is_reduced(Word const& w) {
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i].is_inverse_of(w[i - 1])) {
          return false;
        }
      }
      return true;
    }

    //! Free reduction, single left-to-right stack pass.
    [[nodiscard]] inline Word free_reduce(Word const& w) {
      Word out;
      out.reserve(w.size());
      for (auto g : w) {
        if (!out.empty() && out.back().is_inverse_of(g)) {
          out.pop_back();
        } else {
          out.push_back(g);
        }
      }
      return out;
    }

    [[nodiscard]] inline Word inverse(Word const& w) {
      Word out;
      out.reserve(w.size());
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out.push_back(it->inverse());
      }
      return out;
    }

    //! Free product of two words, reduced at the seam only (inputs reduced).
    [[nodiscard]] inline Word multiply(Word const& u, Word const& v) {
      std::size_t c = 0;
      while (c < u.size() && c < v.size()
             && u[u.size() - 1 - c].is_inverse_of(v[c])) {
        ++c;
      }
      Word out(u.begin(), u.end() - static_cast<std::ptrdiff_t>(c));
      out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(c), v.end());
      return out;
    }

    [[nodiscard]] inline Word concat(Word const& u, Word const& v) {
      Word out = u;
      out.insert(out.end(), v.begin(), v.end());
      return out;
    }

    //! Split a reduced word as c u c^-1 with u cyclically reduced.
    struct CyclicSplit {
      Word conjugator;
      Word core;
    };

    [[nodiscard]] inline CyclicSplit cyclic_split(Word const& reduced) {
      std::size_t i = 0;
      std::size_t j = reduced.size();
      while (j - i >= 2 && reduced[i].is_inverse_of(reduced[j - 1])) {
        ++i;
        --j;
      }
      return {Word(reduced.begin(), reduced.begin() + static_cast<std::ptrdiff_t>(i)),
              Word(reduced.begin() + static_cast<std::ptrdiff_t>(i),
                   reduced.begin() + static_cast<std::ptrdiff_t>(j))};
    }

    [[nodiscard]] inline Word cyclic_reduce(Word const& w) {
      return cyclic_split(free_reduce(w)).core;
    }

    [[nodiscard]] inline bool is_cyclically_reduced(Word const& w) {
      return is_reduced(w)
             && (w.size() < 2 || !w.front().is_inverse_of(w.back()));
    }

    //! Reduced word equal to w^k in the free group.
    //!
    //! Uses the cyclic decomposition w = c u c^-1 so the result is built
    //! directly, without reducing a word of length |k|·|w|.
    [[nodiscard]] inline Word power(Word const& w, std::int64_t k) {
      Word base = free_reduce(w);
      if (k < 0) {
        base = inverse(base);
        k    = -k;
      }
      if (k == 0 || base.empty()) {
        return {};
      }
      auto [c, u] = cyclic_split(base);
      Word out    = c;
      out.reserve(2 * c.size() + static_cast<std::size_t>(k) * u.size());
      for (std::int64_t i = 0; i < k; ++i) {
        out.insert(out.end(), u.begin(), u.end());
      }
      auto ci = inverse(c);
      out.insert(out.end(), ci.begin(), ci.end());
      return out;
    }

    //! Shortlex comparison: shorter first, then lexicographic.
    [[nodiscard]] inline bool shortlex_less(Word const& u, Word const& v) {
      if (u.size() != v.size()) {
        return u.size() < v.size();
      }
      return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
    }

    //! Largest generator index used, or -1 for the empty word.
    [[nodiscard]] inline std::int64_t max_index(Word const& w) {
      std::int64_t m = -1;
      for (auto g : w) {
        m = std::max<std::int64_t>(m, g.index());
      }
      return m;
    }

    struct Hash {
      std::size_t operator()(Word const& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto g : w) {
          h ^= g.ordinal() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
      }
    };

  }  // namespace words

  //! Free-group convenience spellings used throughout the docs and CLI.
  [[nodiscard]] inline Word free_reduce(Word const& w) {
    return words::free_reduce(w);
  }
  [[nodiscard]] inline Word power_word(Word const& w, std::int64_t k) {
    return words::power(w, k);
  }

}  // namespace slenderlab
