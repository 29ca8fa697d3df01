#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slenderlab/core/error.hpp"
#include "slenderlab/core/word.hpp"

namespace slenderlab::hyperbolic {

  //! Finite presentation <a_0, ..., a_{rank-1} | relators>.
  class Presentation {
   public:
    Presentation() = default;

    Presentation(std::uint32_t rank, std::vector<Word> relators)
        : rank_(rank), relators_(std::move(relators)) {
      for (auto const& r : relators_) {
        if (r.empty()) {
          throw PreconditionError("presentation: empty relator");
        }
        if (!words::is_cyclically_reduced(r)) {
          throw PreconditionError("presentation: relator '" + words::to_string(r)
                                  + "' is not cyclically reduced");
        }
        if (words::max_index(r) >= static_cast<std::int64_t>(rank_)) {
          throw PreconditionError("presentation: relator '" + words::to_string(r)
                                  + "' uses a generator outside the rank");
        }
      }
    }

    [[nodiscard]] std::uint32_t            rank() const { return rank_; }
    [[nodiscard]] std::vector<Word> const& relators() const { return relators_; }
    [[nodiscard]] bool is_free() const { return relators_.empty(); }

    //! The 2·rank letters in shortlex order.
    [[nodiscard]] std::vector<Generator> letters() const {
      std::vector<Generator> out;
      for (std::uint32_t i = 0; i < rank_; ++i) {
        out.push_back(Generator::positive(i));
        out.push_back(Generator::negative(i));
      }
      return out;
    }

    //! All distinct cyclic permutations of the relators and their inverses.
    [[nodiscard]] std::vector<Word> symmetrized() const {
      std::set<Word, decltype(&words::shortlex_less)> seen(&words::shortlex_less);
      for (auto const& r : relators_) {
        for (auto const& base : {r, words::inverse(r)}) {
          for (std::size_t s = 0; s < base.size(); ++s) {
            Word rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
            rot.insert(rot.end(), base.begin(),
                       base.begin() + static_cast<std::ptrdiff_t>(s));
            seen.insert(std::move(rot));
          }
        }
      }
      return {seen.begin(), seen.end()};
    }

    [[nodiscard]] std::size_t min_relator_length() const {
      std::size_t m = 0;
      for (auto const& r : relators_) {
        m = (m == 0) ? r.size() : std::min(m, r.size());
      }
      return m;
    }

    //! Parse `gens: <k>` followed by `rel: <tokens>` lines.
    static Presentation parse(std::istream& in) {
      std::optional<std::uint32_t> rank;
      std::vector<Word>            rels;
      std::string                  line;
      std::size_t                  lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) {
          line.resize(h);
        }
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
          continue;
        }
        line = line.substr(first);
        if (line.rfind("gens:", 0) == 0) {
          try {
            long long k = std::stoll(line.substr(5));
            if (k < 0) {
              throw ParseError("negative rank");
            }
            rank = static_cast<std::uint32_t>(k);
          } catch (std::logic_error const&) {
            throw ParseError("presentation line " + std::to_string(lineno)
                             + ": bad generator count");
          }
        } else if (line.rfind("rel:", 0) == 0) {
          rels.push_back(words::parse(line.substr(4)));
        } else {
          throw ParseError("presentation line " + std::to_string(lineno)
                           + ": expected 'gens:' or 'rel:'");
        }
      }
      if (!rank) {
        throw ParseError("presentation: missing 'gens:' line");
      }
      return Presentation(*rank, std::move(rels));
    }

    static Presentation parse(std::string const& text) {
      std::istringstream in(text);
      return parse(in);
    }

   private:
    std::uint32_t     rank_ = 0;
    std::vector<Word> relators_;
  };

  namespace presentations {

    inline Presentation free(std::uint32_t rank) { return {rank, {}}; }

    //! Genus-g surface group, relator [a0,a1][a2,a3]...
    inline Presentation surface(std::uint32_t genus) {
      Word r;
      for (std::uint32_t i = 0; i < genus; ++i) {
        auto a = Generator::positive(2 * i);
        auto b = Generator::positive(2 * i + 1);
        r.insert(r.end(), {a, b, a.inverse(), b.inverse()});
      }
      return {2 * genus, {r}};
    }

    //! BS(1,n) as <a0, a1 | a1 a0 a1^-1 a0^-n>, a0 = a and a1 = b.
    inline Presentation baumslag_solitar(std::uint32_t n) {
      Word r{Generator::positive(1), Generator::positive(0), Generator::negative(1)};
      for (std::uint32_t i = 0; i < n; ++i) {
        r.push_back(Generator::negative(0));
      }
      return {2, {r}};
    }

    //! Cyclic group of order m on one generator.
    inline Presentation cyclic(std::uint32_t m) {
      return {1, {Word(m, Generator::positive(0))}};
    }

  }  // namespace presentations

  struct PieceWitness {
    Word        piece;
    Word        first;   // the two distinct symmetrized relators sharing it
    Word        second;
  };

  struct C16Result {
    bool                        holds = true;
    std::size_t                 max_piece = 0;
    std::size_t                 min_relator_length = 0;
    std::optional<PieceWitness> witness;
  };

  //! Metric small cancellation C'(1/6): every piece is shorter than one sixth
  //! of the shortest relator.
  [[nodiscard]] inline C16Result c16_check(Presentation const& P) {
    C16Result res;
    res.min_relator_length = P.min_relator_length();
    auto rstar             = P.symmetrized();
    for (std::size_t i = 0; i < rstar.size(); ++i) {
      for (std::size_t j = i + 1; j < rstar.size(); ++j) {
        auto const& u = rstar[i];
        auto const& v = rstar[j];
        std::size_t c = 0;
        while (c < u.size() && c < v.size() && u[c] == v[c]) {
          ++c;
        }
        if (c > res.max_piece || (c > 0 && !res.witness)) {
          res.max_piece = c;
          res.witness   = PieceWitness{Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(c)), u, v};
        }
      }
    }
    res.holds = P.is_free() || 6 * res.max_piece < res.min_relator_length;
    return res;
  }

  //! Dehn's algorithm: free reduction, then replace any subword forming more
  //! than half of a symmetrized relator by the inverse of its complement.
  class DehnReducer {
   public:
    explicit DehnReducer(Presentation const& P) : rstar_(P.symmetrized()) {}

    [[nodiscard]] Word reduce(Word w) const {
      w = words::free_reduce(w);
      while (step(w)) {
        w = words::free_reduce(w);
      }
      return w;
    }

    [[nodiscard]] std::vector<Word> const& symmetrized() const { return rstar_; }

    //! Words equal in G obtained by replacing exactly half of a relator by
    //! the other half. Length preserving.
    [[nodiscard]] std::vector<Word> half_swaps(Word const& w) const {
      std::vector<Word> out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (auto const& r : rstar_) {
          if (r.size() % 2 != 0) {
            continue;
          }
          std::size_t half = r.size() / 2;
          if (i + half > w.size()
              || !std::equal(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(half),
                             w.begin() + static_cast<std::ptrdiff_t>(i))) {
            continue;
          }
          Word rest(r.begin() + static_cast<std::ptrdiff_t>(half), r.end());
          Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
          auto rep = words::inverse(rest);
          v.insert(v.end(), rep.begin(), rep.end());
          v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i + half), w.end());
          out.push_back(std::move(v));
        }
      }
      return out;
    }

   private:
    bool step(Word& w) const {
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (auto const& r : rstar_) {
          std::size_t c = 0;
          while (c < r.size() && i + c < w.size() && w[i + c] == r[c]) {
            ++c;
          }
          if (2 * c > r.size()) {
            Word rest(r.begin() + static_cast<std::ptrdiff_t>(c), r.end());
            Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            auto rep = words::inverse(rest);
            v.insert(v.end(), rep.begin(), rep.end());
            v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i + c), w.end());
            w = std::move(v);
            return true;
          }
        }
      }
      return false;
    }

    std::vector<Word> rstar_;
  };

  //! Reject non-C'(1/6) presentations, then run Dehn's algorithm.
  [[nodiscard]] inline Word dehn_reduce(Presentation const& P, Word const& w) {
    if (!P.is_free() && !c16_check(P).holds) {
      throw PreconditionError("dehn_reduce: presentation is not C'(1/6)");
    }
    return DehnReducer(P).reduce(w);
  }

}  // namespace slenderlab::hyperbolic
