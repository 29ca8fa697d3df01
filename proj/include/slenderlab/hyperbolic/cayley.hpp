#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "slenderlab/core/error.hpp"
#include "slenderlab/core/length.hpp"
#include "slenderlab/core/word.hpp"
#include "slenderlab/hyperbolic/presentation.hpp"

namespace slenderlab::hyperbolic {

  enum class Strategy { free, dehn };

  inline std::string to_string(Strategy s) {
    return s == Strategy::free ? "free" : "dehn";
  }

  //! A word-length value together with whether it is certified exact.
  struct Measured {
    std::int64_t value = 0;
    bool         exact = true;
  };

  //! Solves the word problem for a presentation by free reduction (no
  //! relators) or Dehn's algorithm (verified C'(1/6) presentations).
  class WordProblem {
   public:
    static constexpr std::size_t default_swap_budget = 512;

    explicit WordProblem(Presentation P)
        : P_(std::move(P)), dehn_(P_) {
      if (P_.is_free()) {
        strategy_ = Strategy::free;
      } else if (c16_check(P_).holds) {
        strategy_ = Strategy::dehn;
      } else {
        throw PreconditionError(
            "no word-problem strategy: presentation has relators and fails C'(1/6)");
      }
      compute_invariant_coords();
    }

    [[nodiscard]] Presentation const& presentation() const { return P_; }
    [[nodiscard]] Strategy            strategy() const { return strategy_; }

    [[nodiscard]] Word reduce(Word const& w) const {
      return strategy_ == Strategy::free ? words::free_reduce(w) : dehn_.reduce(w);
    }

    [[nodiscard]] bool is_trivial(Word const& w) const { return reduce(w).empty(); }

    [[nodiscard]] bool equal(Word const& u, Word const& v) const {
      return is_trivial(words::concat(words::inverse(v), u));
    }

    //! Shortest representative found for w.
    //!
    //! Exact for the free strategy. For Dehn, the reduced word is pushed
    //! through the closure of length-preserving half-relator swaps, reducing
    //! again whenever a swap exposes more than half a relator; \c exact is
    //! false because geodesicity of the result is not certified.
    [[nodiscard]] std::pair<Word, bool> shortest(Word const& w,
                                                 std::size_t budget = default_swap_budget) const {
      Word best = reduce(w);
      if (strategy_ == Strategy::free) {
        return {best, true};
      }
      bool improved = true;
      while (improved) {
        improved = false;
        std::set<Word, decltype(&words::shortlex_less)> seen(&words::shortlex_less);
        std::vector<Word> queue{best};
        seen.insert(best);
        for (std::size_t q = 0; q < queue.size() && seen.size() < budget && !improved; ++q) {
          for (auto& s : dehn_.half_swaps(queue[q])) {
            Word r = reduce(s);
            if (r.size() < best.size()) {
              best     = std::move(r);
              improved = true;
              break;
            }
            if (seen.insert(r).second) {
              queue.push_back(std::move(r));
            }
          }
        }
      }
      return {best, false};
    }

    //! Upper bound on l_X(w) (exact for the free strategy).
    [[nodiscard]] Measured length(Word const& w) const {
      auto [best, exact] = shortest(w);
      return {static_cast<std::int64_t>(best.size()), exact};
    }

    //! Homomorphisms to Z read off from generators whose exponent sum
    //! vanishes in every relator; equal elements agree on all of them.
    [[nodiscard]] std::vector<std::int64_t> invariant(Word const& w) const {
      std::vector<std::int64_t> sums(P_.rank(), 0);
      for (auto g : w) {
        sums[g.index()] += g.sign();
      }
      std::vector<std::int64_t> out;
      for (auto c : invariant_coords_) {
        out.push_back(sums[c]);
      }
      return out;
    }

   private:
    void compute_invariant_coords() {
      for (std::uint32_t j = 0; j < P_.rank(); ++j) {
        bool ok = true;
        for (auto const& r : P_.relators()) {
          std::int64_t s = 0;
          for (auto g : r) {
            if (g.index() == j) {
              s += g.sign();
            }
          }
          ok = ok && s == 0;
        }
        if (ok) {
          invariant_coords_.push_back(j);
        }
      }
    }

    Presentation                               P_;
    DehnReducer                                dehn_;
    Strategy                                   strategy_ = Strategy::free;
    std::vector<std::uint32_t>                 invariant_coords_;
  };

  //! Ball-size cap from SLENDERLAB_MAX_BALL, default two million elements.
  inline std::size_t max_ball_size() {
    if (char const* env = std::getenv("SLENDERLAB_MAX_BALL")) {
      try {
        return static_cast<std::size_t>(std::stoull(env));
      } catch (std::logic_error const&) {
        throw ParseError("SLENDERLAB_MAX_BALL is not a number");
      }
    }
    return 2'000'000;
  }

  //! The metric ball D(R) of a Cayley graph, enumerated breadth first.
  //!
  //! Elements are stored as shortlex-least representatives; element 0 is the
  //! identity and elements appear in shortlex order.
  class CayleyBall {
   public:
    CayleyBall(std::shared_ptr<WordProblem const> wp, std::size_t radius,
               std::size_t cap = max_ball_size())
        : wp_(std::move(wp)), radius_(radius) {
      add(Word{}, 0);
      auto letters = wp_->presentation().letters();
      std::size_t layer_begin = 0;
      for (std::size_t r = 1; r <= radius_; ++r) {
        std::size_t layer_end = elements_.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
          for (auto x : letters) {
            Word cand = elements_[i];
            if (!cand.empty() && cand.back().is_inverse_of(x)) {
              continue;
            }
            cand.push_back(x);
            if (!lookup(cand)) {
              if (elements_.size() >= cap) {
                throw ResourceError("Cayley ball exceeds the cap of "
                                    + std::to_string(cap) + " elements");
              }
              add(std::move(cand), r);
            }
          }
        }
        layer_begin = layer_end;
      }
    }

    [[nodiscard]] std::size_t              radius() const { return radius_; }
    [[nodiscard]] std::size_t              size() const { return elements_.size(); }
    [[nodiscard]] std::vector<Word> const& elements() const { return elements_; }
    [[nodiscard]] Word const& element(std::size_t i) const { return elements_.at(i); }
    [[nodiscard]] std::size_t depth(std::size_t i) const { return depth_.at(i); }
    [[nodiscard]] WordProblem const& word_problem() const { return *wp_; }

    [[nodiscard]] std::optional<std::size_t> lookup(Word const& w) const {
      if (wp_->strategy() == Strategy::free) {
        auto it = free_index_.find(words::free_reduce(w));
        if (it == free_index_.end()) {
          return std::nullopt;
        }
        return it->second;
      }
      auto it = buckets_.find(wp_->invariant(w));
      if (it == buckets_.end()) {
        return std::nullopt;
      }
      for (auto id : it->second) {
        if (wp_->equal(w, elements_[id])) {
          return id;
        }
      }
      return std::nullopt;
    }

    //! l_X(w): exact when w lands in the ball or the strategy is free;
    //! otherwise an upper bound that is at least radius + 1.
    [[nodiscard]] Measured length(Word const& w) const {
      if (wp_->strategy() == Strategy::free) {
        return wp_->length(w);
      }
      if (auto id = lookup(w)) {
        return {static_cast<std::int64_t>(depth_[*id]), true};
      }
      auto m  = wp_->length(w);
      m.value = std::max<std::int64_t>(m.value, static_cast<std::int64_t>(radius_) + 1);
      return m;
    }

    [[nodiscard]] Measured distance(std::size_t i, std::size_t j) const {
      return length(words::concat(words::inverse(elements_.at(i)), elements_.at(j)));
    }

   private:
    void add(Word w, std::size_t d) {
      std::size_t id = elements_.size();
      if (wp_->strategy() == Strategy::free) {
        free_index_.emplace(w, id);
      } else {
        buckets_[wp_->invariant(w)].push_back(id);
      }
      elements_.push_back(std::move(w));
      depth_.push_back(d);
    }

    std::shared_ptr<WordProblem const>                          wp_;
    std::size_t                                                 radius_;
    std::vector<Word>                                           elements_;
    std::vector<std::size_t>                                    depth_;
    std::unordered_map<Word, std::size_t, words::Hash>          free_index_;
    std::map<std::vector<std::int64_t>, std::vector<std::size_t>> buckets_;
  };

  [[nodiscard]] inline CayleyBall ball(Presentation const& P, std::size_t R,
                                       std::size_t cap = max_ball_size()) {
    return CayleyBall(std::make_shared<WordProblem const>(P), R, cap);
  }

}  // namespace slenderlab::hyperbolic
