#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "slenderlab/diagrams/diagram.hpp"

namespace slenderlab::diagrams {

  //! A diagram as a planar DAG: cells consume and produce edge ids.
  //! Atom order is forgotten, so two atom sequences related by swaps of
  //! independent cells give the same graph.
  class CellGraph {
   public:
    static constexpr std::int64_t boundary = -1;

    explicit CellGraph(Diagram const& d) : rules_(d.rules()), top_word_(d.top()) {
      std::vector<std::size_t> frontier;
      for (std::size_t i = 0; i < d.top().size(); ++i) {
        frontier.push_back(new_edge());
      }
      top_ = frontier;
      for (auto const& a : d.atoms()) {
        auto [in, out] = d.sides(a);
        Cell c{a.rule, a.dir, {}, {}, true};
        auto id = static_cast<std::int64_t>(cells_.size());
        c.in.assign(frontier.begin() + static_cast<std::ptrdiff_t>(a.pad),
                    frontier.begin() + static_cast<std::ptrdiff_t>(a.pad + in.size()));
        for (auto e : c.in) {
          consumer_[e] = id;
        }
        for (std::size_t k = 0; k < out.size(); ++k) {
          c.out.push_back(new_edge());
        }
        frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(a.pad),
                       frontier.begin() + static_cast<std::ptrdiff_t>(a.pad + in.size()));
        frontier.insert(frontier.begin() + static_cast<std::ptrdiff_t>(a.pad), c.out.begin(),
                        c.out.end());
        cells_.push_back(std::move(c));
      }
      bottom_ = frontier;
    }

    //! Pairs (i, j): every edge out of cell i goes into cell j, in order,
    //! and j undoes i.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> dipoles() const {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        auto const& c = cells_[i];
        if (!c.alive || c.out.empty()) {
          continue;
        }
        auto j = consumer_[c.out.front()];
        if (j == boundary) {
          continue;
        }
        auto const& d = cells_[static_cast<std::size_t>(j)];
        if (d.rule == c.rule && d.dir == -c.dir && d.in == c.out) {
          out.emplace_back(i, static_cast<std::size_t>(j));
        }
      }
      return out;
    }

    //! Deletes cells i and j; edges that left j are replaced by those that entered i.
    void cancel(std::size_t i, std::size_t j) {
      auto& a = cells_[i];
      auto& b = cells_[j];
      for (std::size_t t = 0; t < a.in.size(); ++t) {
        auto from = b.out[t];
        auto to   = a.in[t];
        auto user = consumer_[from];
        consumer_[to] = user;
        if (user == boundary) {
          for (auto& e : bottom_) {
            if (e == from) {
              e = to;
            }
          }
        } else {
          for (auto& e : cells_[static_cast<std::size_t>(user)].in) {
            if (e == from) {
              e = to;
            }
          }
        }
      }
      a.alive = b.alive = false;
      dead_ += 2;
    }

    [[nodiscard]] std::size_t cells() const { return cells_.size() - dead_; }

    //! Linearization that always fires the leftmost ready cell. Depends
    //! only on the graph, so it is a canonical form for planar isotopy.
    [[nodiscard]] Diagram linearize() const {
      std::vector<std::size_t> frontier = top_;
      std::vector<Atom>        atoms;
      std::size_t              remaining = cells();
      while (remaining > 0) {
        bool fired = false;
        for (std::size_t p = 0; p < frontier.size() && !fired; ++p) {
          auto id = consumer_[frontier[p]];
          if (id == boundary) {
            continue;
          }
          auto const& c = cells_[static_cast<std::size_t>(id)];
          if (c.in.front() != frontier[p] || p + c.in.size() > frontier.size()) {
            continue;
          }
          bool ready = true;
          for (std::size_t k = 0; k < c.in.size() && ready; ++k) {
            ready = frontier[p + k] == c.in[k];
          }
          if (!ready) {
            continue;
          }
          atoms.push_back({p, c.rule, c.dir});
          frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(p),
                         frontier.begin() + static_cast<std::ptrdiff_t>(p + c.in.size()));
          frontier.insert(frontier.begin() + static_cast<std::ptrdiff_t>(p), c.out.begin(),
                          c.out.end());
          fired = true;
        }
        if (!fired) {
          throw Error("linearize: no ready cell; diagram graph is not planar");
        }
        --remaining;
      }
      return {rules_, top_word_, std::move(atoms)};
    }

   private:
    struct Cell {
      std::size_t              rule;
      int                      dir;
      std::vector<std::size_t> in, out;
      bool                     alive;
    };

    std::size_t new_edge() {
      consumer_.push_back(boundary);
      return consumer_.size() - 1;
    }

    std::shared_ptr<RuleSet const> rules_;
    std::string                    top_word_;
    std::vector<Cell>              cells_;
    std::vector<std::int64_t>      consumer_;
    std::vector<std::size_t>       top_, bottom_;
    std::size_t                    dead_ = 0;
  };

  //! Cancels dipoles until none is left. With an rng, each step cancels a
  //! uniformly chosen dipole; otherwise the first one found. The result is
  //! returned in canonical linear form.
  template <typename Rng = std::mt19937_64>
  [[nodiscard]] Diagram d_reduce(Diagram const& d, Rng* rng = nullptr) {
    CellGraph g(d);
    for (;;) {
      auto ds = g.dipoles();
      if (ds.empty()) {
        break;
      }
      auto pick = rng != nullptr ? ds[(*rng)() % ds.size()] : ds.front();
      g.cancel(pick.first, pick.second);
    }
    return g.linearize();
  }

  //! Canonical form without reduction.
  [[nodiscard]] inline Diagram canonical(Diagram const& d) { return CellGraph(d).linearize(); }

  [[nodiscard]] inline bool is_reduced(Diagram const& d) { return CellGraph(d).dipoles().empty(); }

  //! Equal as reduced diagrams.
  [[nodiscard]] inline bool d_equal(Diagram const& a, Diagram const& b) {
    return d_reduce(a) == d_reduce(b);
  }

  //! Δ composed with itself j >= 1 times, reduced.
  [[nodiscard]] inline Diagram d_power(Diagram const& d, std::size_t j) {
    if (j == 0) {
      return Diagram::identity(d.rules(), d.top());
    }
    Diagram acc = d;
    for (std::size_t i = 1; i < j; ++i) {
      acc = d_compose(acc, d);
    }
    return d_reduce(acc);
  }

}  // namespace slenderlab::diagrams
