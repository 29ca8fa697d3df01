#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "slenderlab/core/error.hpp"
#include "slenderlab/graph_products/graph_product.hpp"

namespace slenderlab::graph_products {

  struct KernelSample {
    GPWord word;        // normalized
    bool   nontrivial;  // word is not the identity
  };

  //! Deterministic per seed. Each sample is a random word of 1..max_len
  //! syllables; for every vertex whose sigma-component is nontrivial a
  //! correcting syllable is inserted at a random position, chosen so that
  //! the product of that vertex's syllables becomes trivial.
  [[nodiscard]] inline std::vector<KernelSample>
  sample_kernel(GraphProduct const& G, std::uint64_t seed, std::size_t count,
                std::size_t max_len = 8) {
    std::vector<KernelSample> out;
    if (G.vertex_count() == 0) {
      for (std::size_t i = 0; i < count; ++i) {
        out.push_back({{}, false});
      }
      return out;
    }
    std::mt19937_64 rng(seed);
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
      GPWord      w;
      std::size_t len = 1 + rng() % max_len;
      for (std::size_t i = 0; i < len; ++i) {
        auto v = static_cast<std::uint32_t>(rng() % G.vertex_count());
        w.push_back({v, G.group(v).random_nontrivial(rng)});
      }
      for (std::uint32_t v = 0; v < G.vertex_count(); ++v) {
        auto const& Gv  = G.group(v);
        std::size_t pos = rng() % (w.size() + 1);
        Element     before = Gv.identity(), after = Gv.identity();
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (w[i].vertex == v) {
            (i < pos ? before : after) = Gv.multiply(i < pos ? before : after, w[i].element);
          }
        }
        // before * x * after = 1
        auto x = Gv.multiply(Gv.inverse(before), Gv.inverse(after));
        if (!Gv.is_identity(x)) {
          w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), Syllable{v, x});
        }
      }
      auto n = G.normalize(w);
      out.push_back({n, !n.empty()});
    }
    return out;
  }

  struct SymmetricDecomposition {
    GPWord w2;   // phase-1 front; the rear is its inverse
    GPWord w1;   // phase-2 front
    GPWord w0;   // nonempty middle
    GPWord w1p;  // phase-2 rear, same vertex groups as w1
    GPWord h;    // h_i = (partner of w1_i) * w1_i, in w1 order

    //! w2 w1 w0 w1p w2^-1 as a syllable word.
    [[nodiscard]] GPWord reassemble(GraphProduct const& G) const {
      GPWord out = w2;
      out.insert(out.end(), w1.begin(), w1.end());
      out.insert(out.end(), w0.begin(), w0.end());
      out.insert(out.end(), w1p.begin(), w1p.end());
      auto inv = G.inverse(w2);
      out.insert(out.end(), inv.begin(), inv.end());
      return out;
    }

    //! w2 w1 w0 h w0 w1p w2^-1, a word for g^2.
    [[nodiscard]] GPWord square(GraphProduct const& G) const {
      GPWord out = w2;
      out.insert(out.end(), w1.begin(), w1.end());
      out.insert(out.end(), w0.begin(), w0.end());
      out.insert(out.end(), h.begin(), h.end());
      out.insert(out.end(), w0.begin(), w0.end());
      out.insert(out.end(), w1p.begin(), w1p.end());
      auto inv = G.inverse(w2);
      out.insert(out.end(), inv.begin(), inv.end());
      return out;
    }
  };

  namespace detail {
    // i can move to the front of mid past every mid[0..i), and past `extra`.
    inline bool to_front(GraphProduct const& G, GPWord const& mid, std::size_t i,
                         GPWord const& extra) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!G.commute(mid[j], mid[i])) {
          return false;
        }
      }
      for (auto const& e : extra) {
        if (!G.commute(e, mid[i])) {
          return false;
        }
      }
      return true;
    }

    inline bool to_rear(GraphProduct const& G, GPWord const& mid, std::size_t j,
                        GPWord const& extra) {
      for (std::size_t k = j + 1; k < mid.size(); ++k) {
        if (!G.commute(mid[j], mid[k])) {
          return false;
        }
      }
      for (auto const& e : extra) {
        if (!G.commute(e, mid[j])) {
          return false;
        }
      }
      return true;
    }

    inline Syllable take(GPWord& mid, std::size_t i) {
      auto s = mid[i];
      mid.erase(mid.begin() + static_cast<std::ptrdiff_t>(i));
      return s;
    }
  }  // namespace detail

  //! Two-phase rearrangement of a reduced kernel element g. Phase 1 moves
  //! mutually inverse pairs (one movable to the front, one to the rear) of
  //! the current middle outwards; phase 2 does the same for same-vertex
  //! pairs that also commute with every syllable already moved in phase 2.
  //! Reducedness and equality with g are re-verified after each move.
  [[nodiscard]] inline SymmetricDecomposition symmetric_decomposition(GraphProduct const& G,
                                                                      GPWord const& g) {
    G.check(g);
    if (!G.is_reduced(g)) {
      throw PreconditionError("symmetric_decomposition: input is not reduced");
    }
    if (g.empty()) {
      throw PreconditionError("symmetric_decomposition: input is trivial");
    }
    if (!G.sigma_trivial(g)) {
      throw PreconditionError("symmetric_decomposition: input is not in ker sigma");
    }
    SymmetricDecomposition d;
    GPWord                 mid = g;
    GPWord                 rear2;  // phase-1 rear, outermost last
    auto verify = [&](char const* phase) {
      GPWord cur = d.w2;
      cur.insert(cur.end(), d.w1.begin(), d.w1.end());
      cur.insert(cur.end(), mid.begin(), mid.end());
      cur.insert(cur.end(), d.w1p.begin(), d.w1p.end());
      cur.insert(cur.end(), rear2.rbegin(), rear2.rend());
      if (!G.is_reduced(cur) || !G.canonical_eq(cur, g)) {
        throw Error(std::string("symmetric_decomposition: rearranged word stopped being "
                                "reduced or equal to g during phase ")
                    + phase);
      }
    };

    auto find_pair = [&](auto&& match, GPWord const& front_extra, GPWord const& rear_extra)
        -> std::pair<std::size_t, std::size_t> {
      for (std::size_t i = 0; i < mid.size(); ++i) {
        if (!detail::to_front(G, mid, i, front_extra)) {
          continue;
        }
        for (std::size_t j = mid.size(); j-- > i + 1;) {
          if (match(mid[i], mid[j]) && detail::to_rear(G, mid, j, rear_extra)) {
            return {i, j};
          }
        }
      }
      return {mid.size(), mid.size()};
    };

    GPWord none;
    for (;;) {
      auto [i, j] = find_pair(
          [&](Syllable const& a, Syllable const& b) {
            return a.vertex == b.vertex
                   && G.group(a.vertex).multiply(a.element, b.element)
                          == G.group(a.vertex).identity();
          },
          none, none);
      if (i == mid.size()) {
        break;
      }
      auto back = detail::take(mid, j);
      d.w2.push_back(detail::take(mid, i));
      rear2.push_back(back);
      verify("1");
    }

    for (;;) {
      auto [i, j] = find_pair(
          [](Syllable const& a, Syllable const& b) { return a.vertex == b.vertex; }, d.w1,
          d.w1p);
      if (i == mid.size()) {
        break;
      }
      auto back = detail::take(mid, j);
      d.w1.push_back(detail::take(mid, i));
      d.w1p.insert(d.w1p.begin(), back);
      verify("2");
    }
    d.w0 = mid;
    if (d.w0.empty()) {
      throw Error("symmetric_decomposition: empty middle segment");
    }
    // h_i pairs w1[i] with its partner, which sits at w1p[p-1-i]
    std::size_t p = d.w1.size();
    for (std::size_t i = 0; i < p; ++i) {
      auto const& front = d.w1[i];
      auto const& back  = d.w1p[p - 1 - i];
      auto        h     = G.group(front.vertex).multiply(back.element, front.element);
      if (G.group(front.vertex).is_identity(h)) {
        throw Error("symmetric_decomposition: trivial h at index " + std::to_string(i));
      }
      d.h.push_back({front.vertex, h});
    }
    return d;
  }

  struct SquareGrowth {
    std::size_t            length        = 0;  // l(g)
    std::size_t            square_length = 0;  // l(g^2)
    std::size_t            identity_rhs  = 0;  // 2 l(w2) + 3 l(w1) + 2 l(w0)
    bool                   grows         = false;
    bool                   identity_holds = false;
    bool                   square_word_reduced = false;
    SymmetricDecomposition decomposition;
  };

  //! l(g^2) by normalization, checked against the decomposition identity.
  [[nodiscard]] inline SquareGrowth square_growth_check(GraphProduct const& G, GPWord const& g) {
    auto         n = G.normalize(g);
    SquareGrowth r;
    r.decomposition = symmetric_decomposition(G, n);
    auto const& d   = r.decomposition;
    r.length        = n.size();
    r.square_length = G.length(G.multiply(n, n));
    r.identity_rhs  = 2 * d.w2.size() + 3 * d.w1.size() + 2 * d.w0.size();
    r.grows         = r.square_length > r.length;
    r.identity_holds = r.square_length == r.identity_rhs;
    auto sq          = d.square(G);
    r.square_word_reduced = G.is_reduced(sq) && G.canonical_eq(sq, G.multiply(n, n));
    return r;
  }

  //! Random graph on 1..max_vertices vertices with groups drawn from
  //! {Z, Z/4, F2}; deterministic per rng state.
  template <typename Rng>
  [[nodiscard]] GraphProduct random_graph_product(Rng& rng, std::size_t max_vertices = 5) {
    std::size_t              n = 1 + rng() % max_vertices;
    CommutationGraph         graph(n);
    std::vector<VertexGroup> groups;
    for (std::size_t v = 0; v < n; ++v) {
      switch (rng() % 3) {
        case 0: groups.push_back(VertexGroup::integers()); break;
        case 1: groups.push_back(VertexGroup::cyclic(4)); break;
        default: groups.push_back(VertexGroup::free(2)); break;
      }
      for (std::size_t u = 0; u < v; ++u) {
        if (rng() % 2) {
          graph.add_edge(u, v);
        }
      }
    }
    return {std::move(graph), std::move(groups)};
  }

}  // namespace slenderlab::graph_products
