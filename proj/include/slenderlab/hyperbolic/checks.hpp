#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "slenderlab/core/error.hpp"
#include "slenderlab/core/length.hpp"
#include "slenderlab/core/word.hpp"
#include "slenderlab/hyperbolic/cayley.hpp"

// Empirical checkers on Cayley graphs: Gromov products and delta, minimal
// growth exponents of powers, periodic-word distortion, the undistortion
// constant of cyclic subgroups, and the geodesic n-gon neighbourhood lemma.
namespace slenderlab::hyperbolic {

  class TorsionError : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
  };

  struct GromovValue {
    Length value{0};
    bool   exact = true;
  };

  //! (x,y)_p = (d(x,p) + d(y,p) - d(x,y)) / 2 for ball elements x, y, p.
  [[nodiscard]] inline GromovValue gromov_product(CayleyBall const& B, Word const& x,
                                                  Word const& y, Word const& p) {
    auto ix = B.lookup(x);
    auto iy = B.lookup(y);
    auto ip = B.lookup(p);
    if (!ix || !iy || !ip) {
      throw PreconditionError("gromov_product: argument outside the ball");
    }
    auto dxp = B.distance(*ix, *ip);
    auto dyp = B.distance(*iy, *ip);
    auto dxy = B.distance(*ix, *iy);
    return {Length(dxp.value + dyp.value - dxy.value, 2),
            dxp.exact && dyp.exact && dxy.exact};
  }

  struct DeltaOptions {
    //! Scan every triple when size^3 is at most this many.
    std::uint64_t exhaustive_limit = 150'000'000;
    std::uint64_t samples          = 1'000'000;
    std::uint64_t seed             = 1;
  };

  struct GromovReport {
    Length                   delta{0};
    std::array<Word, 3>      worst;  // x, y, z attaining delta, basepoint 1
    std::array<Length, 3>    products{Length(0), Length(0), Length(0)};  // (x,y)_1, (y,z)_1, (x,z)_1
    bool                     exhaustive = true;
    std::uint64_t            triples    = 0;
    bool                     exact      = true;
  };

  //! Four-point delta with basepoint 1 (Cayley graphs are vertex transitive).
  [[nodiscard]] inline GromovReport delta_estimate(CayleyBall const& B,
                                                   DeltaOptions const& opt = {}) {
    auto const n = B.size();
    GromovReport rep;
    std::vector<std::int64_t> dist(n * n, 0);
    bool exact = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto d = B.distance(i, j);
        exact  = exact && d.exact;
        dist[i * n + j] = dist[j * n + i] = d.value;
      }
    }
    rep.exact = exact;
    // twice the Gromov product at the identity
    auto prod2 = [&](std::size_t a, std::size_t b) {
      return static_cast<std::int64_t>(B.depth(a) + B.depth(b)) - dist[a * n + b];
    };
    std::int64_t best = 0;
    std::array<std::size_t, 3> arg{0, 0, 0};
    auto visit = [&](std::size_t x, std::size_t y, std::size_t z) {
      std::int64_t v = std::min(prod2(x, y), prod2(y, z)) - prod2(x, z);
      if (v > best) {
        best = v;
        arg  = {x, y, z};
      }
    };
    auto cube = static_cast<std::uint64_t>(n) * n * n;
    if (cube <= opt.exhaustive_limit) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            visit(x, y, z);
          }
        }
      }
      rep.triples = cube;
    } else {
      rep.exhaustive = false;
      std::mt19937_64 rng(opt.seed);
      for (std::uint64_t s = 0; s < opt.samples; ++s) {
        auto i = rng() % n;
        auto j = rng() % n;
        visit(i, j, rng() % n);
      }
      rep.triples = opt.samples;
    }
    rep.delta    = Length(best, 2);
    rep.worst    = {B.element(arg[0]), B.element(arg[1]), B.element(arg[2])};
    rep.products = {Length(prod2(arg[0], arg[1]), 2), Length(prod2(arg[1], arg[2]), 2),
                    Length(prod2(arg[0], arg[2]), 2)};
    return rep;
  }

  struct PowerExponentReport {
    std::optional<std::uint64_t> exponent;
    std::uint64_t                nmax = 0;
    //! For each N tried, an element with l(g^N) <= l(g), if one was found.
    std::vector<std::optional<Word>> counterexamples;
    bool                         exact = true;
  };

  //! Smallest N <= nmax with l(g^N) > l(g) for all nontrivial g in the ball.
  [[nodiscard]] inline PowerExponentReport min_power_exponent(CayleyBall const& B,
                                                              std::uint64_t nmax) {
    PowerExponentReport rep;
    rep.nmax = nmax;
    if (B.size() == 1) {
      rep.exponent = 1;
      return rep;
    }
    for (std::uint64_t N = 1; N <= nmax; ++N) {
      std::optional<Word> bad;
      for (std::size_t i = 1; i < B.size() && !bad; ++i) {
        Word pw;
        for (std::uint64_t j = 0; j < N; ++j) {
          pw.insert(pw.end(), B.element(i).begin(), B.element(i).end());
        }
        auto l = B.length(pw);
        rep.exact = rep.exact && l.exact;
        if (l.value <= static_cast<std::int64_t>(B.depth(i))) {
          bad = B.element(i);
        }
      }
      rep.counterexamples.push_back(bad);
      if (!bad) {
        rep.exponent = N;
        break;
      }
    }
    return rep;
  }

  struct DistortionReport {
    Length        min_ratio{1};
    Word          worst;           // subword attaining the minimum
    Length        theta{0};
    bool          pass = true;
    std::size_t   subwords = 0;    // distinct nonempty periodic subwords checked
    bool          exact = true;
    //! Cyclic-minimality proxy: cyclically reduced, and no conjugate by a
    //! reduced word of length <= conjugator_radius is shorter.
    std::string   proxy = "cyclic reduction + conjugator search";
    std::size_t   conjugator_radius = 0;
    bool          cyclically_minimal = true;
  };

  namespace detail {
    inline void reduced_words_upto(std::uint32_t rank, std::size_t radius,
                                   std::vector<Word>& out) {
      out.assign(1, Word{});
      std::size_t begin = 0;
      for (std::size_t r = 1; r <= radius; ++r) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
          for (std::uint32_t k = 0; k < rank; ++k) {
            for (int s : {+1, -1}) {
              Generator x(k, s);
              if (!out[i].empty() && out[i].back().is_inverse_of(x)) {
                continue;
              }
              Word w = out[i];
              w.push_back(x);
              out.push_back(std::move(w));
            }
          }
        }
        begin = end;
      }
    }
  }  // namespace detail

  //! min l_X(V)/|V| over nonempty subwords V of W^s and W^-s.
  [[nodiscard]] inline DistortionReport
  periodic_distortion_check(WordProblem const& wp, Word const& W, std::uint64_t s,
                            Length const& theta, std::size_t conjugator_radius = 2) {
    if (s < 1) {
      throw PreconditionError("periodic_distortion_check: s must be >= 1");
    }
    if (W.empty() || !words::is_cyclically_reduced(W)) {
      throw PreconditionError("periodic_distortion_check: W must be nonempty and cyclically reduced");
    }
    DistortionReport rep;
    rep.theta             = theta;
    rep.conjugator_radius = conjugator_radius;

    auto lw = wp.length(W);
    std::vector<Word> conj;
    detail::reduced_words_upto(wp.presentation().rank(), conjugator_radius, conj);
    for (auto const& c : conj) {
      auto lc = wp.length(words::concat(words::concat(words::inverse(c), W), c));
      rep.exact = rep.exact && lc.exact;
      if (lc.value < lw.value) {
        rep.cyclically_minimal = false;
      }
    }

    std::set<Word, decltype(&words::shortlex_less)> seen(&words::shortlex_less);
    bool first = true;
    for (auto const& base : {W, words::inverse(W)}) {
      Word p;
      for (std::uint64_t i = 0; i < s; ++i) {
        p.insert(p.end(), base.begin(), base.end());
      }
      for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = a + 1; b <= p.size(); ++b) {
          Word v(p.begin() + static_cast<std::ptrdiff_t>(a),
                 p.begin() + static_cast<std::ptrdiff_t>(b));
          if (!seen.insert(v).second) {
            continue;
          }
          auto l     = wp.length(v);
          rep.exact  = rep.exact && l.exact;
          Length ratio(l.value, static_cast<std::int64_t>(v.size()));
          if (first || ratio < rep.min_ratio) {
            rep.min_ratio = ratio;
            rep.worst     = v;
            first         = false;
          }
        }
      }
    }
    rep.subwords = seen.size();
    rep.pass     = rep.min_ratio >= Length(1) - theta;
    return rep;
  }

  struct LambdaReport {
    Length        lambda{0};  // max |i| / l(g^i); any valid lambda is >= this
    std::int64_t  argmax = 0;
    bool          exact  = true;
  };

  [[nodiscard]] inline LambdaReport lambda_estimate(WordProblem const& wp, Word const& g,
                                                    std::int64_t nmax) {
    if (wp.is_trivial(g)) {
      throw PreconditionError("lambda_estimate: g must be nontrivial");
    }
    LambdaReport rep;
    for (std::int64_t i = 1; i <= nmax; ++i) {
      for (std::int64_t sgn : {+1, -1}) {
        Word pw;
        Word base = sgn > 0 ? g : words::inverse(g);
        for (std::int64_t j = 0; j < i; ++j) {
          pw.insert(pw.end(), base.begin(), base.end());
        }
        if (wp.is_trivial(pw)) {
          throw TorsionError("lambda_estimate: g^" + std::to_string(sgn * i)
                             + " = 1, g has finite order");
        }
        auto l    = wp.length(pw);
        rep.exact = rep.exact && l.exact;
        Length q(i, l.value);
        if (q > rep.lambda) {
          rep.lambda = q;
          rep.argmax = sgn * i;
        }
      }
    }
    return rep;
  }

  struct NgonReport {
    bool   hypothesis_holds = true;
    std::vector<std::string> hypothesis_failures;
    // margins, positive when the corresponding hypothesis holds strictly
    Length k_margin{0};          // K - 14 delta
    Length k1_margin{0};         // K1 - 12 (K + delta)
    Length side_length_margin{0};  // min d(x_{i-1}, x_i) - K1
    Length product_margin{0};    // K - max (x_{i-2}, x_i)_{x_{i-1}}
    std::int64_t polygon_to_side = 0;  // max distance from the polygonal line to the side
    std::int64_t side_to_polygon = 0;  // max distance from the side to the polygonal line
    bool   conclusion_holds = true;
    bool   exact = true;
  };

  namespace detail {
    //! Vertices of the chosen geodesic from x to y.
    inline std::vector<Word> geodesic_vertices(WordProblem const& wp, Word const& x,
                                               Word const& y) {
      auto [path, exact] = wp.shortest(words::concat(words::inverse(x), y));
      (void) exact;
      std::vector<Word> out{x};
      Word cur = x;
      for (auto g : path) {
        cur.push_back(g);
        out.push_back(wp.reduce(cur));
      }
      return out;
    }
  }  // namespace detail

  //! Measure both containments of the geodesic n-gon lemma, and report
  //! whether its hypotheses hold for the given K, K1, delta.
  [[nodiscard]] inline NgonReport ngon_check(WordProblem const& wp, std::vector<Word> const& pts,
                                             Length const& K, Length const& K1,
                                             Length const& delta) {
    if (pts.size() < 2) {
      throw PreconditionError("ngon_check: need at least two points");
    }
    NgonReport rep;
    auto dist = [&](Word const& a, Word const& b) {
      auto m    = wp.length(words::concat(words::inverse(a), b));
      rep.exact = rep.exact && m.exact;
      return m.value;
    };
    rep.k_margin  = K - 14 * delta;
    rep.k1_margin = K1 - 12 * (K + delta);
    if (rep.k_margin < 0) {
      rep.hypothesis_failures.emplace_back("K < 14 delta");
    }
    if (rep.k1_margin <= 0) {
      rep.hypothesis_failures.emplace_back("K1 <= 12 (K + delta)");
    }
    std::optional<std::int64_t> min_side;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      auto d   = dist(pts[i - 1], pts[i]);
      min_side = min_side ? std::min(*min_side, d) : d;
    }
    rep.side_length_margin = Length(*min_side) - K1;
    if (rep.side_length_margin <= 0) {
      rep.hypothesis_failures.emplace_back("some d(x_{i-1}, x_i) <= K1");
    }
    std::optional<Length> max_prod;
    for (std::size_t i = 2; i < pts.size(); ++i) {
      Length g(dist(pts[i - 2], pts[i - 1]) + dist(pts[i], pts[i - 1])
                   - dist(pts[i - 2], pts[i]),
               2);
      max_prod = max_prod ? std::max(*max_prod, g) : g;
    }
    rep.product_margin = max_prod ? K - *max_prod : K;
    if (max_prod && rep.product_margin <= 0) {
      rep.hypothesis_failures.emplace_back("some (x_{i-2}, x_i)_{x_{i-1}} >= K");
    }
    rep.hypothesis_holds = rep.hypothesis_failures.empty();

    std::vector<Word> polygon;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      auto seg = detail::geodesic_vertices(wp, pts[i - 1], pts[i]);
      polygon.insert(polygon.end(), seg.begin(), seg.end());
    }
    auto side = detail::geodesic_vertices(wp, pts.front(), pts.back());
    auto hausdorff_one_way = [&](std::vector<Word> const& from, std::vector<Word> const& to) {
      std::int64_t worst = 0;
      for (auto const& a : from) {
        std::optional<std::int64_t> best;
        for (auto const& b : to) {
          auto d = dist(a, b);
          best   = best ? std::min(*best, d) : d;
          if (*best == 0) {
            break;
          }
        }
        worst = std::max(worst, *best);
      }
      return worst;
    };
    rep.polygon_to_side  = hausdorff_one_way(polygon, side);
    rep.side_to_polygon  = hausdorff_one_way(side, polygon);
    rep.conclusion_holds = Length(rep.polygon_to_side) <= 2 * K
                           && Length(rep.side_to_polygon) <= 14 * delta;
    return rep;
  }

}  // namespace slenderlab::hyperbolic
