#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slenderlab/core/error.hpp"
#include "slenderlab/diagrams/diagram.hpp"
#include "slenderlab/diagrams/reduce.hpp"
#include "slenderlab/diagrams/thompson.hpp"

namespace slenderlab::diagrams {

  struct CounterexampleParams {
    std::int64_t n = 0, k = 0, k1 = 0, k2 = 0, m = 0;

    //! 2n^2 < 2k+2, k1, k2 > n+1 and 1 + k1 + nk + k2 = 2^m.
    [[nodiscard]] bool admissible() const {
      return n >= 2 && 2 * n * n < 2 * k + 2 && k1 > n + 1 && k2 > n + 1 && m >= 1
             && 1 + k1 + n * k + k2 == (std::int64_t{1} << m);
    }

    //! Smallest choices: k = n^2, k1 = n+2, least m leaving k2 > n+1.
    static CounterexampleParams choose(std::int64_t n) {
      if (n < 2) {
        throw PreconditionError("counterexample needs n >= 2, got " + std::to_string(n));
      }
      if (n > 200) {
        throw PreconditionError("counterexample n too large: " + std::to_string(n));
      }
      CounterexampleParams p;
      p.n  = n;
      p.k  = n * n;
      p.k1 = n + 2;
      p.m  = 1;
      while ((std::int64_t{1} << p.m) <= n * n * n + 2 * n + 4) {
        ++p.m;
      }
      p.k2 = (std::int64_t{1} << p.m) - 1 - p.k1 - n * p.k;
      return p;
    }

    //! 4 - 4k + 6kn + 2^{m+1}
    [[nodiscard]] std::int64_t closed_form_length() const {
      return 4 - 4 * k + 6 * k * n + (std::int64_t{2} << m);
    }

    //! Reduced χ^n: Γ1 + Γ2 give 2n cells, and θ^{±j} for j < n give
    //! 2 * (4 + 6 + ... + 2n) = 2(n^2 + n - 2).
    [[nodiscard]] std::int64_t chi_power_cells() const { return 2 * n * n + 4 * n - 4; }

    //! The figure quoted for reduced χ^n, 2n^2. Smaller than chi_power_cells().
    [[nodiscard]] std::int64_t stated_chi_power_cells() const { return 2 * n * n; }

    //! l(χ^n) + 2 l(Ψ).
    [[nodiscard]] std::int64_t power_bound() const {
      return chi_power_cells() + 2 * ((std::int64_t{1} << m) + 1);
    }

    //! 2n^2 + 2(2^m + 1), built on the 2n^2 figure.
    [[nodiscard]] std::int64_t stated_power_bound() const {
      return stated_chi_power_cells() + 2 * ((std::int64_t{1} << m) + 1);
    }
  };

  namespace family {

    inline Diagram theta() { return thompson::f_element("x0"); }

    //! The (1,2)-diagram: one split.
    inline Diagram rho() { return {thompson::rules(), "x", {thompson::split(0)}}; }

    //! Left comb from x to x^{leaves}: leaves-1 splits at pad 0.
    inline Diagram left_comb(std::size_t leaves) {
      std::vector<Atom> atoms(leaves - 1, thompson::split(0));
      return {thompson::rules(), "x", std::move(atoms)};
    }

    //! Splits along a tree given in preorder.
    inline Diagram tree_splits(std::string const& t) {
      if (!tree::valid(t)) {
        throw PreconditionError("malformed tree '" + t + "'");
      }
      std::vector<Atom> atoms;
      std::size_t       zeros = 0;
      for (char c : t) {
        if (c == '1') {
          atoms.push_back(thompson::split(zeros));
        } else {
          ++zeros;
        }
      }
      return {thompson::rules(), "x", std::move(atoms)};
    }

    //! x -> x^{2^m + 2}: the complete tree of depth m with its second and
    //! second-to-last leaves split once more. Neither the first two nor the
    //! last two leaves are siblings, so Ψ cannot cancel against ρ or ρ^-1
    //! at the ends of χ. A left comb does (its first caret meets ρ).
    inline Diagram psi(std::int64_t m) {
      if (m < 2) {
        throw PreconditionError("psi needs m >= 2");
      }
      std::string full = "0";
      for (std::int64_t d = 0; d < m; ++d) {
        full = "1" + full + full;
      }
      std::vector<std::string> parts(std::size_t{1} << m, "0");
      parts[1]                = "100";
      parts[parts.size() - 2] = "100";
      return tree_splits(tree::graft(full, parts));
    }

    //! (n-1) copies of θ^-1 side by side, then θ^{n-1}.
    inline Diagram delta_n(Diagram const& theta, std::int64_t n) {
      std::vector<Diagram> parts(static_cast<std::size_t>(n - 1), d_inverse(theta));
      parts.push_back(d_power(theta, static_cast<std::size_t>(n - 1)));
      return d_sum(parts);
    }

    inline Diagram chi(Diagram const& theta, CounterexampleParams const& p) {
      std::vector<Diagram> parts{rho(), thompson::epsilon(static_cast<std::size_t>(p.k1))};
      auto                 dn = delta_n(theta, p.n);
      for (std::int64_t i = 0; i < p.k; ++i) {
        parts.push_back(dn);
      }
      parts.push_back(thompson::epsilon(static_cast<std::size_t>(p.k2)));
      parts.push_back(d_inverse(rho()));
      return d_sum(parts);
    }

  }  // namespace family

  struct ThetaFamilyReport {
    std::size_t              theta_cells = 0;
    bool                     composable  = false;  // top = bottom = x
    std::vector<std::size_t> power_cells;          // l(θ^m), m = 1..max
    bool                     pass        = false;
  };

  //! l(θ) = 4 and l(θ^m) = 2 + 2m for m = 1..max_power.
  [[nodiscard]] inline ThetaFamilyReport theta_family_check(Diagram const& theta,
                                                            std::size_t max_power = 10) {
    ThetaFamilyReport r;
    r.theta_cells = theta.cells();
    r.composable  = theta.top() == "x" && theta.bottom() == "x";
    r.pass        = r.theta_cells == 4 && r.composable;
    if (!r.composable) {
      return r;
    }
    for (std::size_t m = 1; m <= max_power; ++m) {
      auto c = d_power(theta, m).cells();
      r.power_cells.push_back(c);
      r.pass = r.pass && c == 2 + 2 * m;
    }
    return r;
  }

  struct CounterexampleReport {
    CounterexampleParams params;
    std::size_t          theta_cells       = 0;
    std::size_t          delta_n_cells     = 0;  // 2 + 6(n-1) expected
    std::size_t          psi_cells         = 0;  // 2^m + 1 expected
    std::size_t          chi_cells         = 0;
    std::size_t          delta_cells       = 0;  // as built
    std::size_t          delta_reduced     = 0;  // after dipole reduction
    bool                 delta_was_reduced = false;
    std::int64_t         closed_form       = 0;
    std::size_t          power             = 0;  // j in l(Δ^j); the bound is for j = n
    std::size_t          power_cells       = 0;
    std::int64_t         power_bound       = 0;  // l(χ^n) + 2 l(Ψ)
    std::int64_t         stated_power_bound = 0;  // 2n^2 + 2(2^m + 1)
    std::size_t          chi_power_cells   = 0;  // reduced χ^n
    Diagram              delta;

    [[nodiscard]] bool chi_power_ok() const {
      return static_cast<std::int64_t>(chi_power_cells) == params.chi_power_cells();
    }

    [[nodiscard]] bool chi_power_matches_stated() const {
      return static_cast<std::int64_t>(chi_power_cells) == params.stated_chi_power_cells();
    }

    [[nodiscard]] bool power_ok() const {
      return static_cast<std::int64_t>(power_cells) <= power_bound && power_cells < delta_reduced;
    }

    [[nodiscard]] bool power_within_stated_bound() const {
      return static_cast<std::int64_t>(power_cells) <= stated_power_bound;
    }

    //! Everything the shrinking argument needs, against the recomputed counts.
    [[nodiscard]] bool pass() const {
      auto n = params.n;
      return params.admissible() && theta_cells == 4
             && delta_n_cells == static_cast<std::size_t>(2 + 6 * (n - 1))
             && psi_cells == static_cast<std::size_t>((std::int64_t{1} << params.m) + 1)
             && delta_was_reduced
             && static_cast<std::int64_t>(delta_reduced) == closed_form
             && (power != static_cast<std::size_t>(n) || power_ok()) && chi_power_ok();
    }
  };

  //! Builds Δ = Ψ ∘ χ ∘ Ψ^-1 for the given n and measures it. θ must be an
  //! (x, x)-diagram; the default is the 4-cell generator x0.
  [[nodiscard]] inline CounterexampleReport make_counterexample(std::int64_t n,
                                                                Diagram const& theta,
                                                                std::size_t power = 0) {
    CounterexampleReport r;
    r.params = CounterexampleParams::choose(n);
    if (theta.top() != "x" || theta.bottom() != "x") {
      throw PreconditionError("theta must have top and bottom x");
    }
    auto const& p = r.params;
    r.theta_cells = theta.cells();
    auto dn       = family::delta_n(theta, p.n);
    r.delta_n_cells = dn.cells();
    auto psi      = family::psi(p.m);
    r.psi_cells   = psi.cells();
    auto chi      = family::chi(theta, p);
    r.chi_cells   = chi.cells();
    r.delta       = d_compose(d_compose(psi, chi), d_inverse(psi));
    r.delta_cells = r.delta.cells();
    r.delta_was_reduced = is_reduced(r.delta);
    r.delta_reduced     = d_reduce(r.delta).cells();
    r.closed_form       = p.closed_form_length();
    r.power             = power == 0 ? static_cast<std::size_t>(n) : power;
    r.power_cells       = d_power(r.delta, r.power).cells();
    r.power_bound       = p.power_bound();
    r.stated_power_bound = p.stated_power_bound();
    r.chi_power_cells   = d_power(chi, static_cast<std::size_t>(n)).cells();
    return r;
  }

  [[nodiscard]] inline CounterexampleReport make_counterexample(std::int64_t n,
                                                                std::size_t power = 0) {
    return make_counterexample(n, family::theta(), power);
  }

}  // namespace slenderlab::diagrams
