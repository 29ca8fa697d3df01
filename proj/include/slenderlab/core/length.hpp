#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slenderlab/core/error.hpp"
#include "slenderlab/core/rational.hpp"
#include "slenderlab/core/word.hpp"

namespace slenderlab {

  //! Exact nonnegative length value. Integer-valued in every shipped instance.
  using Length = Rational;

  inline std::string to_string(Length const& x) {
    return x.to_string();
  }

  //! The operations a length machinery needs from a concrete group model.
  template <typename Element>
  struct GroupOps {
    std::function<Element()>                                   identity;
    std::function<Element(Element const&, Element const&)>     multiply;
    std::function<Element(Element const&)>                     inverse;
    std::function<bool(Element const&, Element const&)>        equal;

    [[nodiscard]] Element power(Element const& g, std::uint64_t k) const {
      Element result = identity();
      Element base   = g;
      while (k > 0) {
        if (k & 1u) {
          result = multiply(result, base);
        }
        k >>= 1u;
        if (k > 0) {
          base = multiply(base, base);
        }
      }
      return result;
    }

    [[nodiscard]] bool is_identity(Element const& g) const {
      return equal(g, identity());
    }
  };

  //! A length function l on a group, tagged with the group it lives on.
  template <typename Element>
  struct LengthFunction {
    std::string                             group;
    std::function<Length(Element const&)>   evaluate;

    Length operator()(Element const& g) const { return evaluate(g); }
  };

  //! Exponent rule r -> K_r witnessing universal monotonicity, together with
  //! the radius up to which it has been checked by sampling.
  struct UmWitness {
    std::string                                 rule;
    std::function<std::uint64_t(Length const&)> exponent;
    std::int64_t                                sampled_radius = 0;

    [[nodiscard]] std::uint64_t operator()(Length const& r) const {
      return exponent(r);
    }
  };

  struct UmEntry {
    std::size_t   sample_index;
    bool          identity = false;  // skipped, flagged
    Length        length{0};
    std::uint64_t exponent = 0;
    Length        power_length{0};
    bool          pass = true;
  };

  struct UmReport {
    Length               r{0};
    std::int64_t         sampled_radius = 0;
    std::vector<UmEntry> entries;
    std::size_t          identities_flagged = 0;
    bool                 pass = true;
  };

  //! Check l(g^{K_r}) >= l(g) + r on every non-identity sample element.
  template <typename Element>
  UmReport um_check(GroupOps<Element> const&      ops,
                    LengthFunction<Element> const& l,
                    UmWitness const&               witness,
                    std::vector<Element> const&    sample,
                    Length const&                  r) {
    if (r < 0) {
      throw PreconditionError("um_check: r must be nonnegative");
    }
    UmReport rep;
    rep.r              = r;
    rep.sampled_radius = witness.sampled_radius;
    std::uint64_t K    = witness(r);
    for (std::size_t i = 0; i < sample.size(); ++i) {
      UmEntry e;
      e.sample_index = i;
      if (ops.is_identity(sample[i])) {
        e.identity = true;
        ++rep.identities_flagged;
        rep.entries.push_back(e);
        continue;
      }
      e.length       = l(sample[i]);
      e.exponent     = K;
      e.power_length = l(ops.power(sample[i], K));
      e.pass         = e.power_length >= e.length + r;
      rep.pass       = rep.pass && e.pass;
      rep.entries.push_back(e);
    }
    return rep;
  }

  struct AxiomViolation {
    std::string what;
    std::size_t index;
  };

  //! Sampled check of the three length-function axioms.
  //! Returns the first violation found, if any.
  template <typename Element>
  std::optional<AxiomViolation>
  check_length_axioms(GroupOps<Element> const&                            ops,
                      LengthFunction<Element> const&                      l,
                      std::vector<std::pair<Element, Element>> const&     pairs) {
    if (l(ops.identity()) != 0) {
      return AxiomViolation{"l(1) != 0", 0};
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto const& [g, h] = pairs[i];
      Length lg = l(g);
      Length lh = l(h);
      if (lg < 0 || lh < 0) {
        return AxiomViolation{"negative length", i};
      }
      if (lg != l(ops.inverse(g))) {
        return AxiomViolation{"l(g) != l(g^-1)", i};
      }
      if (l(ops.multiply(g, h)) > lg + lh) {
        return AxiomViolation{"l(gh) > l(g) + l(h)", i};
      }
    }
    return std::nullopt;
  }

  namespace free_group {

    inline GroupOps<Word> ops() {
      return {[] { return Word{}; },
              [](Word const& u, Word const& v) {
                return words::free_reduce(words::concat(u, v));
              },
              [](Word const& u) { return words::inverse(words::free_reduce(u)); },
              [](Word const& u, Word const& v) {
                return words::free_reduce(u) == words::free_reduce(v);
              }};
    }

    //! Word length with respect to the free basis.
    inline LengthFunction<Word> word_length(std::string group = "F") {
      return {std::move(group), [](Word const& w) {
                return Length(static_cast<std::int64_t>(
                    words::free_reduce(w).size()));
              }};
    }

    //! K_r = ceil(r) + 1. For g = c u c^-1 reduced, |g^K| = |g| + (K-1)|u|.
    inline UmWitness witness(std::int64_t sampled_radius = 0) {
      return {"K_r = ceil(r) + 1",
              [](Length const& r) {
                return static_cast<std::uint64_t>(r.ceil() + 1);
              },
              sampled_radius};
    }

  }  // namespace free_group

}  // namespace slenderlab
