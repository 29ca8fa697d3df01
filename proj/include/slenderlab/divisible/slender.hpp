#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "slenderlab/core/error.hpp"
#include "slenderlab/divisible/nadic.hpp"

namespace slenderlab::divisible {

  struct AbelianAtom {
    enum class Kind { integers, cyclic, localized, rationals };
    Kind         kind;
    std::int64_t param = 0;  // m for Z/m, n for Z[1/n]

    [[nodiscard]] std::string to_string() const {
      switch (kind) {
        case Kind::integers: return "Z";
        case Kind::cyclic: return "Z/" + std::to_string(param);
        case Kind::localized: return "Z[1/" + std::to_string(param) + "]";
        case Kind::rationals: return "Q";
      }
      return "?";
    }
  };

  //! Finite direct sum of atoms.
  struct AbelianDescriptor {
    std::vector<AbelianAtom> atoms;

    [[nodiscard]] std::string to_string() const {
      std::string s;
      for (auto const& a : atoms) {
        s += (s.empty() ? "" : "+") + a.to_string();
      }
      return s.empty() ? "0" : s;
    }
  };

  //! "Z+Z/4+Z[1/2]+Q"; "0" is the trivial group.
  [[nodiscard]] inline AbelianDescriptor parse_descriptor(std::string const& text) {
    AbelianDescriptor d;
    std::string       s;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)) == 0) {
        s += c;
      }
    }
    if (s == "0") {
      return d;
    }
    auto number = [&](std::string const& digits) {
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos
          || digits.size() > 18) {
        throw ParseError("bad number in descriptor '" + text + "'");
      }
      return std::stoll(digits);
    };
    std::size_t start = 0;
    while (start <= s.size()) {
      auto end = s.find('+', start);
      auto tok = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
      if (tok == "Z") {
        d.atoms.push_back({AbelianAtom::Kind::integers});
      } else if (tok == "Q") {
        d.atoms.push_back({AbelianAtom::Kind::rationals});
      } else if (tok.rfind("Z[1/", 0) == 0 && tok.size() > 5 && tok.back() == ']') {
        auto n = number(tok.substr(4, tok.size() - 5));
        if (n < 2) {
          throw ParseError("Z[1/n] needs n >= 2 in '" + text + "'");
        }
        d.atoms.push_back({AbelianAtom::Kind::localized, n});
      } else if (tok.rfind("Z/", 0) == 0) {
        auto m = number(tok.substr(2));
        if (m < 2) {
          throw ParseError("Z/m needs m >= 2 in '" + text + "'");
        }
        d.atoms.push_back({AbelianAtom::Kind::cyclic, m});
      } else {
        throw ParseError("bad descriptor atom '" + tok + "'");
      }
      if (end == std::string::npos) {
        break;
      }
      start = end + 1;
    }
    return d;
  }

  struct SlenderVerdict {
    bool                     torsion_free = true;
    bool                     reduced      = true;
    bool                     slender      = true;
    std::vector<std::string> reasons;
  };

  //! Countable abelian A is slender iff torsion-free and reduced (no nonzero
  //! element divisible by every m).
  [[nodiscard]] inline SlenderVerdict slender_criterion(AbelianDescriptor const& a) {
    SlenderVerdict v;
    for (auto const& atom : a.atoms) {
      switch (atom.kind) {
        case AbelianAtom::Kind::cyclic:
          v.torsion_free = false;
          v.reasons.push_back("torsion: " + atom.to_string() + " has order-" + std::to_string(atom.param)
                              + " elements");
          break;
        case AbelianAtom::Kind::rationals:
          v.reduced = false;
          v.reasons.push_back("not reduced: Q is divisible, 1 lies in every mQ");
          break;
        case AbelianAtom::Kind::localized: {
          std::int64_t p = 2;
          while (atom.param % p == 0 || !is_prime(p)) {
            ++p;
          }
          auto rep = zn_divisible(NAdicRational(atom.param, 1), p, 1);
          if (!rep.first_failure) {
            throw std::logic_error("Z[1/n] divisibility witness unexpectedly found");
          }
          v.reasons.push_back(atom.to_string() + " reduced: nonzero r/n^k is not divisible by "
                              + "primes dividing neither n nor r (1 not in " + std::to_string(p)
                              + atom.to_string() + ")");
          break;
        }
        case AbelianAtom::Kind::integers: break;
      }
    }
    v.slender = v.torsion_free && v.reduced;
    return v;
  }

}  // namespace slenderlab::divisible
