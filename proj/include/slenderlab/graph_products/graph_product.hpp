#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <filesystem>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "slenderlab/core/error.hpp"
#include "slenderlab/graph_products/vertex_group.hpp"

namespace slenderlab::graph_products {

  class CommutationGraph {
   public:
    CommutationGraph() = default;
    explicit CommutationGraph(std::size_t n) : adj_(n, std::vector<char>(n, 0)) {}

    [[nodiscard]] std::size_t size() const { return adj_.size(); }

    void add_edge(std::size_t u, std::size_t v) {
      if (u >= size() || v >= size()) {
        throw PreconditionError("edge endpoint out of range");
      }
      if (u == v) {
        throw PreconditionError("loops are not allowed");
      }
      adj_[u][v] = adj_[v][u] = 1;
    }

    [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const {
      return u < size() && v < size() && adj_[u][v] != 0;
    }

    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (std::size_t u = 0; u < size(); ++u) {
        for (std::size_t v = u + 1; v < size(); ++v) {
          if (adj_[u][v] != 0) {
            out.emplace_back(u, v);
          }
        }
      }
      return out;
    }

   private:
    std::vector<std::vector<char>> adj_;
  };

  struct Syllable {
    std::uint32_t vertex = 0;
    Element       element;

    bool operator==(Syllable const&) const = default;
  };

  using GPWord = std::vector<Syllable>;

  class GraphProduct {
   public:
    GraphProduct(CommutationGraph graph, std::vector<VertexGroup> groups)
        : graph_(std::move(graph)), groups_(std::move(groups)) {
      if (graph_.size() != groups_.size()) {
        throw PreconditionError("one vertex group per vertex required");
      }
    }

    [[nodiscard]] CommutationGraph const& graph() const { return graph_; }
    [[nodiscard]] std::vector<VertexGroup> const& groups() const { return groups_; }
    [[nodiscard]] std::size_t vertex_count() const { return groups_.size(); }

    [[nodiscard]] VertexGroup const& group(std::uint32_t v) const {
      if (v >= groups_.size()) {
        throw PreconditionError("unknown vertex " + std::to_string(v));
      }
      return groups_[v];
    }

    //! Distinct vertices joined by an edge; such syllables commute.
    [[nodiscard]] bool commute(Syllable const& a, Syllable const& b) const {
      return a.vertex != b.vertex && graph_.adjacent(a.vertex, b.vertex);
    }

    [[nodiscard]] Syllable syllable(std::uint32_t v, Element e) const {
      return {v, group(v).canonical(std::move(e))};
    }

    void check(GPWord const& w) const {
      for (auto const& s : w) {
        group(s.vertex).check(s.element);
      }
    }

    [[nodiscard]] GPWord inverse(GPWord const& w) const {
      GPWord out;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out.push_back({it->vertex, group(it->vertex).inverse(it->element)});
      }
      return out;
    }

    //! Both reduced-word conditions: no trivial syllable, and no two
    //! syllables of one vertex group separated only by syllables commuting
    //! with that group.
    [[nodiscard]] bool is_reduced(GPWord const& w) const {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (group(w[i].vertex).is_identity(w[i].element)) {
          return false;
        }
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          if (w[j].vertex == w[i].vertex) {
            return false;
          }
          if (!commute(w[i], w[j])) {
            break;
          }
        }
      }
      return true;
    }

    //! Reduced representative of w. Syllables are appended one at a time
    //! and merged backwards through commuting syllables. A merge that gives
    //! the identity just drops the syllable: everything after it commutes
    //! with its vertex, so it never separated two syllables of another group.
    [[nodiscard]] GPWord normalize(GPWord const& w) const {
      check(w);
      GPWord out;
      out.reserve(w.size());
      for (auto const& s : w) {
        push(out, s);
      }
      return out;
    }

    [[nodiscard]] std::size_t length(GPWord const& w) const { return normalize(w).size(); }

    [[nodiscard]] GPWord multiply(GPWord const& a, GPWord const& b) const {
      GPWord c = a;
      c.insert(c.end(), b.begin(), b.end());
      return normalize(c);
    }

    //! Least-vertex-first representative of the shuffle class of a reduced word.
    [[nodiscard]] GPWord canonical(GPWord const& w) const {
      GPWord rest = normalize(w);
      GPWord out;
      out.reserve(rest.size());
      while (!rest.empty()) {
        std::size_t best = rest.size();
        for (std::size_t i = 0; i < rest.size(); ++i) {
          bool front = true;
          for (std::size_t j = 0; j < i && front; ++j) {
            front = commute(rest[j], rest[i]);
          }
          if (front && (best == rest.size() || rest[i].vertex < rest[best].vertex)) {
            best = i;
          }
        }
        out.push_back(rest[best]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
      }
      return out;
    }

    [[nodiscard]] bool canonical_eq(GPWord const& a, GPWord const& b) const {
      return canonical(a) == canonical(b);
    }

    //! Image in the direct sum: per vertex, the ordered product of its syllables.
    [[nodiscard]] std::vector<Element> sigma(GPWord const& w) const {
      std::vector<Element> out;
      out.reserve(groups_.size());
      for (auto const& g : groups_) {
        out.push_back(g.identity());
      }
      for (auto const& s : w) {
        out[s.vertex] = group(s.vertex).multiply(out[s.vertex], s.element);
      }
      return out;
    }

    [[nodiscard]] bool sigma_trivial(GPWord const& w) const {
      auto s = sigma(w);
      for (std::size_t v = 0; v < s.size(); ++v) {
        if (!groups_[v].is_identity(s[v])) {
          return false;
        }
      }
      return true;
    }

    //! Syllables as `v:elem`, space separated; "1" for the empty word.
    [[nodiscard]] std::string to_string(GPWord const& w) const {
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (auto const& s : w) {
        if (!out.empty()) {
          out += ' ';
        }
        out += std::to_string(s.vertex) + ":" + group(s.vertex).to_string(s.element);
      }
      return out;
    }

    [[nodiscard]] GPWord parse_word(std::string const& text) const {
      std::istringstream in(text);
      std::string        tok;
      GPWord             out;
      while (in >> tok) {
        if (tok == "1") {
          continue;
        }
        auto colon = tok.find(':');
        if (colon == std::string::npos || colon == 0) {
          throw ParseError("syllable '" + tok + "' is not v:elem");
        }
        std::uint32_t v = 0;
        try {
          v = static_cast<std::uint32_t>(std::stoul(tok.substr(0, colon)));
        } catch (std::logic_error const&) {
          throw ParseError("bad vertex in syllable '" + tok + "'");
        }
        if (v >= groups_.size()) {
          throw ParseError("unknown vertex in syllable '" + tok + "'");
        }
        out.push_back({v, groups_[v].parse_element(tok.substr(colon + 1))});
      }
      return out;
    }

   private:
    void push(GPWord& out, Syllable const& s) const {
      auto const& G = group(s.vertex);
      if (G.is_identity(s.element)) {
        return;
      }
      for (std::size_t j = out.size(); j-- > 0;) {
        if (out[j].vertex == s.vertex) {
          auto merged = G.multiply(out[j].element, s.element);
          if (!G.is_identity(merged)) {
            out[j].element = std::move(merged);
            return;
          }
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
          return;
        }
        if (!commute(out[j], s)) {
          break;
        }
      }
      out.push_back(s);
    }

    CommutationGraph         graph_;
    std::vector<VertexGroup> groups_;
  };

  //! Spec file: `vertex <id> <Z|Z/m|F<k>|table:path>` and `edge <u> <v>`
  //! lines, `#` comments. Vertex ids must be 0..n-1. Relative table paths
  //! resolve against `base_dir`.
  [[nodiscard]] inline GraphProduct parse_graph_product(std::istream& in,
                                                        std::filesystem::path const& base_dir = {}) {
    std::map<std::size_t, VertexGroup>             verts;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::string                                    line;
    std::size_t                                    lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.resize(hash);
      }
      std::istringstream ls(line);
      std::string        kw;
      if (!(ls >> kw)) {
        continue;
      }
      auto where = " (line " + std::to_string(lineno) + ")";
      if (kw == "vertex") {
        long long   id = -1;
        std::string g, extra;
        if (!(ls >> id >> g) || id < 0 || (ls >> extra)) {
          throw ParseError("expected `vertex <id> <group>`" + where);
        }
        if (verts.count(static_cast<std::size_t>(id)) != 0) {
          throw ParseError("duplicate vertex " + std::to_string(id) + where);
        }
        verts.emplace(static_cast<std::size_t>(id), VertexGroup::parse(g, base_dir));
      } else if (kw == "edge") {
        long long   u = -1, v = -1;
        std::string extra;
        if (!(ls >> u >> v) || u < 0 || v < 0 || (ls >> extra)) {
          throw ParseError("expected `edge <u> <v>`" + where);
        }
        edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
      } else {
        throw ParseError("unknown keyword '" + kw + "'" + where);
      }
    }
    std::vector<VertexGroup> groups;
    for (auto const& [id, g] : verts) {
      if (id != groups.size()) {
        throw ParseError("vertex ids must be 0..n-1");
      }
      groups.push_back(g);
    }
    CommutationGraph graph(groups.size());
    for (auto [u, v] : edges) {
      try {
        graph.add_edge(u, v);
      } catch (PreconditionError const& e) {
        throw ParseError(e.what());
      }
    }
    return {std::move(graph), std::move(groups)};
  }

  [[nodiscard]] inline GraphProduct parse_graph_product(std::string const& text,
                                                        std::filesystem::path const& base_dir = {}) {
    std::istringstream in(text);
    return parse_graph_product(in, base_dir);
  }

}  // namespace slenderlab::graph_products
