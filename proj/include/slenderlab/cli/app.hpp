#pragma once

#include <filesystem>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "slenderlab/cli/report.hpp"
#include "slenderlab/cli/suite.hpp"

namespace slenderlab::cli {

  enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

  //! A bad flag value or unreadable input; maps to exit status 2.
  class UsageError : public Error {
   public:
    using Error::Error;
  };

  namespace detail {

    inline std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw UsageError("cannot open '" + path + "'");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    //! "p", "p/q" or "-p/q".
    inline Rational parse_rational(std::string const& s) {
      try {
        auto        slash = s.find('/');
        std::size_t used  = 0;
        auto        num   = std::stoll(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash)) {
          throw std::invalid_argument(s);
        }
        if (slash == std::string::npos) {
          return {num};
        }
        auto den = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1 || den == 0) {
          throw std::invalid_argument(s);
        }
        return {num, den};
      } catch (std::logic_error const&) {
        throw UsageError("bad rational '" + s + "'");
      }
    }

    inline std::vector<std::string> split(std::string const& s, char sep) {
      std::vector<std::string> out;
      std::string              cur;
      std::istringstream       in(s);
      while (std::getline(in, cur, sep)) {
        out.push_back(cur);
      }
      return out;
    }

  }  // namespace detail

  // ---------------------------------------------------------------- heg

  struct HegArgs {
    std::string              spec_path;
    std::vector<std::string> images;  // "i=tokens"
    bool                     keep_exponents = false;
    std::string              word;
    std::int64_t             cut = -1;
  };

  inline Report run_heg(HegArgs const& a) {
    using namespace heg;
    Report r;
    r.command = "heg";
    if (!a.word.empty()) {
      if (a.cut < 0) {
        throw UsageError("--word needs --cut N");
      }
      auto w = words::parse(a.word);
      auto N = static_cast<std::uint32_t>(a.cut);
      r.parameters["word"] = words::to_string(w);
      r.parameters["cut"]  = a.cut;
      auto low  = project_low(w, N);
      auto high = project_high(w, N);
      r.info("p_N", words::to_string(low));
      r.info("p^N", words::to_string(high));
      Json blocks = Json::array();
      for (auto const& b : alternating_decomposition(w, N)) {
        blocks.push_back(Json{{"low", b.low}, {"letters", words::to_string(b.letters)}});
      }
      r.info("blocks", blocks);
    }
    if (a.spec_path.empty()) {
      if (a.word.empty()) {
        throw UsageError("heg needs --spec FILE or --word TOKENS --cut N");
      }
      return r;
    }
    auto spec = parse_nested(detail::read_file(a.spec_path));
    r.parameters["spec"]  = a.spec_path;
    r.parameters["depth"] = spec.depth();
    std::map<std::uint32_t, Word> images;
    for (auto const& s : a.images) {
      auto eq = s.find('=');
      if (eq == std::string::npos) {
        throw UsageError("--image expects i=<tokens>, got '" + s + "'");
      }
      try {
        images[static_cast<std::uint32_t>(std::stoul(s.substr(0, eq)))] = words::parse(s.substr(eq + 1));
      } catch (std::logic_error const&) {
        throw UsageError("bad letter index in --image '" + s + "'");
      }
    }
    // default phi: a_i -> a0 a1^i
    for (auto const& lvl : spec.levels) {
      for (auto g : lvl.word) {
        if (!images.count(g.index())) {
          Word img{Generator::positive(0)};
          img.insert(img.end(), g.index(), Generator::positive(1));
          images[g.index()] = img;
        }
      }
    }
    Json phi = Json::object();
    for (auto const& [i, w] : images) {
      phi["a" + std::to_string(i)] = words::to_string(w);
    }
    r.parameters["phi"]       = phi;
    r.parameters["exponents"] = a.keep_exponents ? "from spec" : "K_{r_p+1} = r_p + 2";
    LetterAssignment<Word> assignment{images, free_group::ops(), free_group::word_length("F2"),
                                      free_group::witness()};
    auto rep = higman_chain_verify(spec, assignment, !a.keep_exponents);
    for (auto const& s : rep.steps) {
      r.add("step U_" + std::to_string(s.p) + " -> U_" + std::to_string(s.p - 1),
            s.exempt ? Json("exempt") : Json(">= " + to_string(s.before + 1)),
            Json{{"r_p", to_string(s.r_p)}, {"k_p", s.k_p}, {"before", to_string(s.before)},
                 {"after", to_string(s.after)}},
            s.pass);
    }
    r.info("forced trivial index", rep.forced_trivial_index);
    return r;
  }

  // ---------------------------------------------------------- hyperbolic

  struct HyperbolicArgs {
    std::string  presentation_path;
    std::string  group = "free2";
    std::size_t  radius = 3;
    std::string  check  = "delta";
    std::int64_t nmax   = 10;
    std::string  theta  = "1/2";
    std::string  word;
    std::int64_t s      = 3;
    std::string  points;
    std::string  K = "0", K1 = "1", delta = "0";
  };

  inline hyperbolic::Presentation presentation_of(HyperbolicArgs const& a) {
    using namespace hyperbolic;
    if (!a.presentation_path.empty()) {
      return Presentation::parse(detail::read_file(a.presentation_path));
    }
    auto num = [&](std::size_t from) {
      try {
        std::size_t used = 0;
        auto        v    = std::stoul(a.group.substr(from), &used);
        if (used + from != a.group.size() || v < 1 || v > 16) {
          throw std::invalid_argument(a.group);
        }
        return static_cast<std::uint32_t>(v);
      } catch (std::logic_error const&) {
        throw UsageError("bad --group '" + a.group + "'");
      }
    };
    if (a.group.rfind("free", 0) == 0) {
      return presentations::free(num(4));
    }
    if (a.group.rfind("surface", 0) == 0) {
      return presentations::surface(num(7));
    }
    throw UsageError("--group must be free<k> or surface<g>, got '" + a.group + "'");
  }

  inline Report run_hyperbolic(HyperbolicArgs const& a) {
    using namespace hyperbolic;
    Report r;
    r.command = "hyperbolic";
    auto P    = presentation_of(a);
    auto c16  = c16_check(P);
    r.parameters["presentation"] = a.presentation_path.empty() ? a.group : a.presentation_path;
    r.parameters["rank"]         = P.rank();
    r.parameters["check"]        = a.check;
    r.info("C'(1/6)", Json{{"holds", c16.holds}, {"max_piece", c16.max_piece},
                           {"min_relator_length", c16.min_relator_length}});
    auto wp = std::make_shared<WordProblem const>(P);
    if (a.check == "delta" || a.check == "power") {
      r.parameters["radius"] = a.radius;
      CayleyBall B(wp, a.radius);
      r.info("ball size", B.size());
      if (a.check == "delta") {
        auto d = delta_estimate(B);
        r.add("delta", ">= 0", to_string(d.delta), d.delta >= 0);
        r.info("exhaustive", d.exhaustive);
        r.info("exact", d.exact);
        r.info("worst triple", Json::array({words::to_string(d.worst[0]), words::to_string(d.worst[1]),
                                            words::to_string(d.worst[2])}));
      } else {
        r.parameters["nmax"] = a.nmax;
        auto pe = min_power_exponent(B, static_cast<std::uint64_t>(a.nmax));
        r.add("min_power_exponent", "<= " + std::to_string(a.nmax),
              pe.exponent ? Json(*pe.exponent) : Json(nullptr), pe.exponent.has_value());
        r.info("exact", pe.exact);
      }
      return r;
    }
    if (a.check == "distortion") {
      if (a.word.empty()) {
        throw UsageError("--check distortion needs --word");
      }
      auto W     = words::parse(a.word);
      auto theta = detail::parse_rational(a.theta);
      r.parameters["word"]  = words::to_string(W);
      r.parameters["s"]     = a.s;
      r.parameters["theta"] = to_string(theta);
      r.parameters["nmax"]  = a.nmax;
      auto d = periodic_distortion_check(*wp, W, static_cast<std::uint64_t>(a.s), theta);
      r.add("min l(v)/|v| over periodic subwords", ">= " + to_string(Rational(1) - theta),
            to_string(d.min_ratio), d.pass);
      r.info("worst subword", words::to_string(d.worst));
      r.info("cyclically minimal", Json{{"value", d.cyclically_minimal},
                                        {"proxy", d.proxy},
                                        {"conjugator_radius", d.conjugator_radius}});
      r.info("exact", d.exact);
      auto lam = lambda_estimate(*wp, W, a.nmax);
      r.info("lambda lower bound", Json{{"value", to_string(lam.lambda)}, {"argmax", lam.argmax},
                                        {"exact", lam.exact}});
      return r;
    }
    if (a.check == "ngon") {
      std::vector<Word> pts;
      for (auto const& p : detail::split(a.points, ';')) {
        pts.push_back(p == "1" ? Word{} : words::parse(p));
      }
      auto K = detail::parse_rational(a.K), K1 = detail::parse_rational(a.K1),
           delta = detail::parse_rational(a.delta);
      r.parameters["points"] = a.points;
      r.parameters["K"]      = to_string(K);
      r.parameters["K1"]     = to_string(K1);
      r.parameters["delta"]  = to_string(delta);
      auto n = ngon_check(*wp, pts, K, K1, delta);
      r.info("hypothesis holds", n.hypothesis_holds);
      r.info("hypothesis failures", n.hypothesis_failures);
      r.info("polygon to side", n.polygon_to_side);
      r.info("side to polygon", n.side_to_polygon);
      // the containment is only claimed under the hypotheses
      r.add("conclusion", n.hypothesis_holds ? Json(true) : Json("not claimed"), n.conclusion_holds,
            !n.hypothesis_holds || n.conclusion_holds);
      return r;
    }
    throw UsageError("--check must be delta, power, distortion or ngon");
  }

  // ---------------------------------------------------------- graphprod

  struct GraphProdArgs {
    std::string spec_path;
    std::size_t samples = 100;
    std::string word;
  };

  inline Report run_graphprod(GraphProdArgs const& a, std::uint64_t seed) {
    using namespace graph_products;
    Report r;
    r.command = "graphprod";
    r.seed    = seed;
    if (a.spec_path.empty()) {
      throw UsageError("graphprod needs --spec FILE");
    }
    auto G = parse_graph_product(detail::read_file(a.spec_path),
                                 std::filesystem::path(a.spec_path).parent_path());
    r.parameters["spec"]     = a.spec_path;
    r.parameters["vertices"] = G.vertex_count();
    r.parameters["samples"]  = a.samples;
    if (!a.word.empty()) {
      auto w = G.parse_word(a.word);
      auto n = G.normalize(w);
      r.info("normal form", G.to_string(G.canonical(n)));
      r.info("length", n.size());
      Json sig = Json::object();
      auto s   = G.sigma(n);
      for (std::uint32_t v = 0; v < G.vertex_count(); ++v) {
        sig[std::to_string(v)] = G.group(v).to_string(s[v]);
      }
      r.info("sigma", sig);
    }
    std::size_t nontrivial = 0, no_growth = 0, identity_bad = 0;
    for (auto const& s : sample_kernel(G, seed, a.samples)) {
      if (!s.nontrivial) {
        continue;
      }
      ++nontrivial;
      auto g = square_growth_check(G, s.word);
      no_growth += g.grows ? 0 : 1;
      identity_bad += g.identity_holds && g.square_word_reduced ? 0 : 1;
    }
    r.info("nontrivial kernel samples", nontrivial);
    r.add("samples with l(g^2) <= l(g)", 0, no_growth, no_growth == 0);
    r.add("decompositions breaking 2l(w2)+3l(w1)+2l(w0)", 0, identity_bad, identity_bad == 0);
    return r;
  }

  // ------------------------------------------------------------ diagram

  struct DiagramArgs {
    std::int64_t counterexample = 0;
    std::int64_t power          = 0;
    std::string  emit;
    std::string  f_word;
    std::string  theta_path;  // override theta with a serialized diagram
  };

  inline Report run_diagram(DiagramArgs const& a) {
    using namespace diagrams;
    Report r;
    r.command = "diagram";
    if (a.counterexample == 0 && a.f_word.empty()) {
      throw UsageError("diagram needs --counterexample n or --word");
    }
    std::optional<Diagram> emitted;
    if (!a.f_word.empty()) {
      auto d  = thompson::f_element(a.f_word);
      auto tp = thompson::treepair_of(thompson::parse_word(a.f_word));
      r.parameters["word"] = a.f_word;
      r.info("tree pair", Json{{"domain", tp.domain}, {"range", tp.range}});
      r.add("cells = carets", tp.carets(), d.cells(), d.cells() == tp.carets());
      emitted = d;
    }
    if (a.counterexample != 0) {
      auto n = a.counterexample;
      if (n < 2 || n > 6) {
        throw UsageError("--counterexample expects 2 <= n <= 6");
      }
      auto theta = a.theta_path.empty() ? family::theta()
                                        : parse_diagram(detail::read_file(a.theta_path), thompson::rules());
      auto power = a.power == 0 ? n : a.power;
      if (power < 1 || power > 8) {
        throw UsageError("--power expects 1 <= j <= 8");
      }
      auto p   = CounterexampleParams::choose(n);
      auto fam = theta_family_check(theta, 10);
      r.parameters["n"]      = n;
      r.parameters["power"]  = power;
      r.parameters["params"] = suite::params_json(p);
      r.parameters["theta"]  = a.theta_path.empty() ? "x0" : a.theta_path;
      r.add("theta family counts", "l(theta)=4, l(theta^m)=2+2m", fam.power_cells, fam.pass);
      auto rep = make_counterexample(n, theta, static_cast<std::size_t>(power));
      r.add("Delta is reduced", true, rep.delta_was_reduced, rep.delta_was_reduced);
      r.add("l(Delta)", rep.closed_form, rep.delta_reduced,
            static_cast<std::int64_t>(rep.delta_reduced) == rep.closed_form);
      r.add("l(chi^n)", p.chi_power_cells(), rep.chi_power_cells, rep.chi_power_ok());
      auto key = "l(Delta^" + std::to_string(power) + ")";
      if (power == n) {
        r.add(key, Json{{"at_most", rep.power_bound}, {"below", rep.delta_reduced}}, rep.power_cells,
              rep.power_ok());
      } else {
        r.info(key, rep.power_cells);
      }
      r.parameters["bound"]        = rep.power_bound;
      r.parameters["stated_bound"] = rep.stated_power_bound;
      r.notes["stated figures"] =
          Json{{"chi_power_cells", {{"stated", p.stated_chi_power_cells()}, {"measured", rep.chi_power_cells}}},
               {"power_bound", {{"stated", rep.stated_power_bound}, {"within", rep.power_within_stated_bound()}}}};
      emitted = rep.delta;
    }
    if (!a.emit.empty()) {
      std::ofstream out(a.emit);
      if (!out) {
        throw UsageError("cannot write '" + a.emit + "'");
      }
      out << serialize(*emitted);
      r.parameters["emit"] = a.emit;
    }
    return r;
  }

  // ----------------------------------------------------------------- bs

  struct BsArgs {
    std::int64_t base = 2;
    std::string  word;
    std::int64_t roots = -1;
    std::string  criterion;
  };

  inline Report run_bs(BsArgs const& a) {
    using namespace divisible;
    Report r;
    r.command = "bs";
    if (a.base < 2 || a.base > 1000) {
      throw UsageError("--base expects 2 <= n <= 1000");
    }
    auto n = a.base;
    r.parameters["base"] = n;
    auto rel = bs_mul(bs_mul(bs_b(n), bs_a(n)), bs_inverse(bs_b(n)));
    r.add("b a b^-1 = a^n", bs_pow(bs_a(n), n).to_string(), rel.to_string(), rel == bs_pow(bs_a(n), n));
    if (!a.word.empty()) {
      auto g = bs_parse(n, a.word);
      r.parameters["word"] = a.word;
      r.info("element (t, r)", g.to_string());
      r.info("q", retraction_q(g));
    }
    if (a.roots >= 0) {
      if (a.roots > 12) {
        throw UsageError("--roots expects k <= 12");
      }
      auto w = root_witness(n, a.roots);
      r.parameters["roots"] = a.roots;
      r.info("x = b^-k a b^k", w.x.to_string());
      r.add("x^(n^k) = a, n^k = " + w.exponent.str(), bs_a(n).to_string(), w.power.to_string(), w.verified);
    }
    if (!a.criterion.empty()) {
      auto d = parse_descriptor(a.criterion);
      auto v = slender_criterion(d);
      r.parameters["criterion"] = d.to_string();
      r.info("verdict", Json{{"slender", v.slender}, {"torsion_free", v.torsion_free},
                             {"reduced", v.reduced}, {"reasons", v.reasons}});
    }
    return r;
  }

  // ----------------------------------------------------- reproduce / self

  inline Report run_reproduce(suite::Options const& o) {
    Report r;
    r.command = "reproduce";
    r.seed    = o.seed;
    r.parameters["tamper_theta"] = o.tamper_theta;
    auto items = suite::items();
    std::vector<std::future<Report>> jobs;
    for (auto const& it : items) {
      jobs.push_back(std::async(std::launch::async, [&it, &o] { return suite::run_item(it, o); }));
    }
    for (auto& j : jobs) {
      r.append(j.get());
    }
    return r;
  }

  //! Fast smoke test touching every module.
  inline Report run_selftest(std::uint64_t seed) {
    Report r;
    r.command = "selftest";
    r.seed    = seed;
    suite::Options o{seed, false};
    r.append(suite::run_item({1, "diagram family counts", suite::family_counts}, o));
    r.append(suite::run_item({4, "dipole-reduction confluence",
                              [](suite::Options const& x) { return suite::confluence(x, 50, 3); }},
                             o));
    r.append(suite::run_item({5, "F oracle equivalence",
                              [](suite::Options const& x) { return suite::f_oracle(x, 20); }},
                             o));
    r.append(suite::run_item({6, "graph-product square growth",
                              [](suite::Options const& x) { return suite::square_growth(x, 50); }},
                             o));
    r.append(suite::run_item({9, "BS(1,n) witnesses", suite::bs_witnesses}, o));
    auto red = hyperbolic::dehn_reduce(hyperbolic::presentations::surface(2),
                                       hyperbolic::presentations::surface(2).relators()[0]);
    r.add("surface relator Dehn-reduces to 1", "", words::to_string(red), red.empty());
    return r;
  }

  // ---------------------------------------------------------------- run

  //! Parses argv, runs the subcommand, writes the JSON report. Returns the
  //! exit status: 0 all records pass, 1 some record failed, 2 usage error.
  inline int run(int argc, char const* const* argv, std::ostream& out = std::cout,
                 std::ostream& err = std::cerr) {
    CLI::App app{"slenderlab: exact checks for length functions, graph products, diagram groups and BS(1,n)"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "read options from a key=value file");
    std::uint64_t seed = 1;
    std::string   output;
    bool          compact = false;
    app.add_option("--seed", seed, "random seed (echoed in the report)");
    app.add_option("-o,--output", output, "also write the report to this file");
    app.add_flag("--compact", compact, "single-line JSON");

    HegArgs heg;
    auto*   h = app.add_subcommand("heg", "projections and nested-word descent");
    h->add_option("--spec", heg.spec_path, "nested spec file (W=<tokens> k=<int> per line)");
    h->add_option("--image", heg.images, "letter image i=<tokens> in F2 (repeatable)");
    h->add_flag("--keep-exponents", heg.keep_exponents, "use the spec's k_p instead of K_{r_p+1}");
    h->add_option("--word", heg.word, "word to project");
    h->add_option("--cut", heg.cut, "projection index N");

    HyperbolicArgs hy;
    auto*          y = app.add_subcommand("hyperbolic", "Cayley-ball checks");
    auto*          pres = y->add_option("--presentation", hy.presentation_path, "presentation file");
    y->add_option("--group", hy.group, "free<k> or surface<g>")->excludes(pres);
    y->add_option("--radius", hy.radius, "ball radius");
    y->add_option("--check", hy.check, "delta | power | distortion | ngon")
        ->check(CLI::IsMember({"delta", "power", "distortion", "ngon"}));
    y->add_option("--nmax", hy.nmax, "largest exponent tried");
    y->add_option("--theta", hy.theta, "distortion slack, rational");
    y->add_option("--word", hy.word, "periodic word W");
    y->add_option("--s", hy.s, "number of periods");
    y->add_option("--points", hy.points, "polygon vertices, ';'-separated words");
    y->add_option("--K", hy.K, "Gromov-product bound K");
    y->add_option("--K1", hy.K1, "side-length bound K1");
    y->add_option("--delta", hy.delta, "hyperbolicity constant");

    GraphProdArgs gp;
    auto*         g = app.add_subcommand("graphprod", "graph-product normal forms and square growth");
    g->add_option("--spec", gp.spec_path, "graph-product spec file");
    g->add_option("--samples", gp.samples, "kernel samples");
    g->add_option("--word", gp.word, "syllable word v:elem ... to normalize");

    DiagramArgs dg;
    auto*       d = app.add_subcommand("diagram", "diagram groups and the counterexample family");
    d->add_option("--counterexample", dg.counterexample, "build the family member for n");
    d->add_option("--power", dg.power, "j in l(Delta^j); defaults to n");
    d->add_option("--emit", dg.emit, "write the serialized diagram here");
    d->add_option("--word", dg.f_word, "element of F in x<n>/X<n> tokens");
    d->add_option("--theta-file", dg.theta_path, "serialized theta to use instead of x0");

    BsArgs bs;
    auto*  b = app.add_subcommand("bs", "BS(1,n) and Z[1/n] arithmetic");
    b->add_option("--base", bs.base, "n");
    b->add_option("--word", bs.word, "word over a, b, A, B");
    b->add_option("--roots", bs.roots, "k for the n^k-th root of a");
    b->add_option("--criterion", bs.criterion, "abelian descriptor such as Z+Z/4");

    bool  tamper = false;
    auto* rp     = app.add_subcommand("reproduce", "run the full reproduction table");
    rp->add_flag("--tamper-theta", tamper, "negative control: use a 5-cell theta");

    auto* st = app.add_subcommand("selftest", "quick consistency checks");

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << "\n";
      return exit_usage;
    }

    Report report;
    try {
      if (h->parsed()) {
        report = run_heg(heg);
      } else if (y->parsed()) {
        report = run_hyperbolic(hy);
      } else if (g->parsed()) {
        report = run_graphprod(gp, seed);
      } else if (d->parsed()) {
        report = run_diagram(dg);
      } else if (b->parsed()) {
        report = run_bs(bs);
      } else if (rp->parsed()) {
        report = run_reproduce({seed, tamper});
      } else if (st->parsed()) {
        report = run_selftest(seed);
      }
    } catch (UsageError const& e) {
      err << "usage error: " << e.what() << "\n";
      return exit_usage;
    } catch (ParseError const& e) {
      err << "input error: " << e.what() << "\n";
      return exit_usage;
    } catch (PreconditionError const& e) {
      err << "precondition failed: " << e.what() << "\n";
      return exit_usage;
    } catch (ResourceError const& e) {
      err << "resource cap: " << e.what() << "\n";
      return exit_fail;
    }
    report.seed = seed;
    std::string command;
    for (int i = 1; i < argc; ++i) {
      command += (i > 1 ? " " : "") + std::string(argv[i]);
    }
    report.command = command;
    auto text      = report.to_json().dump(compact ? -1 : 2) + "\n";
    out << text;
    if (!output.empty()) {
      std::ofstream f(output);
      if (!f) {
        err << "cannot write '" << output << "'\n";
        return exit_usage;
      }
      f << text;
    }
    return report.pass() ? exit_pass : exit_fail;
  }

}  // namespace slenderlab::cli
