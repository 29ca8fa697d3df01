// Acceptance table. Prints one PASS/FAIL line per criterion and exits
// nonzero if any check fails that is not in the known-unattainable list.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "slenderlab/cli/suite.hpp"
#include "slenderlab/diagrams/counterexample.hpp"

using namespace slenderlab;

namespace {

  struct Check {
    std::string what;
    bool        ok    = false;
    bool        known = false;  // stated figure the construction cannot reach
  };

  struct Criterion {
    int                                 number;
    std::string                         title;
    double                              limit_s;  // 0: no time limit
    std::function<std::vector<Check>()> run;
  };

  std::vector<Check> from_report(cli::Report const& r) {
    std::vector<Check> out;
    for (auto const& rec : r.records) {
      out.push_back({rec.name + " = " + rec.actual.dump(), rec.pass});
    }
    return out;
  }

  std::vector<Check> counterexample_checks(std::int64_t n, std::int64_t k, std::int64_t k1,
                                           std::int64_t k2, std::int64_t m, std::size_t length,
                                           std::int64_t stated_chi, std::int64_t stated_bound) {
    auto rep = diagrams::make_counterexample(n);
    auto const& p = rep.params;
    std::vector<Check> c;
    auto num = [](auto v) { return std::to_string(v); };
    c.push_back({"params (" + num(p.k) + "," + num(p.k1) + "," + num(p.k2) + "," + num(p.m) + ")",
                 p.k == k && p.k1 == k1 && p.k2 == k2 && p.m == m && p.admissible()});
    c.push_back({"l(Delta) = " + num(rep.delta_reduced) + ", closed form " + num(rep.closed_form),
                 rep.delta_reduced == length && rep.closed_form == static_cast<std::int64_t>(length)
                     && rep.delta_was_reduced});
    c.push_back({"l(Delta^" + num(n) + ") = " + num(rep.power_cells) + " < " + num(length),
                 rep.power_cells < length});
    c.push_back({"l(Delta^" + num(n) + ") <= " + num(stated_bound),
                 static_cast<std::int64_t>(rep.power_cells) <= stated_bound, n == 3});
    c.push_back({"reduced chi^" + num(n) + " has " + num(rep.chi_power_cells) + " cells, stated "
                     + num(stated_chi),
                 static_cast<std::int64_t>(rep.chi_power_cells) == stated_chi, true});
    // recomputed figures the construction does reach
    c.push_back({"reduced chi^" + num(n) + " = 2n^2+4n-4 = " + num(p.chi_power_cells()),
                 rep.chi_power_ok()});
    c.push_back({"l(Delta^" + num(n) + ") <= l(chi^n) + 2 l(Psi) = " + num(p.power_bound()),
                 rep.power_ok()});
    return c;
  }

  struct Run {
    int         status = -1;
    std::string out;
  };

  Run run_cli(std::string const& args) {
    Run         r;
    std::string cmd = std::string("\"") + SLENDERLAB_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE*       f   = popen(cmd.c_str(), "r");
    if (!f) {
      return r;
    }
    std::array<char, 4096> buf{};
    std::size_t            n;
    while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) {
      r.out.append(buf.data(), n);
    }
    int st   = pclose(f);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
  }

  std::vector<Criterion> criteria() {
    cli::suite::Options o{1, false};
    return {
        {1, "diagram family counts", 1.0,
         [] {
           auto rep = diagrams::theta_family_check(diagrams::family::theta(), 10);
           std::vector<Check> c{{"l(theta) = " + std::to_string(rep.theta_cells), rep.theta_cells == 4}};
           bool ok = rep.power_cells.size() == 10;
           for (std::size_t m = 1; ok && m <= 10; ++m) {
             ok = rep.power_cells[m - 1] == 2 + 2 * m;
           }
           c.push_back({"l(theta^m) = 2+2m, m = 1..10", ok});
           return c;
         }},
        {2, "counterexample n=2", 10.0, [] { return counterexample_checks(2, 4, 4, 19, 5, 100, 8, 74); }},
        {3, "counterexample n=3", 60.0, [] { return counterexample_checks(3, 9, 5, 31, 6, 258, 18, 148); }},
        {4, "dipole-reduction confluence", 60.0, [o] { return from_report(cli::suite::confluence(o, 1000, 10)); }},
        {5, "F oracle equivalence", 30.0, [o] { return from_report(cli::suite::f_oracle(o, 200)); }},
        {6, "graph-product square growth", 60.0, [o] { return from_report(cli::suite::square_growth(o, 1000)); }},
        {7, "hyperbolic lab", 60.0, [o] { return from_report(cli::suite::hyperbolic_lab(o)); }},
        {8, "Higman descent", 30.0, [o] { return from_report(cli::suite::higman_descent(o)); }},
        {9, "BS(1,n) witnesses", 5.0, [o] { return from_report(cli::suite::bs_witnesses(o)); }},
        {10, "reproduce and negative control", 0.0,
         [] {
           auto a = run_cli("reproduce");
           auto b = run_cli("reproduce");
           auto t = run_cli("reproduce --tamper-theta");
           return std::vector<Check>{
               {"reproduce exit " + std::to_string(a.status), a.status == 0 && b.status == 0},
               {"reproduce output identical across runs", !a.out.empty() && a.out == b.out},
               {"5-cell theta exit " + std::to_string(t.status), t.status == 1},
           };
         }},
    };
  }

}  // namespace

int main() {
  bool unexpected = false;
  for (auto const& c : criteria()) {
    auto               t0 = std::chrono::steady_clock::now();
    std::vector<Check> checks;
    try {
      checks = c.run();
    } catch (std::exception const& e) {
      checks.push_back({std::string("exception: ") + e.what(), false});
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0) {
      std::ostringstream s;
      s << "time " << secs << " s < " << c.limit_s << " s";
      checks.push_back({s.str(), secs < c.limit_s});
    }

    std::string failed;
    bool        pass = true;
    for (auto const& ch : checks) {
      if (ch.ok) {
        continue;
      }
      pass = false;
      unexpected = unexpected || !ch.known;
      failed += (failed.empty() ? "" : "; ") + ch.what + (ch.known ? " [known]" : "");
    }
    std::ostringstream line;
    line.precision(3);
    line << "criterion " << c.number << " (" << c.title << "): " << (pass ? "PASS" : "FAIL")
         << "  [" << secs << " s]";
    if (!pass) {
      line << "  failed: " << failed;
    }
    std::cout << line.str() << "\n";
    for (auto const& ch : checks) {
      std::cout << "    " << (ch.ok ? "ok   " : "FAIL ") << ch.what << "\n";
    }
  }
  std::cout << (unexpected ? "unexpected failures\n" : "no unexpected failures\n");
  return unexpected ? 1 : 0;
}
