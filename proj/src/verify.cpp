#include "eostrata/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "eostrata/catalog.hpp"
#include "eostrata/dieudonne.hpp"
#include "eostrata/poset.hpp"
#include "eostrata/strata.hpp"
#include "eostrata/tautring.hpp"
#include "eostrata/weyl.hpp"

namespace eo {

namespace {

struct Session {
  VerificationReport report;

  void check(bool ok, const std::string& what) {
    ++report.checks_run;
    if (!ok) report.failures.push_back(what);
  }
};

void verify_golden_rows(Session& s) {
  for (int g = 1; g <= 4; ++g) {
    for (const GoldenRow& row : golden_table(g)) {
      const std::string at = "g=" + std::to_string(g) + " " + row.name;

      // Combinatorial route.
      s.check(final_to_young(row.nu) == row.mu, at + ": nu -> mu");
      s.check(young_to_final(row.mu) == row.nu, at + ": mu -> nu");
      s.check(p_rank_of_final(row.nu) == row.f, at + ": p-rank");
      s.check(a_number_of_final(row.nu) == row.a, at + ": a-number");
      s.check(invariants_of_young(row.mu) == std::pair{row.f, row.a}, at + ": (f,a) from mu");
      s.check(stratum_codim(row.mu) == row.codim, at + ": codim");
      s.check(stratum_dim(row.nu) + row.codim == g * (g + 1) / 2, at + ": dim + codim");

      // Engine route.
      MonomialModule m = build_module(parse_name(row.name));
      s.check(final_type(m) == row.nu, at + ": module final type");
      s.check(p_rank(m) == row.f, at + ": module p-rank");
      s.check(a_number(m) == row.a, at + ": module a-number");

      // Weyl route: the stored word is reduced and evaluates to
      // from_young(mu), whose length is the stratum dimension.
      WeylElement omega = from_young(row.mu);
      s.check(evaluate_word(row.omega_word) == omega, at + ": stored word evaluates to omega");
      s.check(static_cast<int>(row.omega_word.letters.size()) == length(omega),
              at + ": stored word is reduced");
      s.check(length(omega) == stratum_dim(row.nu), at + ": length equals dimension");
      s.check(classify(row.nu) == parse_name(row.name), at + ": classify round-trip");
    }
  }
}

void verify_hasse_g4(Session& s) {
  HasseDiagram d = hasse(4);
  s.check(d.nodes.size() == 16, "hasse(4): 16 nodes");
  std::set<std::pair<std::vector<int>, std::vector<int>>> computed, golden;
  for (const auto& [a, b] : d.edges) computed.emplace(a.mu, b.mu);
  for (const auto& [a, b] : golden_hasse_g4_edges()) golden.emplace(a.mu, b.mu);
  s.check(computed == golden, "hasse(4): edge set equals the 20 stored covers");
}

void verify_orders(Session& s) {
  for (int g = 1; g <= 4; ++g)
    s.check(orders_match(g), "orders_match(" + std::to_string(g) + ")");
}

void verify_prank_classes(Session& s) {
  for (int g = 1; g <= 3; ++g) {
    for (const GoldenRow& row : golden_table(g)) {
      if (row.a > 1 || !row.cycle_class) continue;
      s.check(*row.cycle_class == prank_class(g, row.f),
              "g=" + std::to_string(g) + " " + row.name + ": cycle class is prank_class(g,f)");
    }
  }
}

}  // namespace

VerificationReport run_verification() {
  Session s;
  verify_golden_rows(s);
  verify_hasse_g4(s);
  verify_orders(s);
  verify_prank_classes(s);
  return s.report;
}

}  // namespace eo
