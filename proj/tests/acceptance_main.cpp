// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// fails.  Each criterion recomputes its claim from scratch against the
// library; nothing here trusts intermediate caches.

#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "eostrata/catalog.hpp"
#include "eostrata/dieudonne.hpp"
#include "eostrata/poset.hpp"
#include "eostrata/render.hpp"
#include "eostrata/strata.hpp"
#include "eostrata/tautring.hpp"
#include "eostrata/weyl.hpp"

using namespace eo;

namespace {

struct Criterion {
  std::string label;
  std::function<bool()> run;
};

Subspace meet(const Subspace& a, const Subspace& b) {
  return Subspace{a.members & b.members, a.ambient};
}

bool golden_rows_reproduced() {
  for (int g = 1; g <= 4; ++g) {
    if (static_cast<int>(golden_table(g).size()) != (1 << g)) return false;
    for (const GoldenRow& row : golden_table(g)) {
      if (final_to_young(row.nu) != row.mu) return false;
      if (young_to_final(row.mu) != row.nu) return false;
      if (p_rank_of_final(row.nu) != row.f) return false;
      if (a_number_of_final(row.nu) != row.a) return false;
      if (stratum_codim(row.mu) != row.codim) return false;
    }
  }
  return true;
}

bool counts_are_powers_of_two() {
  for (int g = 1; g <= 12; ++g)
    if (enumerate_final_types(g).size() != (std::size_t{1} << g)) return false;
  return true;
}

bool engine_matches_tables() {
  for (int g = 1; g <= 4; ++g) {
    for (const GoldenRow& row : golden_table(g)) {
      MonomialModule m = build_module(parse_name(row.name));
      if (final_type(m) != row.nu) return false;
      if (p_rank(m) != row.f || a_number(m) != row.a) return false;
    }
  }
  if (final_type(module_I_4_3()).nu != std::vector<int>{0, 0, 1, 1}) return false;
  if (final_type(module_I_r_2(3)).nu != std::vector<int>{0, 1, 1}) return false;
  return true;
}

bool family_formulas_hold() {
  for (int g = 1; g <= 10; ++g) {
    for (int f = 0; f < g; ++f) {
      std::vector<MonomialModule> blocks(f, module_L());
      blocks.push_back(module_I_r_1(g - f));
      FinalType t = final_type(direct_sum(blocks));
      for (int i = 1; i <= g; ++i)
        if (t.nu[i - 1] != (i <= f ? i : i - 1)) return false;
      if (final_to_young(t).mu != std::vector<int>{g - f}) return false;
    }
    for (int f = 0; f <= g; ++f) {
      std::vector<MonomialModule> blocks(f, module_L());
      blocks.insert(blocks.end(), g - f, module_I_r_1(1));
      FinalType t = final_type(direct_sum(blocks));
      for (int i = 1; i <= g; ++i)
        if (t.nu[i - 1] != std::min(i, f)) return false;
      std::vector<int> staircase(g - f);
      for (int j = 0; j < g - f; ++j) staircase[j] = g - f - j;
      if (final_to_young(t).mu != staircase) return false;
    }
  }
  for (int r = 3; r <= 8; ++r) {
    FinalType t = final_type(module_I_r_2(r));
    std::vector<int> expected(r);  // [0,1,...,r-2,r-2]
    for (int i = 1; i < r; ++i) expected[i] = i;
    expected[r - 1] = r - 2;
    if (t.nu != expected) return false;
  }
  return true;
}

bool table_words_check_out() {
  for (int g = 1; g <= 4; ++g) {
    for (const GoldenRow& row : golden_table(g)) {
      WeylElement omega = from_young(row.mu);
      if (evaluate_word(row.omega_word) != omega) return false;
      if (static_cast<int>(row.omega_word.letters.size()) != length(omega)) return false;
      if (length(omega) != stratum_dim(row.nu)) return false;
    }
  }
  return true;
}

bool orders_agree() {
  for (int g = 1; g <= 4; ++g)
    if (!orders_match(g)) return false;
  return true;
}

bool hasse_g4_matches() {
  HasseDiagram d = hasse(4);
  if (d.nodes.size() != 16) return false;
  std::set<std::pair<std::vector<int>, std::vector<int>>> computed, stored;
  for (const auto& [a, b] : d.edges) computed.emplace(a.mu, b.mu);
  for (const auto& [a, b] : golden_hasse_g4_edges()) stored.emplace(a.mu, b.mu);
  return computed.size() == 20 && computed == stored;
}

bool dimensions_conserve() {
  for (int g = 1; g <= 10; ++g)
    for (const FinalType& t : enumerate_final_types(g))
      if (stratum_dim(t) + stratum_codim(final_to_young(t)) != g * (g + 1) / 2) return false;
  return true;
}

bool interactions_check_out() {
  for (int g = 1; g <= 4; ++g) {
    for (const GoldenRow& row : golden_table(g)) {
      FiltrationReport rep = canonical_filtration(build_module(parse_name(row.name)));
      if (rep.interaction[g - 1] != row.a) return false;
      for (int i = 1; i <= g; ++i)
        if (rep.interaction[i - 1] < i - rep.nu[i - 1]) return false;
    }
  }
  FiltrationReport ordinary =
      canonical_filtration(direct_sum(std::vector<MonomialModule>(4, module_L())));
  FiltrationReport superspecial =
      canonical_filtration(direct_sum(std::vector<MonomialModule>(4, module_I_r_1(1))));
  for (int i = 1; i <= 4; ++i) {
    if (ordinary.interaction[i - 1] != 0) return false;
    if (superspecial.interaction[i - 1] != i) return false;
  }
  return true;
}

bool cycle_classes_match() {
  for (int g = 1; g <= 3; ++g) {
    for (const GoldenRow& row : golden_table(g)) {
      if (row.a > 1) continue;
      if (!row.cycle_class || *row.cycle_class != prank_class(g, row.f)) return false;
    }
  }
  // the factored a = 2 class for g = 3 expands to the frozen coefficients
  const GoldenRow* target = nullptr;
  for (const GoldenRow& row : golden_table(3))
    if (row.name == "I[1,1]+I[2,1]") target = &row;
  if (!target || !target->cycle_class_text) return false;
  LambdaPoly parsed = parse_lambda_poly(3, *target->cycle_class_text);
  PPoly expanded;
  const std::vector<long long> coeffs = {1, -2, 1, 0, 0, 0, -1, 2, -1};  // -p^8+2p^7-p^6+p^2-2p+1
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k)
    expanded += PPoly::monomial(coeffs[k], k);
  return parsed == LambdaPoly::term(3, expanded, {0, 1, 1}) && parsed == *target->cycle_class;
}

bool kernel_dimensions_match() {
  MonomialModule i21 = module_I_r_1(2);
  if (i21.preimage_V(i21.kernel_V()).dim() != 3) return false;
  MonomialModule i11 = module_I_r_1(1);
  return meet(i11.kernel_F(), i11.kernel_V()).dim() == 1;
}

bool decomposable_lists_check_out() {
  for (int g = 2; g <= 8; ++g) {
    std::vector<GroupSchemeName> names = decomposable_a2_list(g);
    if (static_cast<int>(names.size()) != g / 2) return false;
    std::set<std::vector<int>> types;
    for (const GroupSchemeName& n : names) {
      MonomialModule m = build_module(n);
      if (p_rank(m) != 0 || a_number(m) != 2) return false;
      types.insert(final_type(m).nu);
    }
    if (types.size() != names.size()) return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"golden tables: all 30 classification rows reproduced", golden_rows_reproduced},
      {"enumeration counts 2^g types for g = 1..12", counts_are_powers_of_two},
      {"module engine matches every named row (nu, f, a)", engine_matches_tables},
      {"family formulas for L^f+I[g-f,1], L^f+I[1,1]^(g-f), I[r,2]", family_formulas_hold},
      {"table words are reduced and evaluate to from_young(mu)", table_words_check_out},
      {"Young-type order mirrors Bruhat order for g = 1..4", orders_agree},
      {"hasse(4) has 16 nodes and exactly the stored 20 covers", hasse_g4_matches},
      {"dim + codim = g(g+1)/2 for every type, g = 1..10", dimensions_conserve},
      {"filtration interaction dims: a at i=g, extremes, lower bound", interactions_check_out},
      {"p-rank cycle classes match; factored a=2 class expands correctly", cycle_classes_match},
      {"kernel dims: ker V^2 in I[2,1], ker F ^ ker V in I[1,1]", kernel_dimensions_match},
      {"decomposable f=0,a=2 lists: floor(g/2) distinct types, g = 2..8", decomposable_lists_check_out},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    bool ok = false;
    try {
      ok = criteria[k].run();
    } catch (const std::exception& e) {
      std::printf("FAIL %2zu. %s  (exception: %s)\n", k + 1, criteria[k].label.c_str(), e.what());
      ++failures;
      continue;
    }
    std::printf("%s %2zu. %s\n", ok ? "PASS" : "FAIL", k + 1, criteria[k].label.c_str());
    if (!ok) ++failures;
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
