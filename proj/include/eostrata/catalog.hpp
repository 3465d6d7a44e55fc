#pragma once

// Names for symmetric BT_1 group schemes and the classification tables for
// g <= 4.
//
// Name grammar (ASCII; whitespace ignored):
//
//     name := term ("+" term)*
//     term := base ("^" posint)?
//     base := "L" | "I[" posint "," posint "]"
//
// semantics: "+" is direct sum, I[r,1] needs r >= 1, I[r,2] needs r >= 3,
// I[r,3] exists only for r = 4.  Canonical rendering lists L first, then
// the indecomposables sorted by (r, a), with multiplicities as exponents:
// "L^2+I[1,1]^2+I[2,1]".
//
// The classification tables are compiled in from data/golden_tables.json
// and checked for internal consistency on first access.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eostrata/dieudonne.hpp"
#include "eostrata/strata.hpp"
#include "eostrata/tautring.hpp"
#include "eostrata/weyl.hpp"

namespace eo {

struct IndecomposableFactor {
  int r = 1;
  int a = 1;

  friend auto operator<=>(const IndecomposableFactor&, const IndecomposableFactor&) = default;
};

struct GroupSchemeName {
  int l_exponent = 0;
  // sorted by (r, a), multiplicities positive
  std::vector<std::pair<IndecomposableFactor, int>> factors;

  int genus() const;

  friend bool operator==(const GroupSchemeName&, const GroupSchemeName&) = default;
};

// Throws std::invalid_argument; messages carry the position for syntax
// errors and the offending factor for semantic ones (e.g. "I[2,2]").
GroupSchemeName parse_name(const std::string& text);

std::string render_name(const GroupSchemeName& name);          // "L^2+I[2,1]"
std::string render_name_unicode(const GroupSchemeName& name);  // "L² ⊕ I_{2,1}"

// Direct sum of the named factors, L blocks first, then (r, a) order.
MonomialModule build_module(const GroupSchemeName& name);

struct GoldenRow {
  int g = 0;
  std::string name;
  int codim = 0;
  int f = 0;
  int a = 0;
  FinalType nu;
  YoungType mu;
  WeylWord omega_word;
  std::optional<std::string> cycle_class_text;  // factored form, g <= 3
  std::optional<LambdaPoly> cycle_class;        // its parsed value
};

// The 2, 4, 8, 16 classification rows in table order (codim ascending,
// then f descending, then a descending).  Throws for g outside 1..4.
const std::vector<GoldenRow>& golden_table(int g);

int golden_data_version();

// The 20 covers of the g = 4 specialization diagram, generic -> special.
const std::vector<std::pair<YoungType, YoungType>>& golden_hasse_g4_edges();

// Table-backed: the unique golden name with the given final type.  Throws
// std::invalid_argument for g > 4 ("classification table unavailable").
GroupSchemeName classify(const FinalType& t);

// The floor(g/2) decomposable names with f = 0 and a = 2:
// I[r,1]+I[g-r,1] for 1 <= r <= g/2.  Requires g >= 2.
std::vector<GroupSchemeName> decomposable_a2_list(int g);

}  // namespace eo
