#pragma once

// Core combinatorial encodings for the Ekedahl-Oort stratification of the
// moduli of g-dimensional principally polarized abelian varieties in
// characteristic p.
//
// A stratum is encoded either by its *final type*, a sequence
//
//     nu = [nu_1, ..., nu_g],  nu_0 = 0,  nu_{i-1} <= nu_i <= nu_{i-1} + 1,
//
// or by its *Young type*, a strictly decreasing partition
//
//     mu = {mu_1 > mu_2 > ... > mu_a},  1 <= mu_j <= g,
//
// where mu_j = #{ i : 1 <= i <= g, j <= i - nu_i }.  The two encodings are
// in bijection; there are exactly 2^g strata for each g.  The empty Young
// type corresponds to the ordinary stratum.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eo {

struct FinalType {
  int g = 0;
  std::vector<int> nu;  // nu[i] == nu_{i+1}, length g

  friend bool operator==(const FinalType&, const FinalType&) = default;
};

struct YoungType {
  int g = 0;
  std::vector<int> mu;  // strictly decreasing, parts in 1..g, may be empty

  friend bool operator==(const YoungType&, const YoungType&) = default;
};

// True iff nu satisfies the final-type inequalities for genus g.
// Throws std::invalid_argument if g < 1 or nu.size() != g; a sequence of
// the wrong length is a usage error, not merely an invalid type.
bool validate_final_type(int g, const std::vector<int>& nu);

// Validating constructors.  Throw std::invalid_argument on bad input.
FinalType make_final_type(int g, std::vector<int> nu);
YoungType make_young_type(int g, std::vector<int> mu);

// All 2^g final types for genus g, in lexicographic order on nu
// (so the superspecial type [0,...,0] comes first and the ordinary type
// [1,2,...,g] last).  This is the canonical enumeration order used by all
// table-producing code.
std::vector<FinalType> enumerate_final_types(int g);

YoungType final_to_young(const FinalType& t);
FinalType young_to_final(const YoungType& y);

// p-rank f = max{ i : nu_i = i } (0 if no such i).
int p_rank_of_final(const FinalType& t);

// a-number a = g - nu_g.
int a_number_of_final(const FinalType& t);

// (f, a) read off the Young side: f = g - mu_1 (mu_1 = 0 when empty),
// a = number of parts.
std::pair<int, int> invariants_of_young(const YoungType& y);

// dim = sum nu_i, codim = sum mu_j; the two always add up to g(g+1)/2.
int stratum_dim(const FinalType& t);
int stratum_codim(const YoungType& y);

// One row of a stratum table: both encodings plus the numerical invariants.
// `name` is the canonical polarized-module name when one is known (g <= 4).
struct StratumRecord {
  FinalType final_type;
  YoungType young_type;
  int f = 0;
  int a = 0;
  int dim = 0;
  int codim = 0;
  std::optional<std::string> name;

  friend bool operator==(const StratumRecord&, const StratumRecord&) = default;
};

StratumRecord stratum_record(const FinalType& t);

// Canonical text renderings shared by the CLI and the test suite:
// nu as "[0,1,1]", mu as "{3,1}" with "{}" for the empty type.
std::string render_nu(const FinalType& t);
std::string render_mu(const YoungType& y);

}  // namespace eo
