#pragma once

// The Weyl group W_g of Sp_2g, realized inside S_2g as the permutations
// omega of {1,...,2g} with
//
//     omega(i) + omega(2g+1-i) = 2g+1   for all i.
//
// Generators:  s_i = (i,i+1)(2g-i,2g+1-i) for 1 <= i < g,  s_g = (g,g+1).
// Words multiply with the *leftmost letter acting first*: the word
// s_1 s_2 sends x to s_2(s_1(x)).  Each Ekedahl-Oort stratum corresponds to
// the element from_young(mu), whose Coxeter length equals the stratum
// dimension.

#include <string>
#include <vector>

#include "eostrata/strata.hpp"

namespace eo {

// Letters are generator indices in 1..g, leftmost first.
struct WeylWord {
  int g = 0;
  std::vector<int> letters;

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

class WeylElement {
 public:
  // one_line[i-1] = omega(i); validates bijectivity and the pairing
  // condition, throws std::invalid_argument otherwise.
  WeylElement(int g, std::vector<int> one_line);

  static WeylElement identity(int g);

  int g() const { return g_; }
  int degree() const { return 2 * g_; }
  bool is_identity() const;

  // omega(x) for 1 <= x <= 2g.
  int operator()(int x) const { return img_[x - 1]; }
  const std::vector<int>& one_line() const { return img_; }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  int g_;
  std::vector<int> img_;
};

// s_i as above; requires 1 <= i <= g.
WeylElement generator(int g, int i);

// Leftmost letter first; the empty word is the identity.
WeylElement evaluate_word(const WeylWord& w);

// The Weyl element of a stratum.  Scanning i = 1..g: a jump (nu_i =
// nu_{i-1}+1) assigns omega(i) = g + (jumps so far), a stay assigns
// omega(i) = (stays so far); positions g+1..2g follow from the pairing.
WeylElement from_young(const YoungType& y);

// Coxeter length of w with respect to s_1..s_g.
int length(const WeylElement& w);

// A reduced word for w via greedy descent: repeatedly strip the
// smallest-index right descent.  Deterministic; empty word for the identity.
WeylWord reduced_word(const WeylElement& w);

// Bruhat order on W_g (restricted from S_2g; the identity is the minimum).
// Dominance criterion on rank matrices: u <= w iff for all i,j
//     #{ x <= i : u(x) >= j }  <=  #{ x <= i : w(x) >= j }.
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

// "s3*s2*s3"; the identity renders as "1".
std::string render_word(const WeylWord& w);

// "<3,4,1,2>"
std::string render_one_line(const WeylElement& w);

}  // namespace eo
