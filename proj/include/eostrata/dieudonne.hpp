#pragma once

// Mod-p Dieudonne modules of symmetric BT_1 group schemes, in the monomial
// model: D is a 2g-dimensional k-vector space with a distinguished basis on
// which F and V act by sending each basis element to +-(another basis
// element) or to 0, subject to FV = VF = 0.  Every subspace that the theory
// needs (images, preimages, kernels, the canonical filtration) is then a
// coordinate subspace, so subspaces are just index sets.
//
// Building blocks (direct sums of these realize every symmetric BT_1 over
// an algebraically closed field for g <= 4, and the standard families for
// all g):
//
//   L          = E/(F, 1-V) + E/(V, 1-F)          (ordinary block, g = 1)
//   I_{r,1}    = E/(F^r + V^r)                    (g = r, a = 1)
//   I_{r,2}    = E/(F^{r-1} - V) + E/(V^{r-1} - F)  (g = r >= 3, a = 2)
//   I_{4,3}    = E/(F^2 - V) + E/(F - V) + E/(V^2 - F)   (g = 4, a = 3)
//
// where E = k[F, V] with FV = VF = 0.

#include <cstdint>
#include <string>
#include <vector>

#include "eostrata/strata.hpp"

namespace eo {

// A coordinate subspace: bit i set <=> basis element i is a member.
struct Subspace {
  std::uint64_t members = 0;
  int ambient = 0;  // dimension of the containing module

  int dim() const;
  bool contains(int index) const { return members >> index & 1; }
  bool subset_of(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
};

class MonomialModule {
 public:
  // Image of one basis element under F or V: +-e_target, or 0 if
  // target < 0.
  struct Action {
    int target = -1;
    int sign = 1;

    bool is_zero() const { return target < 0; }
    friend bool operator==(const Action&, const Action&) = default;
  };

  // Validates: dim = 2g, labels distinct, FV = VF = 0, and each of F, V
  // hits any basis element at most once (so preimages of coordinate
  // subspaces are again coordinate).  Throws std::invalid_argument.
  MonomialModule(int g, std::vector<std::string> labels, std::vector<Action> f,
                 std::vector<Action> v);

  int dim() const { return static_cast<int>(labels_.size()); }
  int g() const { return g_; }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  Action f_action(int i) const { return f_.at(i); }
  Action v_action(int i) const { return v_.at(i); }

  Subspace zero_subspace() const { return Subspace{0, dim()}; }
  Subspace full_subspace() const;
  Subspace span_of(const std::vector<int>& indices) const;

  // V(s), F(s), {x : V(x) in s}, {x : F(x) in s}, ker V, ker F.
  // Preimages always contain the kernel.  All arguments must have
  // ambient == dim().
  Subspace apply_V(const Subspace& s) const;
  Subspace apply_F(const Subspace& s) const;
  Subspace preimage_V(const Subspace& s) const;
  Subspace preimage_F(const Subspace& s) const;
  Subspace kernel_V() const;
  Subspace kernel_F() const;

  friend bool operator==(const MonomialModule&, const MonomialModule&) = default;

 private:
  void check_subspace(const Subspace& s) const;

  int g_;
  std::vector<std::string> labels_;
  std::vector<Action> f_, v_;
};

MonomialModule module_L();
MonomialModule module_I_r_1(int r);          // r >= 1
MonomialModule module_I_r_2(int r);          // r >= 3
MonomialModule module_I_4_3();

// Block-diagonal sum; basis labels get "1.", "2.", ... prefixes when there
// is more than one factor (a single factor is returned unchanged).
MonomialModule direct_sum(const std::vector<MonomialModule>& factors);

// The canonical filtration: the closure of {0, D} under s -> V(s) and
// s -> F^{-1}(s).  For a symmetric module it is totally ordered, contains
// V(D) of dimension g, and between consecutive pieces dim V(.) grows with
// slope 0 or 1, which pins down the final type:
//
//     nu_i = dim V(N_i)   for the refinement N_i of the filtration, i <= g.
//
// The dual filtration is the closure under s -> F(s) and s -> V^{-1}(s);
// interaction[i-1] = dim(N_i intersect N'_g) where N'_g = F(D).
struct FiltrationReport {
  std::vector<Subspace> canonical;   // increasing, starts at 0, ends at D
  std::vector<Subspace> dual;        // same for the dual filtration
  std::vector<Subspace> refined;     // full flag N_0 c N_1 c ... c N_2g
  std::vector<int> nu;               // length g
  std::vector<int> interaction;      // length g
};

// Throws std::runtime_error when the module is not symmetric (dim V(D) or
// dim F(D) differs from g, or a filtration gap has non-integral slope).
FiltrationReport canonical_filtration(const MonomialModule& m);

FinalType final_type(const MonomialModule& m);

// dim of the stable image of V (the chain D > V(D) > V^2(D) > ... halts
// within 2g steps).  Counting multiplicities of V-power images instead
// undercounts already for I_{2,1}, whose V^2(D) is nonzero but dies one
// step later.
int p_rank(const MonomialModule& m);

// g - dim V^2(D); equals dim(V(D) intersect F(D)).
int a_number(const MonomialModule& m);

// Text rendering helpers used by the CLI's --show-module/--show-filtration.
std::string render_subspace(const MonomialModule& m, const Subspace& s);
std::string render_action_table(const MonomialModule& m);

}  // namespace eo
