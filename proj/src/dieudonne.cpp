#include "eostrata/dieudonne.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace eo {

int Subspace::dim() const { return std::popcount(members); }

bool Subspace::subset_of(const Subspace& other) const {
  return ambient == other.ambient && (members & ~other.members) == 0;
}

MonomialModule::MonomialModule(int g, std::vector<std::string> labels, std::vector<Action> f,
                               std::vector<Action> v)
    : g_(g), labels_(std::move(labels)), f_(std::move(f)), v_(std::move(v)) {
  const int n = static_cast<int>(labels_.size());
  if (g < 1 || n != 2 * g)
    throw std::invalid_argument("module dimension must be 2g");
  if (n > 62)
    throw std::invalid_argument("module too large for the bitmask representation");
  if (static_cast<int>(f_.size()) != n || static_cast<int>(v_.size()) != n)
    throw std::invalid_argument("action tables must cover every basis element");
  std::unordered_set<std::string> distinct(labels_.begin(), labels_.end());
  if (static_cast<int>(distinct.size()) != n)
    throw std::invalid_argument("basis labels must be distinct");

  auto check_map = [&](const std::vector<Action>& m, const char* name) {
    std::vector<char> hit(n, 0);
    for (const Action& a : m) {
      if (a.is_zero()) continue;
      if (a.target >= n || (a.sign != 1 && a.sign != -1))
        throw std::invalid_argument(std::string(name) + ": malformed action");
      if (hit[a.target])
        throw std::invalid_argument(std::string(name) +
                                    " hits a basis element twice; preimages would not be coordinate subspaces");
      hit[a.target] = 1;
    }
  };
  check_map(f_, "F");
  check_map(v_, "V");
  for (int i = 0; i < n; ++i) {
    if (!v_[i].is_zero() && !f_[v_[i].target].is_zero())
      throw std::invalid_argument("FV != 0 at basis element " + labels_[i]);
    if (!f_[i].is_zero() && !v_[f_[i].target].is_zero())
      throw std::invalid_argument("VF != 0 at basis element " + labels_[i]);
  }
}

Subspace MonomialModule::full_subspace() const {
  const int n = dim();
  return Subspace{n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, n};
}

Subspace MonomialModule::span_of(const std::vector<int>& indices) const {
  Subspace s = zero_subspace();
  for (int i : indices) {
    if (i < 0 || i >= dim()) throw std::invalid_argument("basis index out of range");
    s.members |= std::uint64_t{1} << i;
  }
  return s;
}

void MonomialModule::check_subspace(const Subspace& s) const {
  if (s.ambient != dim() || (s.members & ~full_subspace().members) != 0)
    throw std::invalid_argument("subspace does not belong to this module");
}

namespace {

Subspace image_under(const std::vector<MonomialModule::Action>& m, const Subspace& s) {
  Subspace out{0, s.ambient};
  for (int i = 0; i < s.ambient; ++i)
    if (s.contains(i) && !m[i].is_zero()) out.members |= std::uint64_t{1} << m[i].target;
  return out;
}

Subspace preimage_under(const std::vector<MonomialModule::Action>& m, const Subspace& s) {
  Subspace out{0, s.ambient};
  for (int i = 0; i < s.ambient; ++i)
    if (m[i].is_zero() || s.contains(m[i].target)) out.members |= std::uint64_t{1} << i;
  return out;
}

}  // namespace

Subspace MonomialModule::apply_V(const Subspace& s) const {
  check_subspace(s);
  return image_under(v_, s);
}

Subspace MonomialModule::apply_F(const Subspace& s) const {
  check_subspace(s);
  return image_under(f_, s);
}

Subspace MonomialModule::preimage_V(const Subspace& s) const {
  check_subspace(s);
  return preimage_under(v_, s);
}

Subspace MonomialModule::preimage_F(const Subspace& s) const {
  check_subspace(s);
  return preimage_under(f_, s);
}

Subspace MonomialModule::kernel_V() const { return preimage_V(zero_subspace()); }

Subspace MonomialModule::kernel_F() const { return preimage_F(zero_subspace()); }

namespace {

constexpr int kZero = -1;

struct Builder {
  std::vector<std::string> labels;
  std::vector<MonomialModule::Action> f, v;

  int add(std::string label) {
    labels.push_back(std::move(label));
    f.push_back({kZero, 1});
    v.push_back({kZero, 1});
    return static_cast<int>(labels.size()) - 1;
  }
  void set_f(int from, int to, int sign = 1) { f[from] = {to, sign}; }
  void set_v(int from, int to, int sign = 1) { v[from] = {to, sign}; }
  MonomialModule finish(int g) && {
    return MonomialModule(g, std::move(labels), std::move(f), std::move(v));
  }
};

std::string power_label(const char* base, int k) {
  if (k == 0) return "1";
  if (k == 1) return base;
  return std::string(base) + "^" + std::to_string(k);
}

}  // namespace

MonomialModule module_L() {
  Builder b;
  int e1 = b.add("e1"), e2 = b.add("e2");
  b.set_v(e1, e1);
  b.set_f(e2, e2);
  return std::move(b).finish(1);
}

MonomialModule module_I_r_1(int r) {
  if (r < 1) throw std::invalid_argument("I_{r,1} needs r >= 1");
  // Basis of E/(F^r + V^r): F, ..., F^r, 1, V, ..., V^{r-1}.  The relation
  // makes V act on V^{r-1} by -F^r.
  Builder b;
  std::vector<int> fpow(r + 1, kZero), vpow(r, kZero);
  for (int k = 1; k <= r; ++k) fpow[k] = b.add(power_label("F", k));
  vpow[0] = b.add("1");
  for (int k = 1; k < r; ++k) vpow[k] = b.add(power_label("V", k));
  for (int k = 1; k < r; ++k) b.set_f(fpow[k], fpow[k + 1]);
  b.set_f(vpow[0], fpow[1]);
  for (int k = 0; k < r - 1; ++k) b.set_v(vpow[k], vpow[k + 1]);
  b.set_v(vpow[r - 1], fpow[r], -1);
  return std::move(b).finish(r);
}

MonomialModule module_I_r_2(int r) {
  if (r < 3) throw std::invalid_argument("I_{r,2} needs r >= 3");
  // E/(F^{r-1} - V) + E/(V^{r-1} - F); in each cyclic factor the displaced
  // operator feeds the top power of the other one.
  Builder b;
  std::vector<int> fchain(r), vchain(r);
  for (int k = 0; k < r; ++k) fchain[k] = b.add("1." + power_label("F", k));
  for (int k = 0; k < r; ++k) vchain[k] = b.add("2." + power_label("V", k));
  for (int k = 0; k + 1 < r; ++k) b.set_f(fchain[k], fchain[k + 1]);
  b.set_v(fchain[0], fchain[r - 1]);
  for (int k = 0; k + 1 < r; ++k) b.set_v(vchain[k], vchain[k + 1]);
  b.set_f(vchain[0], vchain[r - 1]);
  return std::move(b).finish(r);
}

MonomialModule module_I_4_3() {
  // Three generators joined in a single F/V cycle:
  //
  //     F^2 e1 = V e2,   F e2 = V^2 e3,   F e3 = V e1.
  //
  // (Reading the relations as three *independent* cyclic quotients instead
  // yields a module isomorphic to I_{1,1} + I_{3,2}, whose final type is
  // [0,1,1,1]; the linking is what makes this one indecomposable with
  // final type [0,0,1,1].)  The shared vectors keep the label of the
  // factor whose generator reaches them first, so V^2 e3 prints as 2.F and
  // V e1 as 3.F.
  Builder b;
  int a0 = b.add("1.1"), a1 = b.add("1.F"), a2 = b.add("1.F^2");
  int b0 = b.add("2.1"), b1 = b.add("2.F");
  int c0 = b.add("3.1"), c1 = b.add("3.V"), c2 = b.add("3.F");
  b.set_f(a0, a1);
  b.set_f(a1, a2);
  b.set_f(b0, b1);
  b.set_f(c0, c2);
  b.set_v(b0, a2);  // V e2 = F^2 e1
  b.set_v(c0, c1);
  b.set_v(c1, b1);  // V^2 e3 = F e2
  b.set_v(a0, c2);  // V e1 = F e3
  return std::move(b).finish(4);
}

MonomialModule direct_sum(const std::vector<MonomialModule>& factors) {
  if (factors.empty()) throw std::invalid_argument("direct sum of no factors");
  if (factors.size() == 1) return factors.front();
  Builder b;
  int g = 0, offset = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const MonomialModule& m = factors[k];
    const std::string prefix = std::to_string(k + 1) + ".";
    for (int i = 0; i < m.dim(); ++i) b.add(prefix + m.label(i));
    for (int i = 0; i < m.dim(); ++i) {
      if (auto a = m.f_action(i); !a.is_zero()) b.set_f(offset + i, offset + a.target, a.sign);
      if (auto a = m.v_action(i); !a.is_zero()) b.set_v(offset + i, offset + a.target, a.sign);
    }
    offset += m.dim();
    g += m.g();
  }
  return std::move(b).finish(g);
}

namespace {

// Closure of {0, D} under the two given subspace operators, sorted by
// dimension; throws if the result is not a chain.
std::vector<Subspace> chain_closure(const MonomialModule& m,
                                    Subspace (MonomialModule::*img)(const Subspace&) const,
                                    Subspace (MonomialModule::*pre)(const Subspace&) const) {
  std::set<std::uint64_t> seen;
  std::vector<Subspace> work{m.zero_subspace(), m.full_subspace()};
  seen.insert(work[0].members);
  seen.insert(work[1].members);
  for (std::size_t i = 0; i < work.size(); ++i) {
    Subspace cur = work[i];  // copy: work may reallocate
    for (Subspace next : {(m.*img)(cur), (m.*pre)(cur)}) {
      if (seen.insert(next.members).second) work.push_back(next);
    }
  }
  std::sort(work.begin(), work.end(),
            [](const Subspace& x, const Subspace& y) { return x.dim() < y.dim(); });
  for (std::size_t i = 0; i + 1 < work.size(); ++i)
    if (!work[i].subset_of(work[i + 1]))
      throw std::runtime_error("canonical filtration is not totally ordered by inclusion");
  return work;
}

}  // namespace

FiltrationReport canonical_filtration(const MonomialModule& m) {
  const int g = m.g();
  FiltrationReport report;
  report.canonical = chain_closure(m, &MonomialModule::apply_V, &MonomialModule::preimage_F);
  report.dual = chain_closure(m, &MonomialModule::apply_F, &MonomialModule::preimage_V);

  if (m.apply_V(m.full_subspace()).dim() != g || m.apply_F(m.full_subspace()).dim() != g)
    throw std::runtime_error("module is not symmetric: V(D) and F(D) must have dimension g");

  // Refine the canonical chain to a full flag, adding the lowest-index
  // missing basis element at each step.  Between canonical pieces V acts
  // with constant slope 0 or 1, so dim V(N_i) does not depend on the fill
  // order; reject the module if a gap violates that.
  report.refined.push_back(m.zero_subspace());
  for (std::size_t k = 0; k + 1 < report.canonical.size(); ++k) {
    const Subspace &lo = report.canonical[k], &hi = report.canonical[k + 1];
    const int vlo = m.apply_V(lo).dim(), vhi = m.apply_V(hi).dim();
    const int gap = hi.dim() - lo.dim();
    if (vhi != vlo && vhi - vlo != gap)
      throw std::runtime_error("canonical filtration gap has non-integral V-slope; "
                               "module is outside the symmetric BT_1 regime");
    Subspace cur = lo;
    for (int i = 0; i < m.dim(); ++i) {
      if (hi.contains(i) && !cur.contains(i)) {
        cur.members |= std::uint64_t{1} << i;
        report.refined.push_back(cur);
      }
    }
  }

  report.nu.resize(g);
  for (int i = 1; i <= g; ++i) report.nu[i - 1] = m.apply_V(report.refined[i]).dim();

  const Subspace n_dual_g = m.apply_F(m.full_subspace());
  report.interaction.resize(g);
  for (int i = 1; i <= g; ++i) {
    Subspace meet{report.refined[i].members & n_dual_g.members, m.dim()};
    report.interaction[i - 1] = meet.dim();
  }
  return report;
}

FinalType final_type(const MonomialModule& m) {
  return make_final_type(m.g(), canonical_filtration(m).nu);
}

int p_rank(const MonomialModule& m) {
  Subspace s = m.full_subspace();
  for (int step = 0; step <= 2 * m.g(); ++step) {
    Subspace next = m.apply_V(s);
    if (next.dim() == s.dim()) return s.dim();
    s = next;
  }
  return s.dim();  // unreachable for valid modules: dims strictly decrease
}

int a_number(const MonomialModule& m) {
  return m.g() - m.apply_V(m.apply_V(m.full_subspace())).dim();
}

std::string render_subspace(const MonomialModule& m, const Subspace& s) {
  if (s.members == 0) return "0";
  std::ostringstream os;
  os << "< ";
  bool first = true;
  for (int i = 0; i < m.dim(); ++i) {
    if (!s.contains(i)) continue;
    if (!first) os << ", ";
    os << m.label(i);
    first = false;
  }
  os << " >";
  return os.str();
}

std::string render_action_table(const MonomialModule& m) {
  auto cell = [&](const MonomialModule::Action& a) {
    if (a.is_zero()) return std::string("0");
    return (a.sign < 0 ? "-" : "") + m.label(a.target);
  };
  std::size_t w = 5;  // "basis"
  for (int i = 0; i < m.dim(); ++i) {
    w = std::max({w, m.label(i).size(), cell(m.f_action(i)).size(), cell(m.v_action(i)).size()});
  }
  auto pad = [&](const std::string& s) { return s + std::string(w - s.size() + 2, ' '); };
  std::ostringstream os;
  os << pad("basis") << pad("F") << "V\n";
  for (int i = 0; i < m.dim(); ++i)
    os << pad(m.label(i)) << pad(cell(m.f_action(i))) << cell(m.v_action(i)) << '\n';
  return os.str();
}

}  // namespace eo
