#include "eostrata/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eo {

WeylElement::WeylElement(int g, std::vector<int> one_line) : g_(g), img_(std::move(one_line)) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  const int n = 2 * g;
  if (static_cast<int>(img_.size()) != n)
    throw std::invalid_argument("one-line notation must have length 2g = " + std::to_string(n));
  std::vector<char> seen(n + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a permutation of 1..2g");
    seen[v] = 1;
  }
  for (int i = 1; i <= n; ++i)
    if (img_[i - 1] + img_[n - i] != n + 1)
      throw std::invalid_argument("permutation violates omega(i) + omega(2g+1-i) = 2g+1");
}

WeylElement WeylElement::identity(int g) {
  std::vector<int> img(2 * g);
  std::iota(img.begin(), img.end(), 1);
  return WeylElement(g, std::move(img));
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < 2 * g_; ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

WeylElement generator(int g, int i) {
  if (i < 1 || i > g)
    throw std::invalid_argument("generator index out of range 1..g");
  std::vector<int> img(2 * g);
  std::iota(img.begin(), img.end(), 1);
  const int n = 2 * g;
  std::swap(img[i - 1], img[i]);        // (i, i+1)
  if (i < g) std::swap(img[n - i - 1], img[n - i]);  // (2g-i, 2g+1-i)
  return WeylElement(g, std::move(img));
}

namespace {

// apply u first, then v
std::vector<int> compose_then(const std::vector<int>& u, const std::vector<int>& v) {
  std::vector<int> r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = v[u[i] - 1];
  return r;
}

// Right multiplication by s_i in the leftmost-first convention: postcompose,
// i.e. swap the *values* i, i+1 (and 2g-i, 2g+1-i) wherever they occur.
void apply_gen_in_place(std::vector<int>& img, std::vector<int>& pos, int g, int i) {
  const int n = 2 * g;
  auto swap_values = [&](int a, int b) {
    std::swap(img[pos[a] - 1], img[pos[b] - 1]);
    std::swap(pos[a], pos[b]);
  };
  swap_values(i, i + 1);
  if (i < g) swap_values(n - i, n + 1 - i);
}

std::vector<int> inverse_positions(const std::vector<int>& img) {
  std::vector<int> pos(img.size() + 1);
  for (std::size_t x = 0; x < img.size(); ++x) pos[img[x]] = static_cast<int>(x) + 1;
  return pos;
}

}  // namespace

WeylElement evaluate_word(const WeylWord& w) {
  if (w.g < 1) throw std::invalid_argument("genus must be >= 1");
  std::vector<int> img(2 * w.g);
  std::iota(img.begin(), img.end(), 1);
  for (int letter : w.letters) {
    if (letter < 1 || letter > w.g)
      throw std::invalid_argument("word letter out of range 1..g");
    img = compose_then(img, generator(w.g, letter).one_line());
  }
  return WeylElement(w.g, std::move(img));
}

WeylElement from_young(const YoungType& y) {
  FinalType t = young_to_final(y);
  const int g = y.g;
  std::vector<int> img(2 * g, 0);
  int jumps = 0, stays = 0, prev = 0;
  for (int i = 1; i <= g; ++i) {
    if (t.nu[i - 1] == prev + 1) {
      ++jumps;
      img[i - 1] = g + jumps;
    } else {
      ++stays;
      img[i - 1] = stays;
    }
    prev = t.nu[i - 1];
  }
  for (int i = 1; i <= g; ++i) img[2 * g - i] = 2 * g + 1 - img[i - 1];
  return WeylElement(g, std::move(img));
}

// Multiplying w by s_i on the right changes the S_2g inversion number by
// exactly +-2 (i < g) or +-1 (i = g), decreasing iff value i+1 occurs before
// value i; the paired swap always moves the same way.  A decrease here is
// exactly a length decrease in W_g, so greedy stripping of the
// smallest-index descent yields a reduced word.
WeylWord reduced_word(const WeylElement& w) {
  const int g = w.g();
  std::vector<int> img = w.one_line();
  std::vector<int> pos = inverse_positions(img);
  std::vector<int> letters;
  for (;;) {
    int descent = 0;
    for (int i = 1; i <= g; ++i) {
      if (pos[i] > pos[i + 1]) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;  // no descent: img is the identity
    apply_gen_in_place(img, pos, g, descent);
    letters.push_back(descent);
  }
  std::reverse(letters.begin(), letters.end());
  return WeylWord{g, std::move(letters)};
}

int length(const WeylElement& w) {
  return static_cast<int>(reduced_word(w).letters.size());
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  if (u.g() != w.g()) throw std::invalid_argument("Bruhat comparison across different g");
  const int n = u.degree();
  // rank(v, i, j) = #{ x <= i : v(x) >= j }, computed incrementally in i.
  std::vector<int> ru(n + 2, 0), rw(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = u(i); j >= 1; --j) ++ru[j];
    for (int j = w(i); j >= 1; --j) ++rw[j];
    for (int j = 1; j <= n; ++j)
      if (ru[j] > rw[j]) return false;
  }
  return true;
}

std::string render_word(const WeylWord& w) {
  if (w.letters.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << '*';
    os << 's' << w.letters[i];
  }
  return os.str();
}

std::string render_one_line(const WeylElement& w) {
  std::ostringstream os;
  os << '<';
  for (int i = 1; i <= w.degree(); ++i) {
    if (i > 1) os << ',';
    os << w(i);
  }
  os << '>';
  return os.str();
}

}  // namespace eo
