#include "eostrata/strata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eo {

namespace {

void check_genus(int g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1, got " + std::to_string(g));
}

}  // namespace

bool validate_final_type(int g, const std::vector<int>& nu) {
  check_genus(g);
  if (static_cast<int>(nu.size()) != g)
    throw std::invalid_argument("final type has length " + std::to_string(nu.size()) +
                                ", expected g = " + std::to_string(g));
  int prev = 0;  // nu_0 = 0
  for (int i = 0; i < g; ++i) {
    if (nu[i] < prev || nu[i] > prev + 1) return false;
    prev = nu[i];
  }
  return true;
}

FinalType make_final_type(int g, std::vector<int> nu) {
  if (!validate_final_type(g, nu))
    throw std::invalid_argument("not a final type for g = " + std::to_string(g));
  return FinalType{g, std::move(nu)};
}

YoungType make_young_type(int g, std::vector<int> mu) {
  check_genus(g);
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (mu[j] < 1 || mu[j] > g)
      throw std::invalid_argument("Young type part out of range 1.." + std::to_string(g));
    if (j > 0 && mu[j] >= mu[j - 1])
      throw std::invalid_argument("Young type must be strictly decreasing");
  }
  return YoungType{g, std::move(mu)};
}

std::vector<FinalType> enumerate_final_types(int g) {
  check_genus(g);
  // Each type is a jump/stay pattern: nu_i is nu_{i-1} or nu_{i-1}+1.  With
  // position 1 mapped to the most significant bit, increasing bit patterns
  // (stay = 0 < jump = 1) enumerate nu in lexicographic order.
  std::vector<FinalType> out;
  out.reserve(std::size_t{1} << g);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
    std::vector<int> nu(g);
    int val = 0;
    for (int i = 0; i < g; ++i) {
      if (mask >> (g - 1 - i) & 1) ++val;
      nu[i] = val;
    }
    out.push_back(FinalType{g, std::move(nu)});
  }
  return out;
}

YoungType final_to_young(const FinalType& t) {
  if (!validate_final_type(t.g, t.nu))
    throw std::invalid_argument("not a final type for g = " + std::to_string(t.g));
  std::vector<int> mu;
  for (int j = 1;; ++j) {
    int count = 0;
    for (int i = 1; i <= t.g; ++i)
      if (j <= i - t.nu[i - 1]) ++count;
    if (count == 0) break;
    mu.push_back(count);
  }
  return YoungType{t.g, std::move(mu)};
}

FinalType young_to_final(const YoungType& y) {
  YoungType checked = make_young_type(y.g, y.mu);
  // d_i = #{ j : mu_j >= g+1-i } recovers the non-decreasing sequence
  // d_i = i - nu_i, whose conjugate is mu.
  std::vector<int> nu(y.g);
  for (int i = 1; i <= y.g; ++i) {
    int d = 0;
    for (int part : checked.mu)
      if (part >= y.g + 1 - i) ++d;
    nu[i - 1] = i - d;
  }
  return make_final_type(y.g, std::move(nu));
}

int p_rank_of_final(const FinalType& t) {
  int f = 0;
  for (int i = 1; i <= t.g; ++i)
    if (t.nu[i - 1] == i) f = i;
  return f;
}

int a_number_of_final(const FinalType& t) { return t.g - t.nu[t.g - 1]; }

std::pair<int, int> invariants_of_young(const YoungType& y) {
  int mu1 = y.mu.empty() ? 0 : y.mu.front();
  return {y.g - mu1, static_cast<int>(y.mu.size())};
}

int stratum_dim(const FinalType& t) {
  return std::accumulate(t.nu.begin(), t.nu.end(), 0);
}

int stratum_codim(const YoungType& y) {
  return std::accumulate(y.mu.begin(), y.mu.end(), 0);
}

StratumRecord stratum_record(const FinalType& t) {
  StratumRecord r;
  r.final_type = make_final_type(t.g, t.nu);
  r.young_type = final_to_young(t);
  r.f = p_rank_of_final(t);
  r.a = a_number_of_final(t);
  r.dim = stratum_dim(t);
  r.codim = stratum_codim(r.young_type);
  return r;
}

namespace {

std::string join_ints(const std::vector<int>& v, char open, char close) {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << close;
  return os.str();
}

}  // namespace

std::string render_nu(const FinalType& t) { return join_ints(t.nu, '[', ']'); }

std::string render_mu(const YoungType& y) { return join_ints(y.mu, '{', '}'); }

}  // namespace eo
