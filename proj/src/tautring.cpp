#include "eostrata/tautring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace eo {

PPoly::PPoly(long long constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

PPoly PPoly::monomial(long long coeff, int degree) {
  PPoly r;
  if (coeff != 0) {
    r.coeffs_.assign(degree + 1, 0);
    r.coeffs_[degree] = coeff;
  }
  return r;
}

PPoly PPoly::p() { return monomial(1, 1); }

long long PPoly::coeff(int k) const {
  return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : 0;
}

void PPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PPoly PPoly::operator-() const {
  PPoly r = *this;
  for (long long& c : r.coeffs_) c = -c;
  return r;
}

PPoly& PPoly::operator+=(const PPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

PPoly& PPoly::operator-=(const PPoly& o) { return *this += -o; }

PPoly& PPoly::operator*=(const PPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<long long> prod(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(prod);
  normalize();
  return *this;
}

long long PPoly::eval(long long p) const {
  __int128 acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * p + coeffs_[k];
    if (acc > __int128(INT64_MAX) || acc < __int128(INT64_MIN))
      throw std::overflow_error("polynomial value does not fit in 64 bits");
  }
  return static_cast<long long>(acc);
}

std::string PPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    long long c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? '-' : '+');
    }
    long long mag = c < 0 ? -c : c;
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << 'p';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

LambdaPoly::LambdaPoly(int g) : g_(g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
}

LambdaPoly LambdaPoly::generator(int g, int k, PPoly coeff) {
  if (k < 0 || k > g) throw std::invalid_argument("lambda index out of range 0..g");
  std::vector<int> e(g, 0);
  if (k > 0) e[k - 1] = 1;
  return term(g, std::move(coeff), std::move(e));
}

LambdaPoly LambdaPoly::term(int g, PPoly coeff, std::vector<int> exponents) {
  LambdaPoly r(g);
  if (static_cast<int>(exponents.size()) != g)
    throw std::invalid_argument("exponent vector must have length g");
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("negative lambda exponent");
  if (!coeff.is_zero()) r.terms_.emplace(std::move(exponents), std::move(coeff));
  return r;
}

void LambdaPoly::prune(const std::vector<int>& key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && it->second.is_zero()) terms_.erase(it);
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly r(g_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  if (o.g_ != g_) throw std::invalid_argument("lambda polynomials over different g");
  for (const auto& [e, c] : o.terms_) {
    terms_[e] += c;
    prune(e);
  }
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) { return *this += -o; }

LambdaPoly& LambdaPoly::operator*=(const LambdaPoly& o) {
  if (o.g_ != g_) throw std::invalid_argument("lambda polynomials over different g");
  std::map<std::vector<int>, PPoly> prod;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(g_);
      for (int i = 0; i < g_; ++i) e[i] = e1[i] + e2[i];
      prod[std::move(e)] += c1 * c2;
    }
  }
  terms_.clear();
  for (auto& [e, c] : prod)
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
  return *this;
}

LambdaPoly& LambdaPoly::operator*=(const PPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

int LambdaPoly::monomial_degree(const std::vector<int>& exponents) {
  int d = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    d += static_cast<int>(i + 1) * exponents[i];
  return d;
}

std::map<int, LambdaPoly> LambdaPoly::graded_components() const {
  std::map<int, LambdaPoly> out;
  for (const auto& [e, c] : terms_) {
    auto [it, inserted] = out.try_emplace(monomial_degree(e), g_);
    it->second += term(g_, c, e);
  }
  return out;
}

LambdaPoly LambdaPoly::eval_p(long long p) const {
  LambdaPoly r(g_);
  for (const auto& [e, c] : terms_) r += term(g_, PPoly(c.eval(p)), e);
  return r;
}

LambdaPoly prank_class(int g, int f) {
  if (g < 1 || f < 0 || f > g)
    throw std::invalid_argument("prank_class needs 0 <= f <= g");
  if (f == g) return LambdaPoly::unit(g);
  PPoly coeff(1);
  for (int i = 1; i <= g - f; ++i) coeff *= PPoly::monomial(1, i) - PPoly(1);
  return LambdaPoly::generator(g, g - f, std::move(coeff));
}

std::vector<LambdaPoly> taut_relations(int g) {
  LambdaPoly chern = LambdaPoly::unit(g), dual = LambdaPoly::unit(g);
  for (int i = 1; i <= g; ++i) {
    chern += LambdaPoly::generator(g, i);
    dual += LambdaPoly::generator(g, i, PPoly(i % 2 ? -1 : 1));
  }
  LambdaPoly product = chern * dual - LambdaPoly::unit(g);
  std::vector<LambdaPoly> out;
  for (auto& [deg, comp] : product.graded_components()) out.push_back(std::move(comp));
  return out;
}

namespace {

bool is_plain_integer(const PPoly& c) { return c.degree() <= 0; }

std::string render_monomial(const std::vector<int>& e, RenderStyle style) {
  const char* l = style == RenderStyle::machine ? "l" : "\xce\xbb";  // λ
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first && style == RenderStyle::machine) os << '*';
    os << l << i + 1;
    if (e[i] > 1) os << '^' << e[i];
    first = false;
  }
  if (first) os << l << 0;
  return os.str();
}

}  // namespace

std::string render_lambda_poly(const LambdaPoly& poly, RenderStyle style) {
  if (poly.is_zero()) return "0";
  // Order terms by graded degree, then by exponent vector.
  std::vector<std::pair<std::vector<int>, PPoly>> terms(poly.terms().begin(), poly.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = LambdaPoly::monomial_degree(a.first), db = LambdaPoly::monomial_degree(b.first);
    return da != db ? da < db : a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    bool negate = c.leading_coeff() < 0;
    PPoly shown = negate ? -c : c;
    if (first) {
      if (negate) os << '-';
      first = false;
    } else {
      os << (negate ? " - " : " + ");
    }
    const bool unit_monomial =
        std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    std::string mono = render_monomial(e, style);
    const char* sep = style == RenderStyle::machine ? "*" : "";
    if (shown == PPoly(1)) {
      os << mono;
    } else if (is_plain_integer(shown)) {
      os << shown.to_string();
      if (!unit_monomial) os << sep << mono;
    } else {
      os << '(' << shown.to_string() << ')' << sep << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
  const std::string& text;
  int g;
  std::size_t pos = 0;
  bool allow_lambda = true;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  bool at_end() {
    skip_ws();
    return pos == text.size();
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    if (pos - start > 18) fail("integer literal too large");
    return std::stoll(text.substr(start, pos - start));
  }

  int exponent_suffix() {
    if (!consume('^')) return 1;
    long long e = integer();
    if (e < 1 || e > 64) fail("exponent out of range");
    return static_cast<int>(e);
  }

  // A sum of integer/p-power terms inside parentheses.
  PPoly ppoly_sum() {
    PPoly acc;
    bool negate = consume('-');
    if (!negate) consume('+');
    for (;;) {
      PPoly t = ppoly_term();
      acc += negate ? -t : t;
      skip_ws();
      if (at_end() || peek(')')) break;
      if (consume('-')) negate = true;
      else if (consume('+')) negate = false;
      else fail("expected '+', '-' or ')'");
    }
    return acc;
  }

  PPoly ppoly_term() {
    skip_ws();
    long long c = 1;
    bool saw_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      c = integer();
      saw_coeff = true;
      consume('*');
    }
    skip_ws();
    if (pos < text.size() && text[pos] == 'p') {
      ++pos;
      return PPoly::monomial(c, exponent_suffix());
    }
    if (!saw_coeff) fail("expected an integer or 'p'");
    return PPoly(c);
  }

  // One multiplicative factor of a lambda-term.
  LambdaPoly factor() {
    skip_ws();
    if (pos >= text.size()) fail("expected a factor");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      PPoly inner = ppoly_sum();
      if (!consume(')')) fail("expected ')'");
      int e = exponent_suffix();
      PPoly power(1);
      for (int k = 0; k < e; ++k) power *= inner;
      return LambdaPoly::unit(g) * power;
    }
    if (c == 'l') {
      if (!allow_lambda) fail("lambda factor in a p-polynomial");
      ++pos;
      long long k = integer();
      if (k > g) fail("lambda index exceeds g");
      int e = exponent_suffix();
      std::vector<int> exps(g, 0);
      if (k > 0) exps[k - 1] = e;
      return LambdaPoly::term(g, PPoly(1), std::move(exps));
    }
    if (c == 'p') {
      ++pos;
      return LambdaPoly::unit(g) * PPoly::monomial(1, exponent_suffix());
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return LambdaPoly::unit(g) * PPoly(integer());
    fail("expected '(', 'p', 'l' or an integer");
  }

  bool factor_follows() {
    skip_ws();
    if (pos >= text.size()) return false;
    char c = text[pos];
    return c == '(' || c == 'l' || c == 'p' || c == '*' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  LambdaPoly term() {
    LambdaPoly acc = factor();
    while (factor_follows()) {
      consume('*');
      acc *= factor();
    }
    return acc;
  }

  LambdaPoly parse() {
    LambdaPoly acc(g);
    bool negate = consume('-');
    if (!negate) consume('+');
    for (;;) {
      LambdaPoly t = term();
      acc += negate ? -t : t;
      if (at_end()) break;
      if (consume('-')) negate = true;
      else if (consume('+')) negate = false;
      else fail("expected '+' or '-'");
    }
    return acc;
  }
};

}  // namespace

LambdaPoly parse_lambda_poly(int g, const std::string& text) {
  Parser p{text, g};
  LambdaPoly result = p.parse();
  return result;
}

PPoly parse_ppoly(const std::string& text) {
  // Same factor syntax as the lambda parser, minus the lambda classes.
  Parser p{text, 1};
  p.allow_lambda = false;
  LambdaPoly result = p.parse();
  if (result.is_zero()) return PPoly();
  return result.terms().begin()->second;
}

}  // namespace eo
