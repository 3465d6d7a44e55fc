#pragma once

// Cycle-class bookkeeping for the tautological ring of A_g: integer
// polynomials in p (PPoly) as coefficients on monomials in the Chern
// classes lambda_1, ..., lambda_g (LambdaPoly).  The ring here is the free
// commutative one, graded by deg(lambda_i) = i; the tautological relations
// are *emitted* by taut_relations() as the graded components of
//
//     (1 + lambda_1 + ... + lambda_g)(1 - lambda_1 + ... +- lambda_g) - 1,
//
// not imposed on the representation.
//
// Machine rendering uses "l1*l3" for monomials ("l0" for the unit class),
// human rendering "λ1λ3"; coefficient strings such as
// "(p-1)^2*(p^2-p+1)*l1*l3" parse back via parse_lambda_poly.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace eo {

// Polynomial in p with integer coefficients; coeffs[k] is the coefficient
// of p^k, with no trailing zeros (the zero polynomial has empty coeffs).
class PPoly {
 public:
  PPoly() = default;
  explicit PPoly(long long constant);
  static PPoly monomial(long long coeff, int degree);
  static PPoly p();  // the variable itself

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
  long long coeff(int k) const;
  long long leading_coeff() const { return is_zero() ? 0 : coeffs_.back(); }
  const std::vector<long long>& coeffs() const { return coeffs_; }

  PPoly operator-() const;
  PPoly& operator+=(const PPoly& o);
  PPoly& operator-=(const PPoly& o);
  PPoly& operator*=(const PPoly& o);
  friend PPoly operator+(PPoly a, const PPoly& b) { return a += b; }
  friend PPoly operator-(PPoly a, const PPoly& b) { return a -= b; }
  friend PPoly operator*(PPoly a, const PPoly& b) { return a *= b; }
  friend bool operator==(const PPoly&, const PPoly&) = default;

  // Throws std::overflow_error if the value does not fit in long long.
  long long eval(long long p) const;

  // "p^2-p+1", "-2*p^3+4", "0"; highest power first.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<long long> coeffs_;
};

enum class RenderStyle { machine, human };

// Sum of PPoly-multiples of monomials lambda_1^{e_1} ... lambda_g^{e_g};
// the zero exponent vector is the unit class lambda_0.
class LambdaPoly {
 public:
  explicit LambdaPoly(int g);
  static LambdaPoly unit(int g) { return term(g, PPoly(1), std::vector<int>(g, 0)); }
  static LambdaPoly zero(int g) { return LambdaPoly(g); }
  // coeff * lambda_k (k = 0 gives coeff * unit).
  static LambdaPoly generator(int g, int k, PPoly coeff = PPoly(1));
  static LambdaPoly term(int g, PPoly coeff, std::vector<int> exponents);

  int g() const { return g_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, PPoly>& terms() const { return terms_; }

  LambdaPoly operator-() const;
  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  LambdaPoly& operator*=(const LambdaPoly& o);
  LambdaPoly& operator*=(const PPoly& c);
  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(LambdaPoly a, const LambdaPoly& b) { return a *= b; }
  friend LambdaPoly operator*(LambdaPoly a, const PPoly& c) { return a *= c; }
  friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

  // deg(lambda_i) = i; the monomials present must all share one degree for
  // graded_degree (throws otherwise); components are sorted by degree.
  static int monomial_degree(const std::vector<int>& exponents);
  std::map<int, LambdaPoly> graded_components() const;

  // Substitute an integer for p.  Overflow throws std::overflow_error.
  LambdaPoly eval_p(long long p) const;

 private:
  void prune(const std::vector<int>& key);
  int g_;
  std::map<std::vector<int>, PPoly> terms_;
};

// Closure class of the p-rank <= f locus:
//     prank_class(g, f) = (p-1)(p^2-1)...(p^{g-f}-1) * lambda_{g-f},
// the unit class when f = g.  Requires 0 <= f <= g.
LambdaPoly prank_class(int g, int f);

// Nonzero graded components, ascending degree.  For g >= 2 the degree-2
// component is 2*lambda_2 - lambda_1^2.
std::vector<LambdaPoly> taut_relations(int g);

// Deterministic rendering; terms ordered by (graded degree, exponents).
std::string render_lambda_poly(const LambdaPoly& poly, RenderStyle style);

// Parses the machine syntax: terms joined by +/-, factors joined by '*'
// (or juxtaposition): integers, p powers, parenthesized p-polynomials with
// optional ^k, and lambda factors l0..lg with optional ^k.  Throws
// std::invalid_argument with the offending position on bad input.
LambdaPoly parse_lambda_poly(int g, const std::string& text);
PPoly parse_ppoly(const std::string& text);

}  // namespace eo
