#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "linkhom/laurent.hpp"

namespace linkhom {

// Monomial in up to kMaxVars variables packed into 12-bit fields with
// variable 0 in the most significant field. Comparing the packed words is
// lexicographic order with x_0 > x_1 > ... . Exponents are limited to 2047
// so that the top bit of every field can detect overflow.
using Mono = std::uint64_t;
inline constexpr int kMaxVars = 5;
inline constexpr int kFieldBits = 12;
inline constexpr int kMaxExponent = (1 << (kFieldBits - 1)) - 1;

int mono_exp(Mono m, int var);
Mono mono_var(int var, int exponent = 1);
Mono mono_mul(Mono a, Mono b);
bool mono_divides(Mono a, Mono b);  // a | b
Mono mono_div(Mono b, Mono a);      // b / a, requires a | b
Mono mono_gcd(Mono a, Mono b);
int mono_degree(Mono m);

// Multivariate polynomial over Q with non-negative exponents.
class Poly {
 public:
  using Term = std::pair<Mono, Rational>;

  Poly() = default;
  Poly(long c);  // NOLINT
  Poly(const Rational& c);  // NOLINT
  static Poly var(int i, int exponent = 1);
  static Poly term(Mono m, const Rational& c);
  static Poly from_terms(std::vector<Term> terms);  // combines and sorts

  // Terms sorted by decreasing monomial (lex leading term first).
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }
  Rational constant_term() const;
  int degree_in(int var) const;
  int total_degree() const;
  int min_degree_in(int var) const;
  bool involves(int var) const;
  Mono min_exponents() const;  // gcd of all monomials

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly mul_mono(Mono m, const Rational& c = 1) const;
  Poly div_mono(Mono m) const;  // requires m | every term

  // Coefficient of var^d as a polynomial in the remaining variables.
  Poly coeff_in(int var, int d) const;
  // Replace variable `var` by the polynomial `value`.
  Poly substitute(int var, const Poly& value) const;
  Poly pow(unsigned e) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Term> terms_;
  void normalize();
};

// Exact quotient; throws std::domain_error when the division is not exact.
Poly exact_div(const Poly& a, const Poly& b);
// Greatest common divisor over Q, monic with respect to the lex leading term.
Poly gcd(const Poly& a, const Poly& b);
Poly make_monic(const Poly& p);

}  // namespace linkhom
