#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace linkhom {

using Rational = mpq_class;

// Sparse Laurent polynomial in one variable with rational coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const Rational& c);  // NOLINT

  static LaurentPoly monomial(int exponent, const Rational& coeff = 1);

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;
  int max_degree() const;
  Rational coeff(int exponent) const;
  void add_term(int exponent, const Rational& coeff);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // v^s * this
  LaurentPoly shifted(int s) const;
  // v -> v^{-1}
  LaurentPoly bar() const;
  // v -> v^k (k may be negative)
  LaurentPoly substitute_power(int k) const;
  // value at v = 1
  Rational at_one() const;

  // Terms in increasing exponent, e.g. "v^-2 + 2 + v^2".
  std::string to_string(const std::string& var = "v") const;

  // Exact quotient a / b, or nullopt when b does not divide a.
  static std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

 private:
  std::map<int, Rational> terms_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned e);

// [a] = v^{a-1} + v^{a-3} + ... + v^{1-a}
LaurentPoly quantum_int(int a);
LaurentPoly quantum_factorial(int a);
LaurentPoly quantum_binomial(int n, int k);

std::string rational_to_string(const Rational& q);

}  // namespace linkhom
