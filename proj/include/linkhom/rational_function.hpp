#pragma once

#include <string>
#include <vector>

#include "linkhom/laurent.hpp"
#include "linkhom/poly.hpp"

namespace linkhom {

// Variable slots used by rational functions throughout the library.
enum RatVar : int { kVarV = 0, kVarH = 1, kVarA = 2 };

// Quotient of polynomials in v, h, a kept in lowest terms with a monic
// denominator. Negative powers of a variable live in the denominator.
class MultiRational {
 public:
  MultiRational() : den_(1) {}
  MultiRational(long c) : num_(c), den_(1) {}  // NOLINT
  MultiRational(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  MultiRational(const Poly& num) : num_(num), den_(1) {}  // NOLINT
  MultiRational(const Poly& num, const Poly& den);
  // Laurent polynomial in the given variable.
  static MultiRational from_laurent(const LaurentPoly& p, int var = kVarV);
  // c * v^ev * h^eh * a^ea with integer exponents of either sign.
  static MultiRational monomial(const Rational& c, int ev, int eh = 0, int ea = 0);
  static MultiRational var(int var) { return MultiRational(Poly::var(var)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool den_is_monomial() const { return den_.is_monomial(); }

  MultiRational inverse() const;
  MultiRational& operator+=(const MultiRational& o);
  MultiRational& operator-=(const MultiRational& o);
  MultiRational& operator*=(const MultiRational& o);
  MultiRational& operator/=(const MultiRational& o);
  friend MultiRational operator+(MultiRational a, const MultiRational& b) { return a += b; }
  friend MultiRational operator-(MultiRational a, const MultiRational& b) { return a -= b; }
  friend MultiRational operator*(MultiRational a, const MultiRational& b) { return a *= b; }
  friend MultiRational operator/(MultiRational a, const MultiRational& b) { return a /= b; }
  friend MultiRational operator-(const MultiRational& a);
  friend bool operator==(const MultiRational& a, const MultiRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const MultiRational& a, const MultiRational& b) { return !(a == b); }

  // Replace variable `var` by the rational function `value`.
  MultiRational substitute(int var, const MultiRational& value) const;
  // Laurent polynomial in v when the value is one (only v may occur and the
  // denominator must be a power of v).
  bool is_laurent_in_v() const;
  LaurentPoly to_laurent() const;

  std::string to_string() const;

 private:
  Poly num_, den_;
  void normalize();
};

MultiRational pow(const MultiRational& base, int e);

}  // namespace linkhom
