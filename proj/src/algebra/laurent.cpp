#include "linkhom/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace linkhom {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::logic_error("max_degree of zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int s) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
  return r;
}

LaurentPoly LaurentPoly::bar() const { return substitute_power(-1); }

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

Rational LaurentPoly::at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << rational_to_string(mag);
      continue;
    }
    if (mag != 1) out << rational_to_string(mag) << "*";
    out << var;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  LaurentPoly rem = a;
  LaurentPoly q;
  const int bmin = b.min_degree();
  const int bspan = b.max_degree() - bmin;
  const Rational& blead = b.terms_.begin()->second;
  // Divide from the lowest degree upwards.
  while (!rem.is_zero()) {
    if (rem.max_degree() - rem.min_degree() < bspan) return std::nullopt;
    int e = rem.min_degree() - bmin;
    Rational c = rem.terms_.begin()->second / blead;
    q.add_term(e, c);
    for (const auto& [eb, cb] : b.terms_) rem.add_term(eb + e, -c * cb);
  }
  return q;
}

LaurentPoly pow(const LaurentPoly& base, unsigned e) {
  LaurentPoly r = 1;
  LaurentPoly b = base;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

LaurentPoly quantum_int(int a) {
  if (a < 0) throw std::invalid_argument("quantum_int: negative argument");
  LaurentPoly r;
  for (int j = 0; j < a; ++j) r.add_term(a - 1 - 2 * j, 1);
  return r;
}

LaurentPoly quantum_factorial(int a) {
  LaurentPoly r = 1;
  for (int j = 2; j <= a; ++j) r *= quantum_int(j);
  return r;
}

LaurentPoly quantum_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("quantum_binomial: need 0 <= k <= n");
  auto q = LaurentPoly::exact_divide(quantum_factorial(n), quantum_factorial(k) * quantum_factorial(n - k));
  if (!q) throw std::logic_error("quantum_binomial: inexact division");
  return *q;
}

}  // namespace linkhom
