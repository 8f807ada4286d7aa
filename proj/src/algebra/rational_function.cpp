#include "linkhom/rational_function.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace linkhom {

namespace {
const std::vector<std::string> kNames = {"v", "h", "a"};

Poly monomial_lcm_cofactor(Mono lcm, Mono m) { return Poly::term(mono_div(lcm, m), 1); }

Mono mono_lcm(Mono a, Mono b) {
  Mono r = 0;
  for (int i = 0; i < kMaxVars; ++i) r |= mono_var(i, std::max(mono_exp(a, i), mono_exp(b, i)));
  return r;
}
}  // namespace

MultiRational::MultiRational(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("MultiRational: zero denominator");
  normalize();
}

void MultiRational::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_monomial()) {
    Mono common = mono_gcd(den_.leading().first, num_.min_exponents());
    Rational c = den_.leading().second;
    if (common != 0) {
      num_ = num_.div_mono(common);
      den_ = den_.div_mono(common);
    }
    if (c != 1) {
      num_ *= Rational(1 / c);
      den_ = Poly::term(den_.leading().first, 1);
    }
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  Rational c = den_.leading().second;
  if (c != 1) {
    Rational inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
}

MultiRational MultiRational::from_laurent(const LaurentPoly& p, int var) {
  if (p.is_zero()) return MultiRational();
  int lo = std::min(0, p.min_degree());
  std::vector<Poly::Term> terms;
  for (const auto& [e, c] : p.terms()) terms.emplace_back(mono_var(var, e - lo), c);
  MultiRational r;
  r.num_ = Poly::from_terms(std::move(terms));
  r.den_ = Poly::var(var, -lo);
  r.normalize();
  return r;
}

MultiRational MultiRational::monomial(const Rational& c, int ev, int eh, int ea) {
  std::array<int, 3> e = {ev, eh, ea};
  Mono nm = 0, dm = 0;
  for (int i = 0; i < 3; ++i) {
    if (e[i] >= 0)
      nm |= mono_var(i, e[i]);
    else
      dm |= mono_var(i, -e[i]);
  }
  MultiRational r;
  r.num_ = Poly::term(nm, c);
  r.den_ = Poly::term(dm, 1);
  return r;
}

MultiRational MultiRational::inverse() const {
  if (num_.is_zero()) throw std::domain_error("MultiRational: inverse of zero");
  MultiRational r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

MultiRational& MultiRational::operator+=(const MultiRational& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  if (den_.is_monomial() && o.den_.is_monomial()) {
    Mono l = mono_lcm(den_.leading().first, o.den_.leading().first);
    num_ = num_ * monomial_lcm_cofactor(l, den_.leading().first) +
           o.num_ * monomial_lcm_cofactor(l, o.den_.leading().first);
    den_ = Poly::term(l, 1);
    normalize();
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly a_co = exact_div(o.den_, g);
  Poly b_co = exact_div(den_, g);
  num_ = num_ * a_co + o.num_ * b_co;
  den_ = den_ * a_co;
  normalize();
  return *this;
}

MultiRational operator-(const MultiRational& a) {
  MultiRational r = a;
  r.num_ = -r.num_;
  return r;
}

MultiRational& MultiRational::operator-=(const MultiRational& o) { return *this += -o; }

MultiRational& MultiRational::operator*=(const MultiRational& o) {
  if (num_.is_zero() || o.num_.is_zero()) return *this = MultiRational();
  if (den_.is_monomial() && o.den_.is_monomial()) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  // Cancel crosswise first to keep the operands small.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n = exact_div(num_, g1) * exact_div(o.num_, g2);
  Poly d = exact_div(den_, g2) * exact_div(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  Rational c = den_.leading().second;
  if (c != 1) {
    Rational inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

MultiRational& MultiRational::operator/=(const MultiRational& o) { return *this *= o.inverse(); }

MultiRational pow(const MultiRational& base, int e) {
  if (e < 0) return pow(base.inverse(), -e);
  MultiRational r(1);
  MultiRational b = base;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

namespace {
MultiRational substitute_poly(const Poly& p, int var, const MultiRational& value) {
  MultiRational r;
  const int dmax = p.degree_in(var);
  MultiRational power(1);
  for (int d = 0; d <= dmax; ++d) {
    Poly c = p.coeff_in(var, d);
    if (!c.is_zero()) r += MultiRational(c) * power;
    if (d < dmax) power *= value;
  }
  return r;
}
}  // namespace

MultiRational MultiRational::substitute(int var, const MultiRational& value) const {
  return substitute_poly(num_, var, value) / substitute_poly(den_, var, value);
}

bool MultiRational::is_laurent_in_v() const {
  if (!den_.is_monomial()) return false;
  if (den_.leading().first != (den_.leading().first & mono_var(kVarV, kMaxExponent))) return false;
  for (const auto& t : num_.terms())
    if (t.first != (t.first & mono_var(kVarV, kMaxExponent))) return false;
  return true;
}

LaurentPoly MultiRational::to_laurent() const {
  if (!is_laurent_in_v()) throw std::domain_error("not a Laurent polynomial in v: " + to_string());
  int shift = mono_exp(den_.leading().first, kVarV);
  LaurentPoly r;
  for (const auto& t : num_.terms()) r.add_term(mono_exp(t.first, kVarV) - shift, t.second);
  return r;
}

std::string MultiRational::to_string() const {
  if (num_.is_zero()) return "0";
  if (!den_.is_monomial()) return "(" + num_.to_string(kNames) + ")/(" + den_.to_string(kNames) + ")";
  // Laurent rendering: terms in increasing (v, h, a) exponent.
  const Mono dm = den_.leading().first;
  std::vector<std::pair<std::array<int, 3>, Rational>> terms;
  for (const auto& t : num_.terms()) {
    std::array<int, 3> e{};
    for (int i = 0; i < 3; ++i) e[i] = mono_exp(t.first, i) - mono_exp(dm, i);
    terms.emplace_back(e, t.second);
  }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      any = true;
      mono << kNames[i];
      if (e[i] != 1) mono << "^" << e[i];
    }
    if (!any) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << mono.str();
    }
  }
  return out.str();
}

}  // namespace linkhom
