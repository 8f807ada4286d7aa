#include "linkhom/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace linkhom {

namespace {
constexpr Mono high_bits() {
  Mono m = 0;
  for (int i = 0; i < kMaxVars; ++i) m |= Mono{1} << (kFieldBits * i + kFieldBits - 1);
  return m;
}
constexpr Mono kHighBits = high_bits();
constexpr int shift_of(int var) { return kFieldBits * (kMaxVars - 1 - var); }
}  // namespace

int mono_exp(Mono m, int var) { return static_cast<int>((m >> shift_of(var)) & static_cast<Mono>(kMaxExponent)); }

Mono mono_var(int var, int exponent) {
  if (var < 0 || var >= kMaxVars) throw std::out_of_range("variable index");
  if (exponent < 0 || exponent > kMaxExponent) throw std::overflow_error("monomial exponent");
  return static_cast<Mono>(exponent) << shift_of(var);
}

Mono mono_mul(Mono a, Mono b) {
  Mono s = a + b;
  if (s & kHighBits) throw std::overflow_error("monomial exponent overflow");
  return s;
}

bool mono_divides(Mono a, Mono b) { return (((b | kHighBits) - a) & kHighBits) == kHighBits; }

Mono mono_div(Mono b, Mono a) { return b - a; }

Mono mono_gcd(Mono a, Mono b) {
  Mono r = 0;
  for (int i = 0; i < kMaxVars; ++i) r |= mono_var(i, std::min(mono_exp(a, i), mono_exp(b, i)));
  return r;
}

int mono_degree(Mono m) {
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) d += mono_exp(m, i);
  return d;
}

Poly::Poly(long c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

Poly Poly::var(int i, int exponent) { return term(mono_var(i, exponent), 1); }

Poly Poly::term(Mono m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().first == 0) return terms_.back().second;
  return 0;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, mono_exp(t.first, var));
  return d;
}

int Poly::min_degree_in(int var) const {
  int d = kMaxExponent;
  for (const auto& t : terms_) d = std::min(d, mono_exp(t.first, var));
  return terms_.empty() ? 0 : d;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, mono_degree(t.first));
  return d;
}

bool Poly::involves(int var) const {
  for (const auto& t : terms_)
    if (mono_exp(t.first, var) != 0) return true;
  return false;
}

Mono Poly::min_exponents() const {
  if (terms_.empty()) return 0;
  Mono g = terms_[0].first;
  for (const auto& t : terms_) g = mono_gcd(g, t.first);
  return g;
}

namespace {
// Merge two sorted term lists with sign.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                                    bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.terms_ = merge_terms(a.terms_, b.terms_, false);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.terms_ = merge_terms(a.terms_, b.terms_, true);
  return r;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Poly();
  if (a.terms_.size() == 1) return b.mul_mono(a.terms_[0].first, a.terms_[0].second);
  if (b.terms_.size() == 1) return a.mul_mono(b.terms_[0].first, b.terms_[0].second);
  std::map<Mono, Rational, std::greater<>> acc;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Mono m = mono_mul(ta.first, tb.first);
      auto [it, inserted] = acc.try_emplace(m, ta.second * tb.second);
      if (!inserted) it->second += ta.second * tb.second;
    }
  Poly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, c);
  return r;
}

Poly Poly::mul_mono(Mono m, const Rational& c) const {
  Poly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(mono_mul(t.first, m), t.second * c);
  return r;
}

Poly Poly::div_mono(Mono m) const {
  Poly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!mono_divides(m, t.first)) throw std::domain_error("div_mono: not divisible");
    r.terms_.emplace_back(mono_div(t.first, m), t.second);
  }
  return r;
}

Poly Poly::coeff_in(int var, int d) const {
  Poly r;
  const Mono strip = mono_var(var, d);
  for (const auto& t : terms_)
    if (mono_exp(t.first, var) == d) r.terms_.emplace_back(t.first - strip, t.second);
  r.normalize();
  return r;
}

Poly Poly::substitute(int var, const Poly& value) const {
  int dmax = degree_in(var);
  std::vector<Poly> powers(dmax + 1);
  powers[0] = Poly(1);
  for (int d = 1; d <= dmax; ++d) powers[d] = powers[d - 1] * value;
  Poly r;
  for (int d = 0; d <= dmax; ++d) {
    Poly c = coeff_in(var, d);
    if (!c.is_zero()) r += c * powers[d];
  }
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1);
  Poly b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (int i = 0; i < kMaxVars; ++i) {
      int e = mono_exp(m, i);
      if (e == 0) continue;
      if (any) mono << "*";
      any = true;
      mono << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i));
      if (e != 1) mono << "^" << e;
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

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (b.is_monomial()) {
    Poly q = a.div_mono(b.leading().first);
    return q * Rational(1 / b.leading().second);
  }
  Poly rem = a;
  std::vector<Poly::Term> q;
  const Mono lb = b.leading().first;
  const Rational lc = b.leading().second;
  while (!rem.is_zero()) {
    const auto& lt = rem.leading();
    if (!mono_divides(lb, lt.first)) throw std::domain_error("exact_div: not divisible");
    Mono m = mono_div(lt.first, lb);
    Rational c = lt.second / lc;
    q.emplace_back(m, c);
    rem -= b.mul_mono(m, c);
  }
  return Poly::from_terms(std::move(q));
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading().second);
}

namespace {

int lowest_var(const Poly& a) {
  int best = kMaxVars;
  for (const auto& t : a.terms())
    for (int i = 0; i < best; ++i)
      if (mono_exp(t.first, i)) {
        best = i;
        break;
      }
  return best;
}

// Gcd of the coefficients of p viewed as a polynomial in `var`.
Poly content_in(const Poly& p, int var) {
  Poly g;
  for (int d = p.degree_in(var); d >= 0; --d) {
    Poly c = p.coeff_in(var, d);
    if (c.is_zero()) continue;
    g = g.is_zero() ? make_monic(c) : gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly lead_coeff_in(const Poly& p, int var) { return p.coeff_in(var, p.degree_in(var)); }

Poly pseudo_rem(Poly r, const Poly& b, int var) {
  const int db = b.degree_in(var);
  const Poly lb = lead_coeff_in(b, var);
  while (!r.is_zero() && r.degree_in(var) >= db) {
    int dr = r.degree_in(var);
    Poly lr = lead_coeff_in(r, var);
    r = lb * r - (lr * b).mul_mono(mono_var(var, dr - db));
  }
  return r;
}

Poly primitive_part(const Poly& p, int var) {
  if (p.is_zero()) return p;
  return make_monic(exact_div(p, content_in(p, var)));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.is_monomial() || b.is_monomial()) {
    // gcd with a monomial is the common monomial factor.
    const Poly& m = a.is_monomial() ? a : b;
    const Poly& o = a.is_monomial() ? b : a;
    return Poly::term(mono_gcd(m.leading().first, o.min_exponents()), 1);
  }
  // A variable present in only one argument can be eliminated by taking content.
  for (int x = 0; x < kMaxVars; ++x) {
    const bool ia = a.involves(x), ib = b.involves(x);
    if (ia && !ib) return gcd(content_in(a, x), b);
    if (ib && !ia) return gcd(a, content_in(b, x));
  }
  const int var = std::min(lowest_var(a), lowest_var(b));
  Poly ca = content_in(a, var), cb = content_in(b, var);
  Poly c = gcd(ca, cb);
  Poly pa = make_monic(exact_div(a, ca));
  Poly pb = make_monic(exact_div(b, cb));
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = pseudo_rem(pa, pb, var);
    pa = std::move(pb);
    pb = primitive_part(r, var);
    if (!pb.is_zero() && pb.degree_in(var) == 0) {
      pa = Poly(1);
      pb = Poly();
    }
  }
  Poly g = primitive_part(pa, var);
  return make_monic(c * g);
}

}  // namespace linkhom
