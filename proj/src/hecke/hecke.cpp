#include "linkhom/hecke.hpp"

#include <numeric>
#include <stdexcept>

namespace linkhom {

namespace {
const LaurentPoly& vinv_minus_v() {
  static const LaurentPoly c = LaurentPoly::monomial(-1) - LaurentPoly::monomial(1);
  return c;
}
}  // namespace

Perm identity_perm(int n) {
  Perm w(n);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

int perm_length(const Perm& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

std::vector<int> reduced_word(const Perm& w0) {
  Perm w = w0;
  std::vector<int> rev;
  bool found = true;
  while (found) {
    found = false;
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        rev.push_back(static_cast<int>(i) + 1);
        found = true;
        break;
      }
  }
  return {rev.rbegin(), rev.rend()};
}

HeckeElement::HeckeElement(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("HeckeElement: negative strand count");
}

HeckeElement HeckeElement::one(int n) { return basis(identity_perm(n)); }

HeckeElement HeckeElement::basis(const Perm& w, const LaurentPoly& c) {
  HeckeElement x(static_cast<int>(w.size()));
  x.add(w, c);
  return x;
}

HeckeElement HeckeElement::generator(int n, int i) { return mul_generator(one(n), i, 1); }

LaurentPoly HeckeElement::coeff(const Perm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const Perm& w, const LaurentPoly& c) {
  if (static_cast<int>(w.size()) != n_) throw std::invalid_argument("HeckeElement: permutation size");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("HeckeElement: strand mismatch");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("HeckeElement: strand mismatch");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& x) {
  HeckeElement r(x.n_);
  if (c.is_zero()) return r;
  for (const auto& [w, d] : x.terms_) r.terms_.emplace(w, c * d);
  return r;
}

HeckeElement mul_generator(const HeckeElement& x, int i, int sign) {
  if (i < 1 || i >= x.n()) throw std::out_of_range("mul_generator: index out of range");
  HeckeElement r(x.n());
  for (const auto& [w, c] : x.terms()) {
    Perm ws = w;
    std::swap(ws[i - 1], ws[i]);
    r.add(ws, c);
    if (w[i - 1] > w[i]) r.add(w, c * vinv_minus_v());
    // H_i^{-1} = H_i + (v - v^{-1})
    if (sign < 0) r.add(w, -(c * vinv_minus_v()));
  }
  return r;
}

HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("HeckeElement: strand mismatch");
  HeckeElement r(x.n_);
  for (const auto& [w, c] : y.terms_) {
    HeckeElement t = x;
    for (int i : reduced_word(w)) t = mul_generator(t, i, 1);
    r += c * t;
  }
  return r;
}

HeckeElement braid_to_hecke(const BraidWord& b) {
  validate(b);
  HeckeElement x = HeckeElement::one(b.strands);
  for (const auto& l : b.letters) x = mul_generator(x, l.index, l.sign);
  return x;
}

namespace {

void add_scaled(SigmaPoly& acc, const SigmaPoly& p, const LaurentPoly& c, int sigma_shift) {
  for (const auto& [k, d] : p) {
    LaurentPoly& slot = acc[k + sigma_shift];
    slot += c * d;
    if (slot.is_zero()) acc.erase(k + sigma_shift);
  }
}

// Trace of a single basis element, memoized per permutation.
const SigmaPoly& trace_basis(const Perm& w) {
  thread_local std::map<Perm, SigmaPoly> memo;
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  const int n = static_cast<int>(w.size());
  SigmaPoly result;
  if (n == 0) {
    result[0] = LaurentPoly(1);
  } else if (w[n - 1] == n - 1) {
    Perm u(w.begin(), w.end() - 1);
    add_scaled(result, trace_basis(u), 1, 1);
  } else {
    // w = u s_{n-1} s_{n-2} ... s_j where j is the position of n.
    int j = 0;
    while (w[j] != n - 1) ++j;
    Perm u = w;
    for (int p = j; p < n - 1; ++p) std::swap(u[p], u[p + 1]);
    HeckeElement y = HeckeElement::basis(Perm(u.begin(), u.end() - 1));
    for (int g = n - 2; g >= j + 1; --g) y = mul_generator(y, g, 1);
    for (const auto& [x, c] : y.terms()) add_scaled(result, trace_basis(x), c.shifted(-1), 0);
  }
  return memo.emplace(w, std::move(result)).first->second;
}

}  // namespace

SigmaPoly trace_sigma_poly(const HeckeElement& x) {
  SigmaPoly acc;
  for (const auto& [w, c] : x.terms()) add_scaled(acc, trace_basis(w), c, 0);
  return acc;
}

MultiRational evaluate_sigma_poly(const SigmaPoly& p, const MultiRational& sigma) {
  MultiRational r;
  for (const auto& [k, c] : p) r += MultiRational::from_laurent(c) * pow(sigma, k);
  return r;
}

MultiRational sigma_value() {
  const MultiRational v = MultiRational::var(kVarV), h = MultiRational::var(kVarH);
  return (MultiRational(1) + h * v * v) / (MultiRational(1) - v * v);
}

MultiRational ocneanu_trace(const HeckeElement& x) { return evaluate_sigma_poly(trace_sigma_poly(x), sigma_value()); }

bool trace_symmetry_check(const HeckeElement& x, const HeckeElement& y) {
  return trace_sigma_poly(x * y) == trace_sigma_poly(y * x);
}

MultiRational homfly(const BraidWord& b) {
  const MultiRational v = MultiRational::var(kVarV), a = MultiRational::var(kVarA);
  const MultiRational sigma_a = (MultiRational(1) - a * a) / (MultiRational(1) - v * v);
  const int n = b.strands;
  return MultiRational::monomial(1, n, 0, exponent_sum(b) - n) *
         evaluate_sigma_poly(trace_sigma_poly(braid_to_hecke(b)), sigma_a);
}

LaurentPoly homfly_at(const BraidWord& b, int k) {
  if (k < 1) throw std::invalid_argument("homfly_at: k must be positive");
  LaurentPoly sigma_k;  // (1 - v^{2k}) / (1 - v^2)
  for (int i = 0; i < k; ++i) sigma_k.add_term(2 * i, 1);
  LaurentPoly r;
  for (const auto& [p, c] : trace_sigma_poly(braid_to_hecke(b))) r += c * pow(sigma_k, static_cast<unsigned>(p));
  const int n = b.strands;
  return r.shifted(n + k * (exponent_sum(b) - n));
}

LaurentPoly standard_functional(const HeckeElement& x) {
  LaurentPoly r;
  for (const auto& [w, c] : x.terms()) r += c.shifted(-perm_length(w));
  return r;
}

}  // namespace linkhom
