#include "linkhom/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace linkhom {

TruncatedVSeries::TruncatedVSeries(const LaurentPoly& p, int cutoff) : TruncatedVSeries(cutoff) {
  for (const auto& [e, c] : p.terms()) add_to(e, c);
}

Rational TruncatedVSeries::coeff(int d) const {
  if (d > cutoff_) throw std::out_of_range("coefficient beyond series cutoff");
  if (d < min_degree_) return 0;
  return coeffs_[d - min_degree_];
}

void TruncatedVSeries::add_to(int d, const Rational& c) {
  if (d > cutoff_ || c == 0) return;
  if (coeffs_.empty()) {
    min_degree_ = d;
    coeffs_.assign(cutoff_ - d + 1, Rational(0));
  } else if (d < min_degree_) {
    coeffs_.insert(coeffs_.begin(), min_degree_ - d, Rational(0));
    min_degree_ = d;
  }
  coeffs_[d - min_degree_] += c;
  if (d == min_degree_) trim();
}

void TruncatedVSeries::trim() {
  size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  if (k == coeffs_.size()) {
    coeffs_.clear();
    min_degree_ = cutoff_ + 1;
    return;
  }
  if (k) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(k));
    min_degree_ += static_cast<int>(k);
  }
}

bool TruncatedVSeries::is_zero() const { return coeffs_.empty(); }

TruncatedVSeries TruncatedVSeries::truncated(int cutoff) const {
  if (cutoff > cutoff_) throw std::invalid_argument("cannot extend a truncated series");
  TruncatedVSeries r(cutoff);
  for (int d = min_degree_; d <= cutoff; ++d) r.add_to(d, coeffs_[d - min_degree_]);
  return r;
}

TruncatedVSeries TruncatedVSeries::shifted(int s) const {
  TruncatedVSeries r = *this;
  r.min_degree_ += s;
  r.cutoff_ += s;
  return r;
}

LaurentPoly TruncatedVSeries::to_laurent() const {
  LaurentPoly p;
  for (size_t i = 0; i < coeffs_.size(); ++i) p.add_term(min_degree_ + static_cast<int>(i), coeffs_[i]);
  return p;
}

TruncatedVSeries& TruncatedVSeries::operator+=(const TruncatedVSeries& o) {
  TruncatedVSeries r(std::min(cutoff_, o.cutoff_));
  for (int d = min_degree_; d <= r.cutoff_; ++d) r.add_to(d, coeffs_[d - min_degree_]);
  for (int d = o.min_degree_; d <= r.cutoff_; ++d) r.add_to(d, o.coeffs_[d - o.min_degree_]);
  r.trim();
  return *this = std::move(r);
}

TruncatedVSeries& TruncatedVSeries::operator-=(const TruncatedVSeries& o) {
  TruncatedVSeries neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

TruncatedVSeries& TruncatedVSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

TruncatedVSeries operator*(const TruncatedVSeries& a, const TruncatedVSeries& b) {
  TruncatedVSeries r(std::min(a.cutoff_ + b.min_degree_, b.cutoff_ + a.min_degree_));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    int da = a.min_degree_ + static_cast<int>(i);
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      int d = da + b.min_degree_ + static_cast<int>(j);
      if (d > r.cutoff_) break;
      r.add_to(d, a.coeffs_[i] * b.coeffs_[j]);
    }
  }
  r.trim();
  return r;
}

bool operator==(const TruncatedVSeries& a, const TruncatedVSeries& b) {
  return a.cutoff_ == b.cutoff_ && a.min_degree_ == b.min_degree_ && a.coeffs_ == b.coeffs_;
}

std::string TruncatedVSeries::to_string() const {
  std::string s = to_laurent().to_string();
  return s + " + O(v^" + std::to_string(cutoff_ + 1) + ")";
}

TruncatedVSeries TriGradedSeries::part(int t2, int h2) const {
  auto it = parts_.find({t2, h2});
  return it == parts_.end() ? TruncatedVSeries(cutoff_) : it->second;
}

void TriGradedSeries::add(int t2, int h2, const TruncatedVSeries& s) {
  auto it = parts_.find({t2, h2});
  if (it == parts_.end()) {
    TruncatedVSeries z(cutoff_);
    z += s;
    if (!z.is_zero()) parts_.emplace(Key{t2, h2}, z);
    return;
  }
  it->second += s;
  if (it->second.is_zero()) parts_.erase(it);
}

void TriGradedSeries::add_term(int t2, int h2, int vdeg, const Rational& c) {
  if (vdeg > cutoff_ || c == 0) return;
  auto it = parts_.try_emplace(Key{t2, h2}, TruncatedVSeries(cutoff_)).first;
  it->second.add_to(vdeg, c);
  if (it->second.is_zero()) parts_.erase(it);
}

void TriGradedSeries::prune() {
  for (auto it = parts_.begin(); it != parts_.end();) {
    if (it->second.is_zero())
      it = parts_.erase(it);
    else
      ++it;
  }
}

TriGradedSeries TriGradedSeries::truncated(int cutoff) const {
  TriGradedSeries r(cutoff);
  for (const auto& [k, s] : parts_) r.add(k.first, k.second, s.truncated(cutoff));
  return r;
}

TriGradedSeries TriGradedSeries::shifted(int dt2, int dh2, int dv) const {
  TriGradedSeries r(cutoff_ + dv);
  for (const auto& [k, s] : parts_) r.parts_.emplace(Key{k.first + dt2, k.second + dh2}, s.shifted(dv));
  return r;
}

TriGradedSeries operator+(const TriGradedSeries& a, const TriGradedSeries& b) {
  TriGradedSeries r(std::min(a.cutoff_, b.cutoff_));
  for (const auto& [k, s] : a.parts_) r.add(k.first, k.second, s);
  for (const auto& [k, s] : b.parts_) r.add(k.first, k.second, s);
  return r;
}

TriGradedSeries operator*(const TriGradedSeries& a, const TriGradedSeries& b) {
  auto min_deg = [](const TriGradedSeries& x) {
    int m = x.cutoff_ + 1;
    for (const auto& [k, s] : x.parts_) m = std::min(m, s.min_degree());
    return m;
  };
  int cutoff = std::min(a.cutoff_ + min_deg(b), b.cutoff_ + min_deg(a));
  TriGradedSeries r(cutoff);
  for (const auto& [ka, sa] : a.parts_)
    for (const auto& [kb, sb] : b.parts_) {
      TruncatedVSeries p = sa * sb;
      if (p.cutoff() < cutoff) throw std::logic_error("series product cutoff mismatch");
      r.add(ka.first + kb.first, ka.second + kb.second, p.truncated(cutoff));
    }
  r.prune();
  return r;
}

bool operator==(const TriGradedSeries& a, const TriGradedSeries& b) {
  return a.cutoff_ == b.cutoff_ && a.parts_ == b.parts_;
}

bool TriGradedSeries::parity_consistent() const {
  if (parts_.empty()) return true;
  int tp = parts_.begin()->first.first & 1, hp = parts_.begin()->first.second & 1;
  for (const auto& [k, s] : parts_)
    if ((k.first & 1) != tp || (k.second & 1) != hp) return false;
  return true;
}

namespace {
std::string half_power(const char* var, int e2) {
  if (e2 == 0) return "";
  std::string s = var;
  if (e2 == 2) return s;
  if (e2 % 2 == 0) return s + "^" + std::to_string(e2 / 2);
  return s + "^(" + std::to_string(e2) + "/2)";
}
}  // namespace

std::string TriGradedSeries::to_string() const {
  if (parts_.empty()) return "0 + O(v^" + std::to_string(cutoff_ + 1) + ")";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, s] : parts_) {
    if (!first) out << " + ";
    first = false;
    std::string pre = half_power("t", k.first);
    std::string h = half_power("h", k.second);
    if (!h.empty()) pre += (pre.empty() ? "" : "*") + h;
    if (!pre.empty()) out << pre << "*";
    out << "(" << s.to_laurent().to_string() << ")";
  }
  out << " + O(v^" << cutoff_ + 1 << ")";
  return out.str();
}

namespace {
// Coefficients of v^d as Laurent polynomials in h, shifted so that the
// lowest power of v sits at index 0.
std::vector<LaurentPoly> v_coefficients(const Poly& p) {
  for (const auto& t : p.terms())
    if (mono_exp(t.first, kVarA) != 0) throw std::invalid_argument("series expansion expects variables v and h only");
  std::vector<LaurentPoly> out(p.degree_in(kVarV) + 1);
  for (const auto& t : p.terms()) out[mono_exp(t.first, kVarV)].add_term(mono_exp(t.first, kVarH), t.second);
  return out;
}
}  // namespace

TriGradedSeries rational_to_series(const MultiRational& r, int cutoff) {
  TriGradedSeries out(cutoff);
  if (r.is_zero()) return out;
  std::vector<LaurentPoly> N = v_coefficients(r.num());
  std::vector<LaurentPoly> D = v_coefficients(r.den());
  int d0 = 0;
  while (D[d0].is_zero()) ++d0;
  int n0 = 0;
  while (N[n0].is_zero()) ++n0;
  const LaurentPoly& lead = D[d0];
  if (lead.terms().size() != 1) throw std::domain_error("series expansion: lowest denominator coefficient is not a monomial in h");
  const int he = lead.min_degree();
  const Rational lc = lead.terms().begin()->second;
  const LaurentPoly lead_inv = LaurentPoly::monomial(-he, 1 / lc);

  const int start = n0 - d0;
  std::vector<LaurentPoly> q;
  for (int j = start; j <= cutoff; ++j) {
    LaurentPoly acc;
    int ni = j + d0;
    if (ni >= 0 && ni < static_cast<int>(N.size())) acc = N[ni];
    for (int i = 1; d0 + i < static_cast<int>(D.size()); ++i) {
      int qj = j - i - start;
      if (qj < 0) break;
      if (!D[d0 + i].is_zero() && !q[qj].is_zero()) acc -= D[d0 + i] * q[qj];
    }
    q.push_back(acc * lead_inv);
  }
  for (size_t i = 0; i < q.size(); ++i)
    for (const auto& [eh, c] : q[i].terms()) out.add_term(0, 2 * eh, start + static_cast<int>(i), c);
  return out;
}

TruncatedVSeries rational_to_v_series(const MultiRational& r, int cutoff) {
  TriGradedSeries s = rational_to_series(r, cutoff);
  for (const auto& [k, p] : s.parts())
    if (k != TriGradedSeries::Key{0, 0}) throw std::invalid_argument("rational_to_v_series: h occurs");
  return s.part(0, 0);
}

}  // namespace linkhom
