#include "linkhom/khovanov.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace linkhom {

FrobeniusData frobenius_ops() {
  FrobeniusData f;
  f.degree = {1, -1};
  // m(1 1) = 1, m(1 x) = m(x 1) = x, m(x x) = 0
  f.m = {{{1, 0}, {0, 1}, {0, 1}, {0, 0}}};
  // delta(1) = 1 x + x 1, delta(x) = x x
  f.delta = {{{0, 1, 1, 0}, {0, 0, 0, 1}}};
  f.unit = {1, 0};
  f.counit = {0, 1};
  return f;
}

void BigradedPoly::add(int t, int v, long c) {
  if (c == 0) return;
  auto key = std::make_pair(t, v);
  long& x = terms_[key];
  x += c;
  if (x == 0) terms_.erase(key);
}

long BigradedPoly::coeff(int t, int v) const {
  auto it = terms_.find({t, v});
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly BigradedPoly::at_t_minus_one() const {
  LaurentPoly p;
  for (const auto& [k, c] : terms_) p.add_term(k.second, Rational(k.first % 2 ? -c : c));
  return p;
}

BigradedPoly operator*(const BigradedPoly& a, const BigradedPoly& b) {
  BigradedPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

std::string BigradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const auto [t, v] = k;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const long mag = c < 0 ? -c : c;
    std::vector<std::string> parts;
    if (mag != 1 || (t == 0 && v == 0)) parts.push_back(std::to_string(mag));
    if (t != 0) parts.push_back(t == 1 ? "t" : "t^" + std::to_string(t));
    if (v != 0) parts.push_back(v == 1 ? "v" : "v^" + std::to_string(v));
    for (size_t i = 0; i < parts.size(); ++i) out << (i ? "*" : "") << parts[i];
  }
  return out.str();
}

CubeComplex::CubeComplex(const BraidWord& b) : braid_(b), diagram_(b) {
  validate(b);
  crossings_ = static_cast<int>(b.letters.size());
  if (crossings_ > 24) throw std::invalid_argument("cube_complex: too many crossings");
  n_plus_ = positive_crossings(b);
  n_minus_ = negative_crossings(b);
  std::uint64_t negative = 0;
  for (int c = 0; c < crossings_; ++c)
    if (b.letters[c].sign < 0) negative |= std::uint64_t{1} << c;

  const std::uint64_t states = std::uint64_t{1} << crossings_;
  circles_.resize(states);
  labels_.resize(states);
  for (std::uint64_t s = 0; s < states; ++s) labels_[s] = diagram_.circle_labels(s ^ negative, &circles_[s]);

  const FrobeniusData f = frobenius_ops();
  groups_.resize(crossings_ + 1);
  index_.resize(crossings_ + 1);
  for (std::uint64_t s = 0; s < states; ++s) {
    const int r = std::popcount(s);
    for (std::uint32_t lab = 0; lab < (1u << circles_[s]); ++lab) {
      const int xs = std::popcount(lab);
      const int q = (circles_[s] - xs) * f.degree[0] + xs * f.degree[1] + q_shift(s);
      index_[r].emplace(std::make_pair(s, lab), static_cast<int>(groups_[r].size()));
      groups_[r].push_back({s, lab, q});
    }
  }
}

int CubeComplex::homological_degree(std::uint64_t state) const { return std::popcount(state) - n_minus_; }

int CubeComplex::q_shift(std::uint64_t state) const { return std::popcount(state) + n_plus_ - 2 * n_minus_; }

const std::vector<CubeComplex::Generator>& CubeComplex::chain_group(int degree) const {
  static const std::vector<Generator> empty;
  const int r = degree + n_minus_;
  if (r < 0 || r > crossings_) return empty;
  return groups_[r];
}

SparseMatrixQ CubeComplex::differential(int degree) const {
  const int r = degree + n_minus_;
  SparseMatrixQ d;
  d.rows = static_cast<int>(chain_group(degree + 1).size());
  const auto& src = chain_group(degree);
  d.cols.resize(src.size());
  if (r < 0 || r >= crossings_) return d;
  const FrobeniusData f = frobenius_ops();

  for (size_t j = 0; j < src.size(); ++j) {
    const auto& g = src[j];
    std::map<int, Rational> acc;
    for (int c = 0; c < crossings_; ++c) {
      if ((g.state >> c) & 1u) continue;
      const std::uint64_t t = g.state | (std::uint64_t{1} << c);
      const int sign = std::popcount(g.state & ((std::uint64_t{1} << c) - 1)) % 2 ? -1 : 1;
      const auto& before = labels_[g.state];
      const auto& after = labels_[t];
      // Label bit of every circle of the old state, carried to the new state
      // for circles away from the crossing.
      const int i = braid_.letters[c].index - 1;
      const int pts[] = {diagram_.point(c, i), diagram_.point(c, i + 1), diagram_.point(c + 1, i),
                         diagram_.point(c + 1, i + 1)};
      std::set<int> old_c, new_c;
      for (int p : pts) {
        old_c.insert(before[p]);
        new_c.insert(after[p]);
      }
      // Rest of the circles: map by any point they contain.
      std::vector<int> old_to_new(circles_[g.state], -1);
      for (size_t p = 0; p < before.size(); ++p)
        if (!old_c.count(before[p])) old_to_new[before[p]] = after[p];
      std::uint32_t base = 0;
      for (int o = 0; o < circles_[g.state]; ++o)
        if (!old_c.count(o) && ((g.labels >> o) & 1u)) base |= 1u << old_to_new[o];
      auto emit = [&](std::uint32_t lab, int coeff) {
        if (coeff == 0) return;
        const int row = index_[r + 1].at({t, lab});
        acc[row] += sign * coeff;
      };
      if (old_c.size() == 2 && new_c.size() == 1) {
        const int a = *old_c.begin(), b = *old_c.rbegin(), m = *new_c.begin();
        const int in = 2 * ((g.labels >> a) & 1u) + ((g.labels >> b) & 1u);
        for (int out = 0; out < 2; ++out) emit(base | (out ? 1u << m : 0u), f.m[in][out]);
      } else if (old_c.size() == 1 && new_c.size() == 2) {
        const int a = *old_c.begin(), m1 = *new_c.begin(), m2 = *new_c.rbegin();
        const int in = (g.labels >> a) & 1u;
        for (int out = 0; out < 4; ++out)
          emit(base | ((out >> 1) ? 1u << m1 : 0u) | ((out & 1) ? 1u << m2 : 0u), f.delta[in][out]);
      } else {
        throw std::logic_error("cube edge neither merges nor splits");
      }
    }
    for (auto& [row, c] : acc)
      if (c != 0) d.cols[j].emplace_back(row, c);
  }
  return d;
}

bool CubeComplex::d_squared_zero() const {
  for (int deg = min_degree(); deg + 1 < max_degree(); ++deg) {
    const SparseMatrixQ d1 = differential(deg), d2 = differential(deg + 1);
    for (const auto& col : d1.cols)
      if (!d2.apply(col).empty()) return false;
  }
  return true;
}

BigradedPoly kh_poincare(const BraidWord& b) {
  const CubeComplex cx(b);
  // rank of the differential out of each (degree, q) block
  std::map<std::pair<int, int>, int> rank_out, dim;
  for (int deg = cx.min_degree(); deg <= cx.max_degree(); ++deg) {
    const auto& gens = cx.chain_group(deg);
    std::map<int, std::vector<int>> by_q;
    for (size_t j = 0; j < gens.size(); ++j) by_q[gens[j].q].push_back(static_cast<int>(j));
    const SparseMatrixQ d = cx.differential(deg);
    for (const auto& [q, cols] : by_q) {
      dim[{deg, q}] = static_cast<int>(cols.size());
      RowEchelon e;
      for (int j : cols) e.insert(d.cols[j]);
      rank_out[{deg, q}] = e.rank();
    }
  }
  BigradedPoly p;
  for (const auto& [key, n] : dim) {
    const auto [deg, q] = key;
    int h = n - rank_out[key];
    if (auto it = rank_out.find({deg - 1, q}); it != rank_out.end()) h -= it->second;
    p.add(deg, q, h);
  }
  return p;
}

}  // namespace linkhom
