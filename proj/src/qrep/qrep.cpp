#include "linkhom/qrep.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

namespace linkhom {

namespace {
MultiRational vpow(int e, long c = 1) { return MultiRational::monomial(c, e); }

MultiRational scalar_pow(const MultiRational& x, int e) { return pow(x, e); }
}  // namespace

RepContext::RepContext(int k_, int eta_) : k(k_), eta(eta_) {
  if (k < 1 || k > 16) throw std::invalid_argument("rank k must be between 1 and 16");
  if (eta != 1 && eta != -1) throw std::invalid_argument("eta must be +1 or -1");
}

MultiRational RepContext::gamma() const { return vpow(-eta, eta); }

MultiRational RepContext::wedge_eigenvalue() const { return -gamma().inverse(); }

const std::vector<unsigned>& wedge_masks(int k, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<unsigned>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace({k, d});
  if (inserted && d >= 0 && d <= k)
    for (unsigned m = 0; m < (1u << k); ++m)
      if (std::popcount(m) == d) it->second.push_back(m);
  return it->second;
}

int wedge_dim(int k, int d) { return static_cast<int>(wedge_masks(k, d).size()); }

int wedge_index(int k, unsigned mask) {
  const auto& ms = wedge_masks(k, std::popcount(mask));
  auto it = std::lower_bound(ms.begin(), ms.end(), mask);
  if (it == ms.end() || *it != mask) throw std::out_of_range("wedge_index");
  return static_cast<int>(it - ms.begin());
}

int space_dim(int k, const std::vector<int>& labels) {
  int d = 1;
  for (int a : labels) d *= wedge_dim(k, a);
  return d;
}

QMatrix place(const QMatrix& op, int left_dim, int right_dim) {
  if (left_dim == 1 && right_dim == 1) return op;
  QMatrix r(left_dim * op.rows() * right_dim, left_dim * op.cols() * right_dim);
  for (int l = 0; l < left_dim; ++l)
    for (int j = 0; j < op.cols(); ++j)
      for (int rr = 0; rr < right_dim; ++rr) {
        QVec col;
        col.reserve(op.column(j).size());
        for (const auto& [i, x] : op.column(j)) col.emplace_back((l * op.rows() + i) * right_dim + rr, x);
        r.set_column((l * op.cols() + j) * right_dim + rr, std::move(col));
      }
  return r;
}

QMatrix generator_action(const RepContext& ctx, Generator g) {
  const int k = ctx.k;
  QMatrix m(k, k);
  if (g.type == GenType::E || g.type == GenType::F) {
    if (g.index < 1 || g.index >= k) throw std::out_of_range("generator index out of range");
  } else if (g.index < 1 || g.index > k) {
    throw std::out_of_range("generator index out of range");
  }
  const int i = g.index - 1;  // 0-based e_{i+1}
  switch (g.type) {
    case GenType::E:
      if (ctx.eta > 0)
        m.set(i + 1, i, MultiRational(1));  // e_i -> e_{i+1}
      else
        m.set(i, i + 1, MultiRational(1));  // e_{i+1} -> e_i
      break;
    case GenType::F:
      if (ctx.eta > 0)
        m.set(i, i + 1, MultiRational(1));  // e_{i+1} -> e_i
      else
        m.set(i + 1, i, MultiRational(-1));  // e_i -> -e_{i+1}
      break;
    case GenType::D:
    case GenType::Dinv: {
      const int s = g.type == GenType::D ? 1 : -1;
      const long sign = ctx.eta > 0 ? 1 : -1;
      for (int r = 0; r < k; ++r) m.set(r, r, vpow(r == i ? s : 0, sign));
      break;
    }
  }
  return m;
}

namespace {
// K = D_i D_{i+1}^{-1} or its inverse on one factor.
QMatrix k_action(const RepContext& ctx, int i, int power) {
  QMatrix a = generator_action(ctx, {GenType::D, i});
  QMatrix b = generator_action(ctx, {GenType::Dinv, i + 1});
  QMatrix kk = a * b;
  return power > 0 ? kk : kk.inverse();
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Tensor product of single-factor operators.
QMatrix tensor_all(const std::vector<QMatrix>& ops) {
  QMatrix r = QMatrix::identity(1);
  for (const auto& o : ops) r = kron(r, o);
  return r;
}
}  // namespace

QMatrix coproduct_action(const RepContext& ctx, Generator g, int factors, Coproduct order) {
  const int k = ctx.k;
  if (factors == 0) {
    // Counit: E, F act by 0, D by 1.
    QMatrix m(1, 1);
    if (g.type == GenType::D || g.type == GenType::Dinv) m.set(0, 0, MultiRational(1));
    return m;
  }
  QMatrix single = generator_action(ctx, g);
  if (g.type == GenType::D || g.type == GenType::Dinv) return tensor_all(std::vector<QMatrix>(factors, single));
  const bool is_e = g.type == GenType::E;
  QMatrix kk = k_action(ctx, g.index, is_e ? 1 : -1);
  QMatrix id = QMatrix::identity(k);
  // Which side of the acting factor carries the K-type group-like element.
  const bool k_before = (is_e && order == Coproduct::kPrinted) || (!is_e && order == Coproduct::kOpposite);
  QMatrix total(ipow(k, factors), ipow(k, factors));
  for (int p = 0; p < factors; ++p) {
    std::vector<QMatrix> ops;
    for (int q = 0; q < factors; ++q) {
      if (q == p)
        ops.push_back(single);
      else if ((q < p) == k_before)
        ops.push_back(kk);
      else
        ops.push_back(id);
    }
    total = total + tensor_all(ops);
  }
  return total;
}

QMatrix braid_action(const RepContext& ctx, int i, int factors, int sign) {
  if (i < 1 || i >= factors) throw std::out_of_range("braid_action: index out of range");
  const int k = ctx.k;
  QMatrix h(k * k, k * k);
  const MultiRational z = vpow(-1) - vpow(1);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const int col = a * k + b;
      if (a > b) {
        h.set(b * k + a, col, MultiRational(1));
      } else if (a < b) {
        h.set(b * k + a, col, MultiRational(1));
        h.set(col, col, z);
      } else {
        h.set(col, col, ctx.gamma());
      }
    }
  if (sign < 0) {
    // H^{-1} = H + (v - v^{-1})
    h = h - z * QMatrix::identity(k * k);
  }
  return place(h, ipow(k, i - 1), ipow(k, factors - i - 1));
}

namespace {
// Number of pairs (i in I, j in J) with i < j.
int cross_inversions(unsigned I, unsigned J) {
  int n = 0;
  for (unsigned x = I; x; x &= x - 1) {
    unsigned bit = x & -x;
    n += std::popcount(J & ~((bit << 1) - 1));
  }
  return n;
}
}  // namespace

QMatrix exterior_embedding(const RepContext& ctx, int d) {
  const int k = ctx.k;
  const auto& masks = wedge_masks(k, d);
  QMatrix m(ipow(k, d), static_cast<int>(masks.size()));
  const MultiRational c = ctx.wedge_eigenvalue();
  for (size_t col = 0; col < masks.size(); ++col) {
    std::vector<int> elems;  // decreasing
    for (int r = k - 1; r >= 0; --r)
      if (masks[col] >> r & 1u) elems.push_back(r);
    std::vector<int> perm(elems);
    std::sort(perm.begin(), perm.end());
    do {
      int len = 0, idx = 0;
      for (int p = 0; p < d; ++p) {
        idx = idx * k + perm[p];
        for (int q = p + 1; q < d; ++q)
          if (perm[p] < perm[q]) ++len;
      }
      m.set(idx, static_cast<int>(col), scalar_pow(c, len));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return m;
}

MultiRational wedge_constant(const RepContext& ctx, int a, int b) {
  return ctx.eta < 0 ? vpow(a * b) : MultiRational(1);
}

MultiRational shuffle_constant(const RepContext& ctx, int a, int b) {
  MultiRational s = scalar_pow(-ctx.gamma(), a * b);
  return ctx.eta < 0 ? s * vpow(-a * b) : s;
}

QMatrix wedge_map(const RepContext& ctx, int a, int b) {
  const int k = ctx.k;
  const auto &ma = wedge_masks(k, a), &mb = wedge_masks(k, b);
  QMatrix m(wedge_dim(k, a + b), static_cast<int>(ma.size() * mb.size()));
  if (a + b > k || a < 0 || b < 0) return m;
  const MultiRational c = ctx.wedge_eigenvalue(), norm = wedge_constant(ctx, a, b);
  for (size_t i = 0; i < ma.size(); ++i)
    for (size_t j = 0; j < mb.size(); ++j) {
      if (ma[i] & mb[j]) continue;
      m.set(wedge_index(k, ma[i] | mb[j]), static_cast<int>(i * mb.size() + j),
            norm * scalar_pow(c, cross_inversions(ma[i], mb[j])));
    }
  return m;
}

QMatrix shuffle_map(const RepContext& ctx, int a, int b) {
  const int k = ctx.k;
  const auto &ma = wedge_masks(k, a), &mb = wedge_masks(k, b);
  QMatrix m(static_cast<int>(ma.size() * mb.size()), wedge_dim(k, a + b));
  if (a + b > k || a < 0 || b < 0) return m;
  const MultiRational c = ctx.wedge_eigenvalue(), norm = shuffle_constant(ctx, a, b);
  for (size_t i = 0; i < ma.size(); ++i)
    for (size_t j = 0; j < mb.size(); ++j) {
      if (ma[i] & mb[j]) continue;
      m.set(static_cast<int>(i * mb.size() + j), wedge_index(k, ma[i] | mb[j]),
            norm * scalar_pow(c, cross_inversions(ma[i], mb[j])));
    }
  return m;
}

QMatrix cupcap(const RepContext& ctx) { return shuffle_map(ctx, 1, 1) * wedge_map(ctx, 1, 1); }

QMatrix restricted_action(const RepContext& ctx, Generator g, int d, Coproduct order) {
  const int k = ctx.k;
  QMatrix emb = exterior_embedding(ctx, d);
  QMatrix img = coproduct_action(ctx, g, d, order) * emb;
  // Read coordinates off the decreasing tensor e_{i_1} (x) ... (x) e_{i_d},
  // which occurs with coefficient 1 in exactly one embedded basis vector.
  const auto& masks = wedge_masks(k, d);
  std::map<int, int> leading;
  for (size_t col = 0; col < masks.size(); ++col) {
    int idx = 0;
    for (int r = k - 1; r >= 0; --r)
      if (masks[col] >> r & 1u) idx = idx * k + r;
    leading[idx] = static_cast<int>(col);
  }
  QMatrix out(static_cast<int>(masks.size()), static_cast<int>(masks.size()));
  for (int j = 0; j < img.cols(); ++j)
    for (const auto& [i, x] : img.column(j))
      if (auto it = leading.find(i); it != leading.end()) out.set(it->second, j, x);
  return out;
}

QMatrix jones_wenzl(int m) {
  if (m < 1) throw std::invalid_argument("jones_wenzl: m must be positive");
  const RepContext ctx(2, 1);
  const QMatrix u = cupcap(ctx);
  QMatrix p = QMatrix::identity(2);
  for (int j = 2; j <= m; ++j) {
    QMatrix q = kron(p, QMatrix::identity(2));
    QMatrix uj = place(u, ipow(2, j - 2), 1);
    MultiRational ratio = MultiRational::from_laurent(quantum_int(j - 1)) / MultiRational::from_laurent(quantum_int(j));
    p = q + ratio * (q * uj * q);
  }
  return p;
}

}  // namespace linkhom
