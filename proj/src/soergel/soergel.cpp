#include "linkhom/soergel.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "linkhom/rational_function.hpp"

namespace linkhom {

namespace {

constexpr int kMaxKrStrands = kMaxVars;

Poly x(int i) { return Poly::var(i - 1); }  // 1-based variable

std::vector<int> plus(std::vector<int> d, int s) {
  for (int& x : d) x += s;
  return d;
}

PolyMatrix identity_matrix(int nvars, const std::vector<int>& deg) {
  PolyMatrix m(nvars, deg, deg);
  for (int i = 0; i < m.rows(); ++i) m.at(i, i) = Poly(1);
  return m;
}

// Right multiplication by monomials, memoized per module.
class MonomialAction {
 public:
  explicit MonomialAction(const Bimodule& m) : m_(m) {}

  const PolyMatrix& of(Mono mono) {
    auto it = cache_.find(mono);
    if (it != cache_.end()) return it->second;
    PolyMatrix r;
    if (mono == 0) {
      r = identity_matrix(m_.ctx().n, m_.degrees());
    } else {
      int var = 0;
      while (mono_exp(mono, var) == 0) ++var;
      // Copy: the recursive call may rehash nothing (std::map) but keep it simple.
      PolyMatrix rest = of(mono - mono_var(var, 1));
      r = m_.right(var) * rest;
    }
    return cache_.emplace(mono, std::move(r)).first->second;
  }

  // Column `col` of the matrix of right multiplication by p, accumulated into out
  // with rows offset and scaled by `scale`.
  void add_column(const Poly& p, int col, const Poly& scale, std::vector<Poly>& out) {
    for (const auto& [mono, c] : p.terms()) {
      const PolyMatrix& mm = of(mono);
      for (int r = 0; r < mm.rows(); ++r) {
        const Poly& e = mm.at(r, col);
        if (!e.is_zero()) out[r] += (e * scale) * c;
      }
    }
  }

 private:
  const Bimodule& m_;
  std::map<Mono, PolyMatrix> cache_;
};

// The map id_M (x) g : M (x) N -> M (x) N' for a left-linear map g: N -> N'
// given by its matrix (rows N' generators, columns N generators).
PolyMatrix id_tensor(const Bimodule& m, MonomialAction& act, const PolyMatrix& g, const std::vector<int>& row_deg,
                     const std::vector<int>& col_deg) {
  const int rm = m.rank(), rn = g.cols(), rn2 = g.rows();
  PolyMatrix out(m.ctx().n, row_deg, col_deg);
  std::vector<Poly> column(rm);
  for (int i = 0; i < rm; ++i)
    for (int j = 0; j < rn; ++j)
      for (int l = 0; l < rn2; ++l) {
        const Poly& a = g.at(l, j);
        if (a.is_zero()) continue;
        std::fill(column.begin(), column.end(), Poly());
        act.add_column(a, i, Poly(1), column);
        for (int i2 = 0; i2 < rm; ++i2)
          if (!column[i2].is_zero()) out.at(i2 * rn2 + l, i * rn + j) += column[i2];
      }
  return out;
}

// f (x) id_N for a left-linear map f: M -> M'.
PolyMatrix tensor_id(const PolyMatrix& f, int rn, const std::vector<int>& row_deg, const std::vector<int>& col_deg) {
  PolyMatrix out(f.nvars(), row_deg, col_deg);
  for (int i2 = 0; i2 < f.rows(); ++i2)
    for (int i = 0; i < f.cols(); ++i) {
      const Poly& e = f.at(i2, i);
      if (e.is_zero()) continue;
      for (int j = 0; j < rn; ++j) out.at(i2 * rn + j, i * rn + j) = e;
    }
  return out;
}

std::vector<int> tensor_degrees(const Bimodule& m, const Bimodule& n) {
  std::vector<int> d;
  d.reserve(static_cast<size_t>(m.rank()) * n.rank());
  for (int a : m.degrees())
    for (int b : n.degrees()) d.push_back(a + b);
  return d;
}

}  // namespace

RingCtx::RingCtx(int n_) : n(n_) {
  if (n < 0 || n > kMaxKrStrands) throw std::invalid_argument("RingCtx: unsupported number of variables");
}

Bimodule::Bimodule(RingCtx ctx, std::vector<int> degrees, std::vector<PolyMatrix> right)
    : ctx_(ctx), degrees_(std::move(degrees)), right_(std::move(right)) {
  if (static_cast<int>(right_.size()) != ctx_.n) throw std::invalid_argument("Bimodule: one right action per variable");
  for (auto& r : right_) {
    if (r.rows() != rank() || r.cols() != rank()) throw std::invalid_argument("Bimodule: action size mismatch");
    r = r.regraded(degrees_, plus(degrees_, 2));
  }
}

Bimodule Bimodule::regular(RingCtx ctx, int shift) {
  std::vector<PolyMatrix> right;
  for (int k = 1; k <= ctx.n; ++k) {
    PolyMatrix m(ctx.n, {shift}, {shift + 2});
    m.at(0, 0) = x(k);
    right.push_back(std::move(m));
  }
  return Bimodule(ctx, {shift}, std::move(right));
}

PolyMatrix Bimodule::right_mul(const Poly& p) const {
  MonomialAction act(*this);
  PolyMatrix out(ctx_.n, degrees_, degrees_);
  std::vector<Poly> column(rank());
  for (int j = 0; j < rank(); ++j) {
    std::fill(column.begin(), column.end(), Poly());
    act.add_column(p, j, Poly(1), column);
    for (int i = 0; i < rank(); ++i) out.at(i, j) = column[i];
  }
  const int d = p.is_zero() ? 0 : 2 * p.total_degree();
  return out.regraded(degrees_, plus(degrees_, d));
}

Bimodule Bimodule::shifted(int s) const { return Bimodule(ctx_, plus(degrees_, s), right_); }

bool Bimodule::actions_commute() const {
  for (int a = 0; a < ctx_.n; ++a)
    for (int b = a + 1; b < ctx_.n; ++b)
      if (!(right_[a] * right_[b] == right_[b] * right_[a])) return false;
  return true;
}

bool Bimodule::graded() const {
  for (const auto& r : right_)
    if (!r.graded_consistent()) return false;
  return true;
}

Bimodule bs_generator(RingCtx ctx, int i) {
  if (i < 1 || i >= ctx.n) throw std::out_of_range("bs_generator: index out of range");
  std::vector<PolyMatrix> right;
  for (int k = 1; k <= ctx.n; ++k) {
    PolyMatrix m(ctx.n, {-1, 1}, {1, 3});
    if (k == i) {
      // (1 (x) 1) x_i = 1 (x) x_i;  (1 (x) x_i) x_i = (x_i + x_{i+1})(1 (x) x_i) - x_i x_{i+1} (1 (x) 1)
      m.at(1, 0) = Poly(1);
      m.at(0, 1) = -(x(i) * x(i + 1));
      m.at(1, 1) = x(i) + x(i + 1);
    } else if (k == i + 1) {
      m.at(0, 0) = x(i) + x(i + 1);
      m.at(1, 0) = Poly(-1);
      m.at(0, 1) = x(i) * x(i + 1);
    } else {
      m.at(0, 0) = x(k);
      m.at(1, 1) = x(k);
    }
    right.push_back(std::move(m));
  }
  return Bimodule(ctx, {-1, 1}, std::move(right));
}

Bimodule tensor(const Bimodule& m, const Bimodule& n) {
  if (m.ctx().n != n.ctx().n) throw std::invalid_argument("tensor: ring mismatch");
  MonomialAction act(m);
  const std::vector<int> deg = tensor_degrees(m, n);
  std::vector<PolyMatrix> right;
  for (int k = 0; k < m.ctx().n; ++k) right.push_back(id_tensor(m, act, n.right(k), deg, plus(deg, 2)));
  return Bimodule(m.ctx(), deg, std::move(right));
}

Bimodule direct_sum(const std::vector<Bimodule>& parts, RingCtx ctx) {
  std::vector<int> deg;
  for (const auto& p : parts) deg.insert(deg.end(), p.degrees().begin(), p.degrees().end());
  std::vector<PolyMatrix> right;
  for (int k = 0; k < ctx.n; ++k) {
    PolyMatrix r(ctx.n, deg, plus(deg, 2));
    int off = 0;
    for (const auto& p : parts) {
      for (int i = 0; i < p.rank(); ++i)
        for (int j = 0; j < p.rank(); ++j) r.at(off + i, off + j) = p.right(k).at(i, j);
      off += p.rank();
    }
    right.push_back(std::move(r));
  }
  return Bimodule(ctx, deg, std::move(right));
}

Bimodule bs_word(RingCtx ctx, const std::vector<int>& word) {
  Bimodule m = Bimodule::regular(ctx);
  for (int i : word) m = tensor(m, bs_generator(ctx, i));
  return m;
}

LaurentPoly graded_rank(const Bimodule& m) {
  LaurentPoly p;
  for (int d : m.degrees()) p.add_term(d, 1);
  return p;
}

bool is_bimodule_map(const Bimodule& src, const Bimodule& dst, const PolyMatrix& f) {
  if (f.rows() != dst.rank() || f.cols() != src.rank()) return false;
  if (!f.regraded(dst.degrees(), src.degrees()).graded_consistent()) return false;
  for (int k = 0; k < src.ctx().n; ++k)
    if (!(dst.right(k) * f == f * src.right(k))) return false;
  return true;
}

bool BimoduleComplex::d_squared_zero() const {
  for (size_t j = 0; j + 1 < diffs.size(); ++j)
    if (!(diffs[j + 1] * diffs[j]).is_zero()) return false;
  return true;
}

BimoduleComplex tensor(const BimoduleComplex& c, const BimoduleComplex& d) {
  if (c.terms.empty() || d.terms.empty()) return {};
  const RingCtx ctx = c.terms.front().ctx();
  const int nc = static_cast<int>(c.terms.size()), nd = static_cast<int>(d.terms.size());
  BimoduleComplex out;
  out.offset = c.offset + d.offset;

  // Summands of each total degree, in order of the left index, with offsets.
  struct Block {
    int a, b, offset;
  };
  std::vector<std::vector<Block>> blocks(nc + nd - 1);
  std::vector<std::vector<Bimodule>> parts(nc + nd - 1);
  std::map<std::pair<int, int>, Bimodule> products;
  for (int m = 0; m < nc + nd - 1; ++m) {
    int off = 0;
    for (int a = std::max(0, m - nd + 1); a <= std::min(m, nc - 1); ++a) {
      const int b = m - a;
      Bimodule p = tensor(c.terms[a], d.terms[b]);
      blocks[m].push_back({a, b, off});
      off += p.rank();
      parts[m].push_back(p);
      products.emplace(std::make_pair(a, b), std::move(p));
    }
    out.terms.push_back(direct_sum(parts[m], ctx));
  }

  std::vector<MonomialAction> actions;
  actions.reserve(nc);
  for (int a = 0; a < nc; ++a) actions.emplace_back(c.terms[a]);

  for (int m = 0; m + 1 < nc + nd - 1; ++m) {
    const Bimodule& src = out.terms[m];
    const Bimodule& dst = out.terms[m + 1];
    PolyMatrix dm(ctx.n, dst.degrees(), src.degrees());
    for (const auto& s : blocks[m])
      for (const auto& t : blocks[m + 1]) {
        PolyMatrix piece;
        const Bimodule& sp = products.at({s.a, s.b});
        const Bimodule& tp = products.at({t.a, t.b});
        if (t.a == s.a + 1 && t.b == s.b) {
          piece = tensor_id(c.diffs[s.a], d.terms[s.b].rank(), tp.degrees(), sp.degrees());
        } else if (t.a == s.a && t.b == s.b + 1) {
          piece = id_tensor(c.terms[s.a], actions[s.a], d.diffs[s.b], tp.degrees(), sp.degrees());
          if ((c.offset + s.a) % 2 != 0)
            for (int i = 0; i < piece.rows(); ++i)
              for (int j = 0; j < piece.cols(); ++j) piece.at(i, j) = -piece.at(i, j);
        } else {
          continue;
        }
        for (int i = 0; i < piece.rows(); ++i)
          for (int j = 0; j < piece.cols(); ++j)
            if (!piece.at(i, j).is_zero()) dm.at(t.offset + i, s.offset + j) = piece.at(i, j);
      }
    out.diffs.push_back(std::move(dm));
  }
  return out;
}

BimoduleComplex rouquier_generator(RingCtx ctx, Letter l) {
  const int i = l.index;
  const Bimodule bs = bs_generator(ctx, i);
  BimoduleComplex c;
  if (l.sign > 0) {
    // R<1> -> BS(s_i), 1 |-> (x_i - x_{i+1}) (1 (x) 1) + (1 (x) 1)(x_i - x_{i+1})
    const Bimodule r = Bimodule::regular(ctx, 1);
    PolyMatrix d(ctx.n, bs.degrees(), r.degrees());
    d.at(0, 0) = Poly(-2) * x(i + 1);
    d.at(1, 0) = Poly(2);
    c.offset = -1;
    c.terms = {r, bs};
    c.diffs = {d};
  } else {
    // BS(s_i) -> R<-1>, 1 (x) 1 |-> 1, 1 (x) x_i |-> x_i
    const Bimodule r = Bimodule::regular(ctx, -1);
    PolyMatrix d(ctx.n, r.degrees(), bs.degrees());
    d.at(0, 0) = Poly(1);
    d.at(0, 1) = x(i);
    c.offset = 0;
    c.terms = {bs, r};
    c.diffs = {d};
  }
  return c;
}

BimoduleComplex rouquier_complex(const BraidWord& b) {
  validate(b);
  const RingCtx ctx(b.strands);
  BimoduleComplex c;
  c.terms = {Bimodule::regular(ctx)};
  for (const auto& l : b.letters) c = tensor(c, rouquier_generator(ctx, l));
  return c;
}

namespace {

// Koszul data of one bimodule with `ops` operators (right minus left action of
// the first `ops` variables) over a ring with `nv` variables.
struct Koszul {
  std::vector<std::vector<int>> subsets;  // subsets[p] = masks with p bits
  std::vector<std::vector<int>> degrees;  // degrees[p] of K_p generators
  std::vector<PolyMatrix> delta;          // delta[p] : K_p -> K_{p-1}, p >= 1
};

std::vector<std::vector<int>> subsets_by_size(int ops) {
  std::vector<std::vector<int>> s(ops + 1);
  for (int mask = 0; mask < (1 << ops); ++mask) s[std::popcount(static_cast<unsigned>(mask))].push_back(mask);
  return s;
}

int subset_index(const std::vector<int>& list, int mask) {
  return static_cast<int>(std::lower_bound(list.begin(), list.end(), mask) - list.begin());
}

Koszul koszul(const std::vector<int>& gen_deg, const std::vector<PolyMatrix>& right, int nv, int ops) {
  Koszul k;
  k.subsets = subsets_by_size(ops);
  const int r = static_cast<int>(gen_deg.size());
  k.degrees.resize(ops + 1);
  for (int p = 0; p <= ops; ++p)
    for (size_t s = 0; s < k.subsets[p].size(); ++s)
      for (int g : gen_deg) k.degrees[p].push_back(g + 2 * p);
  k.delta.resize(ops + 1);
  for (int p = 1; p <= ops; ++p) {
    PolyMatrix d(nv, k.degrees[p - 1], k.degrees[p]);
    for (size_t si = 0; si < k.subsets[p].size(); ++si) {
      const int mask = k.subsets[p][si];
      int position = 0;
      for (int var = 0; var < ops; ++var) {
        if (!((mask >> var) & 1)) continue;
        const int sign = position % 2 ? -1 : 1;
        ++position;
        const int ti = subset_index(k.subsets[p - 1], mask & ~(1 << var));
        const PolyMatrix& rho = right[var];
        for (int j = 0; j < r; ++j)
          for (int i = 0; i < r; ++i) {
            Poly e = rho.at(i, j);
            if (i == j) e -= Poly::var(var);
            if (e.is_zero()) continue;
            d.at(ti * r + i, static_cast<int>(si) * r + j) = sign == 1 ? e : -e;
          }
      }
    }
    k.delta[p] = std::move(d);
  }
  return k;
}

PolyMatrix block_diagonal(const PolyMatrix& f, int copies, const std::vector<int>& row_deg,
                          const std::vector<int>& col_deg) {
  PolyMatrix out(f.nvars(), row_deg, col_deg);
  for (int s = 0; s < copies; ++s)
    for (int i = 0; i < f.rows(); ++i)
      for (int j = 0; j < f.cols(); ++j)
        if (!f.at(i, j).is_zero()) out.at(s * f.rows() + i, s * f.cols() + j) = f.at(i, j);
  return out;
}

// The E2 page of the double complex (Koszul direction, then complex direction),
// degreewise for q <= cutoff. nv variables, `ops` Koszul operators.
TriGradedSeries hhh_core(const std::vector<std::vector<int>>& gen_deg, const std::vector<std::vector<PolyMatrix>>& right,
                         const std::vector<PolyMatrix>& diffs, int offset, int nv, int ops, int cutoff) {
  const int terms = static_cast<int>(gen_deg.size());
  std::vector<Koszul> kz;
  for (int j = 0; j < terms; ++j) kz.push_back(koszul(gen_deg[j], right[j], nv, ops));

  int qmin = cutoff + 1;
  for (const auto& g : gen_deg)
    for (int d : g) qmin = std::min(qmin, d);

  // For each (p, q) and term j, with delta the Koszul differentials and D the
  // chain map: dim HH = dim K_p - rank delta_p - rank delta_{p+1}, and the rank
  // of the induced map on HH is
  //   rank [[delta_p, 0], [D, delta_{p+1}]] - rank delta_p - rank delta_{p+1}
  // (the kernel of the block matrix is {x in Z : Dx in B} times ker delta_{p+1}).
  const int nq = cutoff - qmin + 1;
  if (nq <= 0) return TriGradedSeries(cutoff);
  // rank_delta[p][j][q - qmin], zero for p = 0 and p = ops + 1
  std::vector<std::vector<std::vector<int>>> rank_delta(
      ops + 2, std::vector<std::vector<int>>(terms, std::vector<int>(nq, 0)));
  for (int p = 1; p <= ops; ++p)
    for (int j = 0; j < terms; ++j)
      for (int q = qmin; q <= cutoff; ++q) rank_delta[p][j][q - qmin] = rank_in_degree(kz[j].delta[p], q);

  TriGradedSeries out(cutoff);
  for (int p = 0; p <= ops; ++p) {
    const int copies = static_cast<int>(kz[0].subsets[p].size());
    std::vector<PolyMatrix> blocks;
    for (int j = 0; j + 1 < terms; ++j) {
      // Rows: K_{p-1}(C^j) then K_p(C^{j+1}).  Columns: K_p(C^j) then K_{p+1}(C^{j+1}).
      const std::vector<int> none;
      const auto& top = p >= 1 ? kz[j].degrees[p - 1] : none;
      const auto& right_part = p + 1 <= ops ? kz[j + 1].degrees[p + 1] : none;
      std::vector<int> row_deg = top, col_deg = kz[j].degrees[p];
      row_deg.insert(row_deg.end(), kz[j + 1].degrees[p].begin(), kz[j + 1].degrees[p].end());
      col_deg.insert(col_deg.end(), right_part.begin(), right_part.end());
      PolyMatrix m(nv, row_deg, col_deg);
      const int t = static_cast<int>(top.size()), l = static_cast<int>(kz[j].degrees[p].size());
      auto place = [&m](const PolyMatrix& part, int r0, int c0) {
        for (int r = 0; r < part.rows(); ++r)
          for (int c = 0; c < part.cols(); ++c)
            if (!part.at(r, c).is_zero()) m.at(r0 + r, c0 + c) = part.at(r, c);
      };
      if (p >= 1) place(kz[j].delta[p], 0, 0);
      place(block_diagonal(diffs[j], copies, kz[j + 1].degrees[p], kz[j].degrees[p]), t, 0);
      if (p + 1 <= ops) place(kz[j + 1].delta[p + 1], t, l);
      blocks.push_back(std::move(m));
    }
    for (int q = qmin; q <= cutoff; ++q) {
      const int qi = q - qmin;
      std::vector<int> hh(terms), induced(terms, 0);
      for (int j = 0; j < terms; ++j)
        hh[j] = GradedPiece(nv, kz[j].degrees[p], q).dim() - rank_delta[p][j][qi] - rank_delta[p + 1][j][qi];
      for (int j = 0; j + 1 < terms; ++j) {
        if (hh[j] == 0 || hh[j + 1] == 0) continue;
        induced[j] = rank_in_degree(blocks[j], q) - rank_delta[p][j][qi] - rank_delta[p + 1][j + 1][qi];
      }
      for (int j = 0; j < terms; ++j) {
        const int h = hh[j] - induced[j] - (j > 0 ? induced[j - 1] : 0);
        if (h != 0) out.add_term(2 * (offset + j), 2 * p, q, h);
      }
    }
  }
  return out;
}

struct Prepared {
  std::vector<std::vector<int>> gen_deg;
  std::vector<std::vector<PolyMatrix>> right;
  std::vector<PolyMatrix> diffs;
};

Prepared prepare(const BimoduleComplex& c, bool reduce) {
  Prepared p;
  const int n = c.terms.empty() ? 0 : c.terms.front().ctx().n;
  Poly minus_sum;
  for (int k = 0; k + 1 < n; ++k) minus_sum -= Poly::var(k);
  auto sub = [&](const PolyMatrix& m) { return reduce && n > 0 ? m.substitute(n - 1, minus_sum, n - 1) : m; };
  for (const auto& t : c.terms) {
    p.gen_deg.push_back(t.degrees());
    std::vector<PolyMatrix> r;
    for (int k = 0; k < (reduce ? n - 1 : n); ++k) r.push_back(sub(t.right(k)));
    p.right.push_back(std::move(r));
  }
  for (const auto& d : c.diffs) p.diffs.push_back(sub(d));
  return p;
}

// (1 + h v^2) / (1 - v^2)
TriGradedSeries central_factor(int cutoff) {
  const MultiRational v = MultiRational::var(kVarV), h = MultiRational::var(kVarH);
  return rational_to_series((MultiRational(1) + h * v * v) / (MultiRational(1) - v * v), cutoff);
}

int lowest_degree(const BimoduleComplex& c) {
  int m = 0;
  for (const auto& t : c.terms)
    for (int d : t.degrees()) m = std::min(m, d);
  return m;
}

}  // namespace

TriGradedSeries hochschild(const Bimodule& m, int cutoff) {
  BimoduleComplex c;
  c.terms = {m};
  return hhh_unreduced(c, cutoff);
}

TriGradedSeries hhh_unreduced(const BimoduleComplex& c, int cutoff) {
  if (c.terms.empty()) return TriGradedSeries(cutoff);
  const int n = c.terms.front().ctx().n;
  Prepared p = prepare(c, false);
  return hhh_core(p.gen_deg, p.right, p.diffs, c.offset, n, n, cutoff);
}

TriGradedSeries hhh(const BimoduleComplex& c, int cutoff) {
  if (c.terms.empty()) return TriGradedSeries(cutoff);
  const int n = c.terms.front().ctx().n;
  if (n == 0) return hhh_unreduced(c, cutoff);
  Prepared p = prepare(c, true);
  TriGradedSeries reduced = hhh_core(p.gen_deg, p.right, p.diffs, c.offset, n - 1, n - 1, cutoff);
  // The product is exact up to min(cutoff, factor cutoff + lowest degree).
  TriGradedSeries full = reduced * central_factor(cutoff - lowest_degree(c));
  return full.truncated(cutoff);
}

KRResult kr(const BraidWord& b, int cutoff) {
  validate(b);
  KRResult r;
  r.braid = b;
  r.cutoff = cutoff;
  r.writhe = exponent_sum(b);
  r.strands = b.strands;
  const int e = r.writhe, n = r.strands;
  TriGradedSeries raw = hhh(rouquier_complex(b), cutoff - e);
  r.series = raw.shifted(e - n, e - n, e);
  return r;
}

TruncatedVSeries kr_jones_specialization(const TriGradedSeries& s) {
  int min_h2 = 0;
  bool first = true;
  for (const auto& [k, part] : s.parts()) {
    min_h2 = first ? k.second : std::min(min_h2, k.second);
    first = false;
  }
  const int cut = s.cutoff() + min_h2;
  TruncatedVSeries out(cut);
  for (const auto& [k, part] : s.parts()) {
    const auto [t2, h2] = k;
    if ((t2 - h2) % 2 != 0) throw std::invalid_argument("kr_jones_specialization: t and h exponents differ by a half");
    const int sign = ((t2 - h2) / 2) % 2 ? -1 : 1;
    for (int d = part.min_degree(); d <= part.cutoff(); ++d) {
      const Rational c = part.coeff(d);
      if (c != 0 && d + h2 <= cut) out.add_to(d + h2, sign * c);
    }
  }
  return out;
}

TriGradedSeries euler_characteristic(const TriGradedSeries& s) {
  TriGradedSeries out(s.cutoff());
  for (const auto& [k, part] : s.parts()) {
    if (k.first % 2 != 0) throw std::invalid_argument("euler_characteristic: half-integral t exponent");
    TruncatedVSeries p = part;
    if ((k.first / 2) % 2 != 0) p *= Rational(-1);
    out.add(0, k.second, p);
  }
  return out;
}

}  // namespace linkhom
