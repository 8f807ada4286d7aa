#include "linkhom/poly_matrix.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace linkhom {

PolyMatrix::PolyMatrix(int nvars, std::vector<int> row_deg, std::vector<int> col_deg)
    : nvars_(nvars), row_deg_(std::move(row_deg)), col_deg_(std::move(col_deg)) {
  entries_.resize(row_deg_.size() * col_deg_.size());
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::graded_consistent() const {
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c) {
      const Poly& p = at(r, c);
      int want = col_deg_[c] - row_deg_[r];
      for (const auto& t : p.terms())
        if (2 * mono_degree(t.first) != want) return false;
    }
  return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  PolyMatrix r(a.nvars_, a.row_deg_, b.col_deg_);
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Poly& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Poly& y = b.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  PolyMatrix r = a;
  for (size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  PolyMatrix r = a;
  for (size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.entries_ == b.entries_;
}

PolyMatrix PolyMatrix::substitute(int var, const Poly& value, int new_nvars) const {
  PolyMatrix r(new_nvars, row_deg_, col_deg_);
  for (size_t i = 0; i < entries_.size(); ++i)
    if (!entries_[i].is_zero()) r.entries_[i] = entries_[i].substitute(var, value);
  return r;
}

PolyMatrix PolyMatrix::regraded(std::vector<int> row_deg, std::vector<int> col_deg) const {
  if (row_deg.size() != row_deg_.size() || col_deg.size() != col_deg_.size())
    throw std::invalid_argument("PolyMatrix::regraded: size mismatch");
  PolyMatrix r = *this;
  r.row_deg_ = std::move(row_deg);
  r.col_deg_ = std::move(col_deg);
  return r;
}

namespace {

void enumerate(int nvars, int var, int remaining, Mono acc, std::vector<Mono>& out) {
  if (var == nvars - 1) {
    out.push_back(acc | mono_var(var, remaining));
    return;
  }
  for (int e = remaining; e >= 0; --e) enumerate(nvars, var + 1, remaining - e, acc | mono_var(var, e), out);
}

}  // namespace

const MonomialTable& monomial_table(int nvars, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, MonomialTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace({nvars, degree});
  if (inserted) {
    if (degree == 0)
      it->second.list.push_back(0);
    else if (nvars > 0)
      enumerate(nvars, 0, degree, 0, it->second.list);
    for (size_t i = 0; i < it->second.list.size(); ++i) it->second.index.emplace(it->second.list[i], static_cast<int>(i));
  }
  return it->second;
}

const std::vector<Mono>& monomials_of_degree(int nvars, int degree) { return monomial_table(nvars, degree).list; }

GradedPiece::GradedPiece(int nvars, const std::vector<int>& gen_deg, int q) {
  offset_.resize(gen_deg.size());
  tables_.resize(gen_deg.size(), nullptr);
  for (size_t g = 0; g < gen_deg.size(); ++g) {
    offset_[g] = dim_;
    int diff = q - gen_deg[g];
    if (diff < 0 || diff % 2 != 0) continue;
    const MonomialTable& t = monomial_table(nvars, diff / 2);
    tables_[g] = &t;
    dim_ += static_cast<int>(t.list.size());
  }
}

int GradedPiece::index(int gen, Mono m) const {
  const MonomialTable* t = tables_[gen];
  if (!t) return -1;
  auto it = t->index.find(m);
  return it == t->index.end() ? -1 : offset_[gen] + it->second;
}

SparseMatrixQ restrict_to_degree(const PolyMatrix& m, int q) {
  GradedPiece dom(m.nvars(), m.col_deg(), q);
  GradedPiece cod(m.nvars(), m.row_deg(), q);
  SparseMatrixQ out;
  out.rows = cod.dim();
  out.cols.resize(dom.dim());
  for (int c = 0; c < m.cols(); ++c) {
    const auto* mons = dom.gen_monomials(c);
    if (!mons) continue;
    for (size_t k = 0; k < mons->size(); ++k) {
      std::map<int, Rational> acc;
      for (int r = 0; r < m.rows(); ++r) {
        const Poly& p = m.at(r, c);
        for (const auto& [pm, pc] : p.terms()) {
          int idx = cod.index(r, mono_mul(pm, (*mons)[k]));
          if (idx < 0) throw std::logic_error("restrict_to_degree: inhomogeneous entry");
          acc[idx] += pc;
        }
      }
      SparseVec col;
      for (auto& [i, x] : acc)
        if (x != 0) col.emplace_back(i, std::move(x));
      out.cols[dom.gen_offset(c) + k] = std::move(col);
    }
  }
  return out;
}

int rank_in_degree(const PolyMatrix& m, int q) {
  GradedPiece dom(m.nvars(), m.col_deg(), q);
  GradedPiece cod(m.nvars(), m.row_deg(), q);
  if (dom.dim() == 0 || cod.dim() == 0) return 0;
  std::vector<IntSparseVec> rows(cod.dim());
  for (int c = 0; c < m.cols(); ++c) {
    const auto* mons = dom.gen_monomials(c);
    if (!mons) continue;
    std::vector<std::pair<int, std::int64_t>> entries;  // (row, coefficient) per term, monomial kept aside
    std::vector<Mono> term_mono;
    for (int r = 0; r < m.rows(); ++r)
      for (const auto& [pm, pc] : m.at(r, c).terms()) {
        if (pc.get_den() != 1 || !pc.get_num().fits_slong_p()) return rank(restrict_to_degree(m, q));
        entries.emplace_back(r, pc.get_num().get_si());
        term_mono.push_back(pm);
      }
    for (size_t k = 0; k < mons->size(); ++k) {
      const int col = dom.gen_offset(c) + static_cast<int>(k);
      for (size_t t = 0; t < entries.size(); ++t) {
        const int idx = cod.index(entries[t].first, mono_mul(term_mono[t], (*mons)[k]));
        if (idx < 0) throw std::logic_error("rank_in_degree: inhomogeneous entry");
        rows[idx].emplace_back(col, entries[t].second);
      }
    }
  }
  if (auto r = rank_int64(std::move(rows), dom.dim())) return *r;
  return rank(restrict_to_degree(m, q));
}

PieceRank graded_piece_rank(const PolyMatrix& m, int q) {
  SparseMatrixQ s = restrict_to_degree(m, q);
  PieceRank out;
  out.kernel = nullspace(s);
  RowEchelon e;
  for (const auto& c : s.cols) e.insert(c);
  out.rank = e.rank();
  out.image = e.basis();
  return out;
}

}  // namespace linkhom
