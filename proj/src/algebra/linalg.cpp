#include "linkhom/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>

namespace linkhom {

SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Rational s = a[i].second + c * b[j].second;
      if (s != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec RowEchelon::reduce(SparseVec v) const {
  size_t pos = 0;
  while (pos < v.size()) {
    auto it = pivots_.find(v[pos].first);
    if (it == pivots_.end()) {
      ++pos;
      continue;
    }
    Rational c = -v[pos].second;
    v = axpy(v, c, it->second);
    // Entries before pos are untouched because pivot rows start at their key.
  }
  return v;
}

bool RowEchelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  // Make the vector's first entry the pivot.
  Rational inv = 1 / v.front().second;
  for (auto& e : v) e.second *= inv;
  pivots_.emplace(v.front().first, std::move(v));
  return true;
}

std::vector<SparseVec> RowEchelon::basis() const {
  std::vector<SparseVec> out;
  out.reserve(pivots_.size());
  for (const auto& [k, row] : pivots_) out.push_back(row);
  return out;
}

SparseVec SparseMatrixQ::apply(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [j, c] : x) out = axpy(out, c, cols[j]);
  return out;
}

namespace {

struct Overflow {};

// Entries are int64 with checked arithmetic; rows are combined fraction-free
// and divided by their content so entries stay small.
struct IntField {
  using Value = std::int64_t;
  using Vec = std::vector<std::pair<int, Value>>;
  static bool is_unit(Value x) { return x == 1 || x == -1; }
  static Value mul(Value a, Value b) {
    Value r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Value sub(Value a, Value b) {
    Value r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  // pv * row - rv * prow, then divided by the gcd of its entries.
  static Vec eliminate(const Vec& row, Value rv, const Vec& prow, Value pv) {
    Vec out;
    out.reserve(row.size() + prow.size());
    size_t i = 0, j = 0;
    std::int64_t g = 0;
    while (i < row.size() || j < prow.size()) {
      Value x;
      int c;
      if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
        c = row[i].first;
        x = mul(pv, row[i++].second);
      } else if (i == row.size() || prow[j].first < row[i].first) {
        c = prow[j].first;
        x = -mul(rv, prow[j++].second);
      } else {
        c = row[i].first;
        x = sub(mul(pv, row[i++].second), mul(rv, prow[j++].second));
      }
      if (x != 0) {
        out.emplace_back(c, x);
        if (g != 1) g = std::gcd(g, x);
      }
    }
    if (g > 1)
      for (auto& e : out) e.second /= g;
    return out;
  }
};

struct RationalField {
  using Value = Rational;
  using Vec = SparseVec;
  static bool is_unit(const Value& x) { return abs(x) == 1; }
  static Vec eliminate(const Vec& row, const Value& rv, const Vec& prow, const Value& pv) {
    return axpy(row, -rv / pv, prow);
  }
};

template <class F>
int sparse_rank(std::vector<typename F::Vec> rows, int ncols) {
  using Vec = typename F::Vec;
  using Value = typename F::Value;
  const int nrows = static_cast<int>(rows.size());
  std::vector<std::vector<int>> col_rows(ncols);  // may hold stale row ids
  std::vector<int> count(ncols, 0);
  for (int i = 0; i < nrows; ++i)
    for (const auto& e : rows[i]) {
      col_rows[e.first].push_back(i);
      ++count[e.first];
    }
  using Entry = std::pair<int, int>;  // (count, column)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (int j = 0; j < ncols; ++j)
    if (count[j] > 0) queue.emplace(count[j], j);
  std::vector<char> col_done(ncols, 0), row_done(nrows, 0);

  auto find = [](const Vec& row, int col) -> const Value* {
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
    return it != row.end() && it->first == col ? &it->second : nullptr;
  };

  int r = 0;
  std::vector<int> holders;
  while (!queue.empty()) {
    const auto [cnt, col] = queue.top();
    queue.pop();
    if (col_done[col] || cnt != count[col]) continue;
    col_done[col] = 1;
    if (cnt == 0) continue;
    holders.clear();
    for (int i : col_rows[col])
      if (!row_done[i] && find(rows[i], col)) holders.push_back(i);
    std::sort(holders.begin(), holders.end());
    holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
    col_rows[col].clear();
    col_rows[col].shrink_to_fit();
    int pivot = -1;
    bool punit = false;
    for (int i : holders) {
      const bool unit = F::is_unit(*find(rows[i], col));
      if (pivot < 0 || rows[i].size() < rows[pivot].size() || (rows[i].size() == rows[pivot].size() && unit && !punit)) {
        pivot = i;
        punit = unit;
      }
    }
    ++r;
    row_done[pivot] = 1;
    const Vec& prow = rows[pivot];
    const Value pv = *find(prow, col);
    for (int i : holders) {
      if (i == pivot) continue;
      const Value rv = *find(rows[i], col);
      Vec updated = F::eliminate(rows[i], rv, prow, pv);
      size_t a = 0, b = 0;
      const Vec& before = rows[i];
      while (a < before.size() || b < updated.size()) {
        if (b == updated.size() || (a < before.size() && before[a].first < updated[b].first)) {
          const int c = before[a++].first;
          if (!col_done[c]) queue.emplace(--count[c], c);
        } else if (a == before.size() || updated[b].first < before[a].first) {
          const int c = updated[b++].first;
          if (!col_done[c]) {
            col_rows[c].push_back(i);
            queue.emplace(++count[c], c);
          }
        } else {
          ++a;
          ++b;
        }
      }
      rows[i] = std::move(updated);
    }
    for (const auto& e : prow)
      if (!col_done[e.first]) queue.emplace(--count[e.first], e.first);
    rows[pivot] = Vec();
  }
  return r;
}

}  // namespace

std::optional<int> rank_int64(std::vector<IntSparseVec> rows, int ncols) {
  try {
    return sparse_rank<IntField>(std::move(rows), ncols);
  } catch (const Overflow&) {
    return std::nullopt;
  }
}

int rank(const SparseMatrixQ& m) {
  // Elimination picks, at every step, a column with the fewest remaining
  // entries and within it the shortest row, unit pivots first. Singleton rows
  // and columns cancel without arithmetic. Small integer matrices (after
  // clearing denominators column by column) run on int64 and fall back to
  // exact rationals on overflow.
  std::vector<IntField::Vec> int_rows(m.rows);
  bool fits = true;
  for (int j = 0; j < m.num_cols() && fits; ++j) {
    mpz_class l = 1;
    for (const auto& [i, c] : m.cols[j]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [i, c] : m.cols[j]) {
      mpz_class v = c.get_num() * (l / c.get_den());
      if (!v.fits_slong_p()) {
        fits = false;
        break;
      }
      int_rows[i].emplace_back(j, v.get_si());
    }
  }
  if (fits)
    if (auto r = rank_int64(std::move(int_rows), m.num_cols())) return *r;
  std::vector<SparseVec> rows(m.rows);
  for (int j = 0; j < m.num_cols(); ++j)
    for (const auto& [i, c] : m.cols[j]) rows[i].emplace_back(j, c);
  return sparse_rank<RationalField>(std::move(rows), m.num_cols());
}

std::vector<SparseVec> nullspace(const SparseMatrixQ& m) {
  RowEchelon e;
  std::vector<SparseVec> kernel;
  for (int j = 0; j < m.num_cols(); ++j) {
    SparseVec aug = m.cols[j];
    aug.emplace_back(m.rows + j, 1);
    SparseVec r = e.reduce(std::move(aug));
    if (r.front().first >= m.rows) {
      SparseVec k;
      k.reserve(r.size());
      for (auto& [i, c] : r) k.emplace_back(i - m.rows, std::move(c));
      kernel.push_back(std::move(k));
    } else {
      e.insert(std::move(r));
    }
  }
  return kernel;
}

}  // namespace linkhom
