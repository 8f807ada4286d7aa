#include "linkhom/qmatrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace linkhom {

QVec qaxpy(const QVec& a, const MultiRational& c, const QVec& b) {
  QVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      MultiRational s = a[i].second + c * b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.cols_[i].emplace_back(i, MultiRational(1));
  return m;
}

MultiRational QMatrix::at(int r, int c) const {
  const QVec& col = cols_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, int x) { return e.first < x; });
  if (it != col.end() && it->first == r) return it->second;
  return MultiRational();
}

void QMatrix::set(int r, int c, const MultiRational& x) {
  QVec& col = cols_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, int y) { return e.first < y; });
  if (it != col.end() && it->first == r) {
    if (x.is_zero())
      col.erase(it);
    else
      it->second = x;
  } else if (!x.is_zero()) {
    col.insert(it, {r, x});
  }
}

void QMatrix::add_to(int r, int c, const MultiRational& x) {
  if (x.is_zero()) return;
  set(r, c, at(r, c) + x);
}

QVec QMatrix::apply(const QVec& x) const {
  std::map<int, MultiRational> acc;
  for (const auto& [j, c] : x)
    for (const auto& [i, a] : cols_[j]) acc[i] += c * a;
  QVec out;
  for (auto& [i, s] : acc)
    if (!s.is_zero()) out.emplace_back(i, std::move(s));
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("QMatrix: dimension mismatch");
  QMatrix r(a.rows(), b.cols());
  for (int j = 0; j < b.cols(); ++j) r.cols_[j] = a.apply(b.cols_[j]);
  return r;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("QMatrix: dimension mismatch");
  QMatrix r(a.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) r.cols_[j] = qaxpy(a.cols_[j], MultiRational(1), b.cols_[j]);
  return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("QMatrix: dimension mismatch");
  QMatrix r(a.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) r.cols_[j] = qaxpy(a.cols_[j], MultiRational(-1), b.cols_[j]);
  return r;
}

QMatrix operator*(const MultiRational& c, const QMatrix& a) {
  QMatrix r(a.rows(), a.cols());
  if (c.is_zero()) return r;
  for (int j = 0; j < a.cols(); ++j) {
    r.cols_[j].reserve(a.cols_[j].size());
    for (const auto& [i, x] : a.cols_[j]) r.cols_[j].emplace_back(i, c * x);
  }
  return r;
}

bool operator==(const QMatrix& a, const QMatrix& b) { return a.rows_ == b.rows_ && a.cols_ == b.cols_; }

bool QMatrix::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

bool QMatrix::is_scalar(MultiRational* scalar) const {
  if (rows_ != cols()) return false;
  MultiRational s;
  for (int j = 0; j < cols(); ++j) {
    const QVec& c = cols_[j];
    if (c.size() > 1) return false;
    MultiRational d = c.empty() ? MultiRational() : c[0].second;
    if (!c.empty() && c[0].first != j) return false;
    if (j == 0)
      s = d;
    else if (d != s)
      return false;
  }
  if (scalar) *scalar = s;
  return true;
}

namespace {
// Dense row-major working copy for elimination.
std::vector<std::vector<MultiRational>> dense(const QMatrix& m) {
  std::vector<std::vector<MultiRational>> d(m.rows(), std::vector<MultiRational>(m.cols()));
  for (int j = 0; j < m.cols(); ++j)
    for (const auto& [i, x] : m.column(j)) d[i][j] = x;
  return d;
}
}  // namespace

QMatrix QMatrix::inverse() const {
  const int n = rows_;
  if (n != cols()) throw std::invalid_argument("QMatrix::inverse: not square");
  auto a = dense(*this);
  std::vector<std::vector<MultiRational>> inv(n, std::vector<MultiRational>(n));
  for (int i = 0; i < n; ++i) inv[i][i] = MultiRational(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw std::domain_error("QMatrix::inverse: singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    MultiRational s = a[c][c].inverse();
    for (int j = 0; j < n; ++j) {
      if (!a[c][j].is_zero()) a[c][j] *= s;
      if (!inv[c][j].is_zero()) inv[c][j] *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      MultiRational f = a[r][c];
      for (int j = 0; j < n; ++j) {
        if (!a[c][j].is_zero()) a[r][j] -= f * a[c][j];
        if (!inv[c][j].is_zero()) inv[r][j] -= f * inv[c][j];
      }
    }
  }
  QMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!inv[i][j].is_zero()) out.cols_[j].emplace_back(i, inv[i][j]);
  return out;
}

int QMatrix::rank() const {
  auto a = dense(*this);
  const int n = rows_, m = cols();
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int p = r;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    MultiRational s = a[r][c].inverse();
    for (int i = r + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      MultiRational f = a[i][c] * s;
      for (int j = c; j < m; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

std::string QMatrix::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << "[";
    for (int j = 0; j < cols(); ++j) out << (j ? ", " : "") << at(i, j).to_string();
    out << "]\n";
  }
  return out.str();
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ja = 0; ja < a.cols(); ++ja)
    for (int jb = 0; jb < b.cols(); ++jb) {
      QVec col;
      for (const auto& [ia, x] : a.column(ja))
        for (const auto& [ib, y] : b.column(jb)) col.emplace_back(ia * b.rows() + ib, x * y);
      r.set_column(ja * b.cols() + jb, std::move(col));
    }
  return r;
}

}  // namespace linkhom
