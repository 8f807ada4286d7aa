#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linkhom/rational_function.hpp"

namespace linkhom {

// Sparse column vector over Q(v), sorted by index.
using QVec = std::vector<std::pair<int, MultiRational>>;

QVec qaxpy(const QVec& a, const MultiRational& c, const QVec& b);

// Matrix over the field of rational functions in v, stored by sparse columns.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols);
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(cols_.size()); }
  MultiRational at(int r, int c) const;
  void set(int r, int c, const MultiRational& x);
  void add_to(int r, int c, const MultiRational& x);
  const QVec& column(int c) const { return cols_[c]; }
  void set_column(int c, QVec v) { cols_[c] = std::move(v); }

  QVec apply(const QVec& x) const;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const MultiRational& c, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b);
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  bool is_zero() const;
  // Returns true and sets `scalar` when the matrix is scalar * identity.
  bool is_scalar(MultiRational* scalar) const;
  QMatrix inverse() const;  // throws when singular
  int rank() const;

  std::string to_string() const;

 private:
  int rows_ = 0;
  std::vector<QVec> cols_;
};

QMatrix kron(const QMatrix& a, const QMatrix& b);

}  // namespace linkhom
