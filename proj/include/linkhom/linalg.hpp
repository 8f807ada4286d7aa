#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "linkhom/laurent.hpp"

namespace linkhom {

// Sparse rational vector, entries sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

// a + c * b
SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b);

// Incrementally built echelon basis of a subspace of Q^N.
class RowEchelon {
 public:
  // Reduce v against the stored pivots (only leading positions are cleared).
  SparseVec reduce(SparseVec v) const;
  // Adds v to the span; returns true when the rank grows.
  bool insert(SparseVec v);
  int rank() const { return static_cast<int>(pivots_.size()); }
  std::vector<SparseVec> basis() const;

 private:
  std::map<int, SparseVec> pivots_;  // leading index -> row with leading entry 1
};

// Column-major sparse rational matrix.
struct SparseMatrixQ {
  int rows = 0;
  std::vector<SparseVec> cols;

  int num_cols() const { return static_cast<int>(cols.size()); }
  SparseVec apply(const SparseVec& x) const;
};

int rank(const SparseMatrixQ& m);

// Integer matrix given by its rows (entries sorted by column). Returns
// nothing when an intermediate value leaves the int64 range.
using IntSparseVec = std::vector<std::pair<int, std::int64_t>>;
std::optional<int> rank_int64(std::vector<IntSparseVec> rows, int ncols);
// Basis of the kernel, as coordinate vectors on the columns.
std::vector<SparseVec> nullspace(const SparseMatrixQ& m);

}  // namespace linkhom
