#pragma once

#include <unordered_map>
#include <vector>

#include "linkhom/linalg.hpp"
#include "linkhom/poly.hpp"

namespace linkhom {

// Matrix over Q[x_1..x_n] describing a degree-zero map between graded free
// modules: column c is the image of a generator of degree col_deg[c] and
// entry (r, c) is homogeneous of degree col_deg[c] - row_deg[r], counted
// with deg x_i = 2.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int nvars, std::vector<int> row_deg, std::vector<int> col_deg);

  int nvars() const { return nvars_; }
  int rows() const { return static_cast<int>(row_deg_.size()); }
  int cols() const { return static_cast<int>(col_deg_.size()); }
  const std::vector<int>& row_deg() const { return row_deg_; }
  const std::vector<int>& col_deg() const { return col_deg_; }

  const Poly& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols() + c]; }
  Poly& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols() + c]; }

  bool is_zero() const;
  // Every entry homogeneous of the declared degree.
  bool graded_consistent() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  PolyMatrix substitute(int var, const Poly& value, int new_nvars) const;
  // Same entries with new degree labels.
  PolyMatrix regraded(std::vector<int> row_deg, std::vector<int> col_deg) const;

 private:
  int nvars_ = 0;
  std::vector<int> row_deg_, col_deg_;
  std::vector<Poly> entries_;
};

// Monomials of a fixed polynomial degree in nvars variables.
const std::vector<Mono>& monomials_of_degree(int nvars, int degree);

struct MonomialTable {
  std::vector<Mono> list;
  std::unordered_map<Mono, int> index;
};
const MonomialTable& monomial_table(int nvars, int degree);

// Basis of the v-degree q piece of a graded free module: pairs
// (generator, monomial) with 2*deg(monomial) + generator degree = q.
class GradedPiece {
 public:
  GradedPiece(int nvars, const std::vector<int>& gen_deg, int q);
  int dim() const { return dim_; }
  // -1 when the pair is not in this piece.
  int index(int gen, Mono m) const;
  int gen_offset(int gen) const { return offset_[gen]; }
  const std::vector<Mono>* gen_monomials(int gen) const { return tables_[gen] ? &tables_[gen]->list : nullptr; }

 private:
  std::vector<int> offset_;
  std::vector<const MonomialTable*> tables_;
  int dim_ = 0;
};

// The restriction of M to the v-degree q pieces of its domain and codomain.
SparseMatrixQ restrict_to_degree(const PolyMatrix& m, int q);
// rank(restrict_to_degree(m, q)), using machine integers when possible.
int rank_in_degree(const PolyMatrix& m, int q);

struct PieceRank {
  int rank = 0;
  std::vector<SparseVec> kernel;  // in domain piece coordinates
  std::vector<SparseVec> image;   // echelon basis in codomain piece coordinates
};
PieceRank graded_piece_rank(const PolyMatrix& m, int q);

}  // namespace linkhom
