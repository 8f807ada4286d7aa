#pragma once

#include <vector>

#include "linkhom/qmatrix.hpp"

namespace linkhom {

// Rank k, sign eta and the braiding scalar gamma = eta * v^{-eta}.
struct RepContext {
  int k = 2;
  int eta = -1;
  RepContext(int k_, int eta_);
  MultiRational gamma() const;
  // Eigenvalue -gamma^{-1} of the braiding on exterior squares.
  MultiRational wedge_eigenvalue() const;
};

enum class GenType { E, F, D, Dinv };
struct Generator {
  GenType type;
  int index;  // 1-based
};

// Basis of the d-th exterior power: bitmasks of d-element subsets of
// {1..k} (bit r-1 stands for e_r) in increasing numeric order.
const std::vector<unsigned>& wedge_masks(int k, int d);
int wedge_dim(int k, int d);
int wedge_index(int k, unsigned mask);
// Dimension of the tensor product of the given exterior powers. The tensor
// basis is mixed radix with the first factor most significant.
int space_dim(int k, const std::vector<int>& labels);

// id_{left} (x) op (x) id_{right}
QMatrix place(const QMatrix& op, int left_dim, int right_dim);

// Action of a generator on a single natural factor.
QMatrix generator_action(const RepContext& ctx, Generator g);

// Which of the two coproducts is iterated across tensor factors.
//   kPrinted:  E -> E (x) 1 + K (x) E,  F -> 1 (x) F + F (x) K^{-1}
//   kOpposite: E -> 1 (x) E + E (x) K,  F -> F (x) 1 + K^{-1} (x) F
// with K = D_i D_{i+1}^{-1}; the D_j are group-like in both.
enum class Coproduct { kPrinted, kOpposite };
QMatrix coproduct_action(const RepContext& ctx, Generator g, int factors, Coproduct order = Coproduct::kPrinted);

// H_i (sign +1) or H_i^{-1} (sign -1) on factors i, i+1 of W^{(x) n}.
QMatrix braid_action(const RepContext& ctx, int i, int factors, int sign);

// Embedding of the d-th exterior power into W^{(x) d}.
QMatrix exterior_embedding(const RepContext& ctx, int d);

// Scalars normalizing the merge and split maps.
MultiRational wedge_constant(const RepContext& ctx, int a, int b);
MultiRational shuffle_constant(const RepContext& ctx, int a, int b);
// Merge: wedge^a (x) wedge^b -> wedge^{a+b}. Split: the reverse direction.
QMatrix wedge_map(const RepContext& ctx, int a, int b);
QMatrix shuffle_map(const RepContext& ctx, int a, int b);

// Cup-cap on W (x) W: split after merge.
QMatrix cupcap(const RepContext& ctx);

// Action of a generator on the exterior power, obtained by restricting the
// iterated coproduct on W^{(x) d} to the embedded subspace.
QMatrix restricted_action(const RepContext& ctx, Generator g, int d, Coproduct order);

// Jones-Wenzl idempotent on V^{(x) m} for k = 2, eta = +1.
QMatrix jones_wenzl(int m);

}  // namespace linkhom
