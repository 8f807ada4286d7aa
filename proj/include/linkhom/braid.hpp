#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace linkhom {

struct Letter {
  int index;  // 1-based generator index
  int sign;   // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct BraidWord {
  int strands = 1;
  std::vector<Letter> letters;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

class BraidParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Grammar "n: w" with w a whitespace separated list of nonzero integers.
BraidWord parse_braid(const std::string& text);
std::string to_string(const BraidWord& b);
void validate(const BraidWord& b);

int exponent_sum(const BraidWord& b);
int positive_crossings(const BraidWord& b);
int negative_crossings(const BraidWord& b);
BraidWord mirror(const BraidWord& b);

// Closure components: component id for every strand position at the bottom of
// the braid, numbered in order of first appearance.
std::vector<int> strand_components(const BraidWord& b);
int component_count(const BraidWord& b);

// Words related to b by a single braid relation, free cancellation, cyclic
// rotation, or (de)stabilization. Duplicates and b itself are removed.
std::vector<BraidWord> enumerate_moves(const BraidWord& b);

// Planar diagram of the closure. Level l (0 <= l < L) sits just below letter l,
// and point (l, j) is strand position j at that level. Level L is identified
// with level 0 by the closure.
class ClosureDiagram {
 public:
  explicit ClosureDiagram(BraidWord b);

  const BraidWord& braid() const { return braid_; }
  int crossings() const { return static_cast<int>(braid_.letters.size()); }
  int point_count() const { return std::max(1, crossings()) * braid_.strands; }
  int point(int level, int pos) const;

  // Bit c of `state` is the smoothing of letter c: 0 keeps the strands
  // vertical, 1 joins them by a cap below and a cup above.
  // Returns the circle id of every point, ids numbered 0.. in order of the
  // smallest point they contain.
  std::vector<int> circle_labels(std::uint64_t state, int* circles = nullptr) const;

 private:
  BraidWord braid_;
};

int smoothing_circles(const ClosureDiagram& d, std::uint64_t state);
int smoothing_circles(const ClosureDiagram& d, const std::vector<int>& bits);

}  // namespace linkhom
