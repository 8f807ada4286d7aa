#include "linkhom/braid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace linkhom {

void validate(const BraidWord& b) {
  if (b.strands < 1) throw BraidParseError("strand count must be at least 1");
  for (const auto& l : b.letters) {
    if (l.sign != 1 && l.sign != -1) throw BraidParseError("letter sign must be +1 or -1");
    if (l.index < 1 || l.index >= b.strands)
      throw BraidParseError("generator index " + std::to_string(l.index) + " out of range for " +
                            std::to_string(b.strands) + " strands");
  }
}

namespace {
long parse_int(const std::string& tok) {
  size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw BraidParseError("malformed integer '" + tok + "'");
  }
  if (used != tok.size()) throw BraidParseError("malformed integer '" + tok + "'");
  return value;
}
}  // namespace

BraidWord parse_braid(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw BraidParseError("expected 'n: letters'");
  std::istringstream head(text.substr(0, colon));
  std::string ntok, extra;
  if (!(head >> ntok) || (head >> extra)) throw BraidParseError("missing strand count");
  long n = parse_int(ntok);
  if (n < 1 || n > 64) throw BraidParseError("strand count must be between 1 and 64");
  BraidWord b;
  b.strands = static_cast<int>(n);
  std::istringstream body(text.substr(colon + 1));
  std::string tok;
  while (body >> tok) {
    long x = parse_int(tok);
    if (x == 0) throw BraidParseError("letter 0 is not a generator");
    if (std::labs(x) >= n) throw BraidParseError("generator index " + tok + " out of range");
    b.letters.push_back({static_cast<int>(std::labs(x)), x > 0 ? 1 : -1});
  }
  return b;
}

std::string to_string(const BraidWord& b) {
  std::string s = std::to_string(b.strands) + ":";
  for (const auto& l : b.letters) s += " " + std::to_string(l.sign * l.index);
  return s;
}

int exponent_sum(const BraidWord& b) {
  int e = 0;
  for (const auto& l : b.letters) e += l.sign;
  return e;
}

int positive_crossings(const BraidWord& b) {
  return static_cast<int>(std::count_if(b.letters.begin(), b.letters.end(), [](const Letter& l) { return l.sign > 0; }));
}

int negative_crossings(const BraidWord& b) { return static_cast<int>(b.letters.size()) - positive_crossings(b); }

BraidWord mirror(const BraidWord& b) {
  BraidWord m = b;
  for (auto& l : m.letters) l.sign = -l.sign;
  return m;
}

std::vector<int> strand_components(const BraidWord& b) {
  // perm[j] = bottom position reached after following strand j to the top.
  std::vector<int> perm(b.strands);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> where(perm);  // where[j]: current position of strand starting at j
  for (const auto& l : b.letters) {
    for (int& w : where) {
      if (w == l.index - 1)
        w = l.index;
      else if (w == l.index)
        w = l.index - 1;
    }
  }
  std::vector<int> comp(b.strands, -1);
  int next = 0;
  for (int j = 0; j < b.strands; ++j) {
    if (comp[j] >= 0) continue;
    for (int x = j; comp[x] < 0; x = where[x]) comp[x] = next;
    ++next;
  }
  return comp;
}

int component_count(const BraidWord& b) {
  auto c = strand_components(b);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

std::vector<BraidWord> enumerate_moves(const BraidWord& b) {
  std::vector<BraidWord> out;
  const auto& w = b.letters;
  const size_t len = w.size();
  auto with = [&](std::vector<Letter> letters, int strands) {
    BraidWord r{strands, std::move(letters)};
    out.push_back(std::move(r));
  };

  for (size_t p = 0; p + 1 < len; ++p) {
    const Letter x = w[p], y = w[p + 1];
    if (std::abs(x.index - y.index) >= 2) {
      auto l = w;
      std::swap(l[p], l[p + 1]);
      with(std::move(l), b.strands);
    }
    if (x.index == y.index && x.sign == -y.sign) {
      auto l = w;
      l.erase(l.begin() + p, l.begin() + p + 2);
      with(std::move(l), b.strands);
    }
  }
  for (size_t p = 0; p + 2 < len; ++p) {
    const Letter x = w[p], y = w[p + 1], z = w[p + 2];
    if (x == z && std::abs(x.index - y.index) == 1 && x.sign == y.sign) {
      auto l = w;
      l[p] = l[p + 2] = y;
      l[p + 1] = x;
      with(std::move(l), b.strands);
    }
  }
  if (len >= 2) {
    auto l = w;
    std::rotate(l.begin(), l.begin() + 1, l.end());
    with(l, b.strands);
    l = w;
    std::rotate(l.begin(), l.end() - 1, l.end());
    with(std::move(l), b.strands);
  }
  for (int s : {1, -1}) {
    auto l = w;
    l.push_back({b.strands, s});
    with(std::move(l), b.strands + 1);
  }
  // Destabilization: the top generator occurs exactly once, as the last letter.
  if (b.strands >= 2 && len >= 1 && w.back().index == b.strands - 1 &&
      std::count_if(w.begin(), w.end(), [&](const Letter& l) { return l.index == b.strands - 1; }) == 1) {
    auto l = w;
    l.pop_back();
    with(std::move(l), b.strands - 1);
  }

  std::set<std::string> seen{to_string(b)};
  std::vector<BraidWord> unique;
  for (auto& m : out)
    if (seen.insert(to_string(m)).second) unique.push_back(std::move(m));
  return unique;
}

ClosureDiagram::ClosureDiagram(BraidWord b) : braid_(std::move(b)) {
  validate(braid_);
  if (crossings() > 62) throw std::invalid_argument("too many crossings for a state bitmask");
}

int ClosureDiagram::point(int level, int pos) const {
  const int levels = std::max(1, crossings());
  return (level % levels) * braid_.strands + pos;
}

namespace {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};
}  // namespace

std::vector<int> ClosureDiagram::circle_labels(std::uint64_t state, int* circles) const {
  const int n = braid_.strands;
  UnionFind uf(point_count());
  const auto& w = braid_.letters;
  for (int l = 0; l < crossings(); ++l) {
    const int i = w[l].index - 1;
    const bool cupcap = (state >> l) & 1u;
    for (int j = 0; j < n; ++j) {
      if (j == i || j == i + 1) continue;
      uf.unite(point(l, j), point(l + 1, j));
    }
    if (cupcap) {
      uf.unite(point(l, i), point(l, i + 1));
      uf.unite(point(l + 1, i), point(l + 1, i + 1));
    } else {
      uf.unite(point(l, i), point(l + 1, i));
      uf.unite(point(l, i + 1), point(l + 1, i + 1));
    }
  }
  std::vector<int> label(point_count(), -1), root_id(point_count(), -1);
  int next = 0;
  for (int p = 0; p < point_count(); ++p) {
    int r = uf.find(p);
    if (root_id[r] < 0) root_id[r] = next++;
    label[p] = root_id[r];
  }
  if (circles) *circles = next;
  return label;
}

int smoothing_circles(const ClosureDiagram& d, std::uint64_t state) {
  int c = 0;
  d.circle_labels(state, &c);
  return c;
}

int smoothing_circles(const ClosureDiagram& d, const std::vector<int>& bits) {
  if (static_cast<int>(bits.size()) != d.crossings()) throw std::invalid_argument("state length mismatch");
  std::uint64_t s = 0;
  for (size_t c = 0; c < bits.size(); ++c)
    if (bits[c]) s |= std::uint64_t{1} << c;
  return smoothing_circles(d, s);
}

}  // namespace linkhom
