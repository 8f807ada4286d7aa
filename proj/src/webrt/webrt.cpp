#include "linkhom/webrt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>
#include <stdexcept>

namespace linkhom {

namespace {

void apply_slice_labels(std::vector<int>& labels, const Slice& s) {
  const int m = static_cast<int>(labels.size());
  auto fail = [&](const std::string& why) { throw std::invalid_argument("web slice at position " + std::to_string(s.pos + 1) + ": " + why); };
  switch (s.kind) {
    case SliceKind::Merge:
      if (s.pos < 0 || s.pos + 1 >= m) fail("merge needs two strands");
      if (labels[s.pos] != s.a || labels[s.pos + 1] != s.b) fail("merge labels do not match");
      labels[s.pos] = s.a + s.b;
      labels.erase(labels.begin() + s.pos + 1);
      break;
    case SliceKind::Split:
      if (s.pos < 0 || s.pos >= m) fail("split needs a strand");
      if (s.a < 0 || s.b < 0 || labels[s.pos] != s.a + s.b) fail("split labels do not match");
      labels[s.pos] = s.a;
      labels.insert(labels.begin() + s.pos + 1, s.b);
      break;
    case SliceKind::CrossPos:
    case SliceKind::CrossNeg:
      if (s.pos < 0 || s.pos + 1 >= m) fail("crossing needs two strands");
      if (labels[s.pos] != 1 || labels[s.pos + 1] != 1) fail("crossings act on label-1 strands only");
      break;
    case SliceKind::Braiding:
      if (s.pos < 0 || s.pos + 1 >= m) fail("braiding needs two strands");
      if (labels[s.pos] != s.a || labels[s.pos + 1] != s.b) fail("braiding labels do not match");
      std::swap(labels[s.pos], labels[s.pos + 1]);
      break;
  }
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::vector<int> WebWord::codomain() const {
  std::vector<int> labels = domain;
  for (int l : labels)
    if (l < 0) throw std::invalid_argument("web labels must be nonnegative");
  for (const auto& s : slices) apply_slice_labels(labels, s);
  return labels;
}

WebWord& WebWord::then(const WebWord& next) {
  if (codomain() != next.domain) throw std::invalid_argument("web composition: label mismatch");
  slices.insert(slices.end(), next.slices.begin(), next.slices.end());
  return *this;
}

WebWord parse_web(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  WebWord w;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto err = [&](const std::string& why) { throw WebParseError("line " + std::to_string(lineno) + ": " + why); };
    auto read_int = [&](std::istream& is) {
      std::string tok;
      if (!(is >> tok)) err("missing integer");
      size_t used = 0;
      long x = 0;
      try {
        x = std::stol(tok, &used);
      } catch (const std::exception&) {
        err("malformed integer '" + tok + "'");
      }
      if (used != tok.size()) err("malformed integer '" + tok + "'");
      return static_cast<int>(x);
    };
    auto read_pos = [&]() {
      std::string tok;
      if (!(ls >> tok) || tok.size() < 2 || tok[0] != '@') err("expected @position");
      std::istringstream ps(tok.substr(1));
      int p = read_int(ps);
      if (p < 1) err("positions are 1-based");
      return p - 1;
    };
    if (!have_header) {
      if (head != "labels:") err("expected header 'labels:'");
      std::string tok;
      while (ls >> tok) {
        std::istringstream ts(tok);
        int l = read_int(ts);
        if (l < 0) err("labels must be nonnegative");
        w.domain.push_back(l);
      }
      have_header = true;
      continue;
    }
    Slice s{SliceKind::Merge, 0};
    if (head == "merge" || head == "split") {
      s.kind = head == "merge" ? SliceKind::Merge : SliceKind::Split;
      s.a = read_int(ls);
      s.b = read_int(ls);
    } else if (head == "braid+" || head == "braid-") {
      s.kind = SliceKind::Braiding;
      s.sign = head == "braid+" ? 1 : -1;
      s.a = read_int(ls);
      s.b = read_int(ls);
    } else if (head == "x+" || head == "x-") {
      s.kind = head == "x+" ? SliceKind::CrossPos : SliceKind::CrossNeg;
    } else {
      err("unknown slice '" + head + "'");
    }
    s.pos = read_pos();
    std::string extra;
    if (ls >> extra) err("trailing input '" + extra + "'");
    w.slices.push_back(s);
  }
  if (!have_header) throw WebParseError("missing header 'labels:'");
  try {
    w.codomain();
  } catch (const std::invalid_argument& e) {
    throw WebParseError(e.what());
  }
  return w;
}

std::string to_string(const WebWord& w) {
  std::ostringstream out;
  out << "labels:";
  for (int l : w.domain) out << ' ' << l;
  out << '\n';
  for (const auto& s : w.slices) {
    switch (s.kind) {
      case SliceKind::Merge: out << "merge " << s.a << ' ' << s.b; break;
      case SliceKind::Split: out << "split " << s.a << ' ' << s.b; break;
      case SliceKind::CrossPos: out << "x+"; break;
      case SliceKind::CrossNeg: out << "x-"; break;
      case SliceKind::Braiding: out << (s.sign > 0 ? "braid+ " : "braid- ") << s.a << ' ' << s.b; break;
    }
    out << " @" << s.pos + 1 << '\n';
  }
  return out.str();
}

QMatrix crossing_matrix(const RepContext& ctx, int i, int factors, int sign) {
  // A positive crossing is -(-gamma)^k times the inverse braiding; the scalar
  // removes the framing dependence.
  const MultiRational scale = -1 * pow(-1 * ctx.gamma(), sign * ctx.k);
  return scale * braid_action(ctx, i, factors, -sign);
}

namespace {

QMatrix slice_matrix(const Slice& s, const RepContext& ctx) {
  switch (s.kind) {
    case SliceKind::Merge: return wedge_map(ctx, s.a, s.b);
    case SliceKind::Split: return shuffle_map(ctx, s.a, s.b);
    case SliceKind::CrossPos: return crossing_matrix(ctx, 1, 2, 1);
    case SliceKind::CrossNeg: return crossing_matrix(ctx, 1, 2, -1);
    case SliceKind::Braiding: return phi_eval(braiding_web(s.a, s.b, ctx, s.sign), ctx);
  }
  throw std::logic_error("unreachable");
}

int slice_arity(const Slice& s) { return s.kind == SliceKind::Split ? 1 : 2; }

// Memoized slice matrices for one evaluation.
class SliceCache {
 public:
  explicit SliceCache(const RepContext& ctx) : ctx_(ctx) {}
  const QMatrix& get(const Slice& s) {
    auto key = std::make_tuple(static_cast<int>(s.kind), s.a, s.b, s.sign);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, slice_matrix(s, ctx_)).first;
    return it->second;
  }

 private:
  const RepContext& ctx_;
  std::map<std::tuple<int, int, int, int>, QMatrix> cache_;
};

}  // namespace

QVec phi_apply(const WebWord& w, const RepContext& ctx, QVec x) {
  std::vector<int> labels = w.domain;
  for (int l : labels)
    if (l > ctx.k) throw std::invalid_argument("web label exceeds k");
  SliceCache cache(ctx);
  for (const auto& s : w.slices) {
    const int arity = slice_arity(s);
    std::vector<int> right(labels.begin() + std::min<size_t>(labels.size(), s.pos + arity), labels.end());
    std::vector<int> mid(labels.begin() + std::min<size_t>(labels.size(), s.pos),
                         labels.begin() + std::min<size_t>(labels.size(), s.pos + arity));
    apply_slice_labels(labels, s);
    if (s.kind == SliceKind::Merge && s.a + s.b > ctx.k) return {};
    const QMatrix& op = cache.get(s);
    const int rd = space_dim(ctx.k, right), md = space_dim(ctx.k, mid);
    std::map<int, MultiRational> acc;
    for (const auto& [idx, c] : x) {
      const int l = idx / (md * rd), m = (idx / rd) % md, r = idx % rd;
      for (const auto& [i, y] : op.column(m)) acc[(l * op.rows() + i) * rd + r] += c * y;
    }
    x.clear();
    for (auto& [i, c] : acc)
      if (!c.is_zero()) x.emplace_back(i, std::move(c));
  }
  return x;
}

QMatrix phi_eval(const WebWord& w, const RepContext& ctx) {
  std::vector<int> labels = w.domain;
  for (int l : labels)
    if (l > ctx.k) throw std::invalid_argument("web label exceeds k");
  QMatrix m = QMatrix::identity(space_dim(ctx.k, labels));
  SliceCache cache(ctx);
  for (const auto& s : w.slices) {
    const int arity = slice_arity(s);
    std::vector<int> left(labels.begin(), labels.begin() + std::min<int>(s.pos, labels.size()));
    const size_t right_begin = std::min<size_t>(labels.size(), s.pos + arity);
    std::vector<int> right(labels.begin() + right_begin, labels.end());
    apply_slice_labels(labels, s);
    if (s.kind == SliceKind::Merge && s.a + s.b > ctx.k) {
      // Factors through a label above k, hence zero.
      return QMatrix(space_dim(ctx.k, w.codomain()), m.cols());
    }
    m = place(cache.get(s), space_dim(ctx.k, left), space_dim(ctx.k, right)) * m;
  }
  return m;
}

QMatrix phi_eval(const WebCombination& c, const RepContext& ctx) {
  if (c.empty()) throw std::invalid_argument("empty web combination");
  QMatrix total = c[0].first * phi_eval(c[0].second, ctx);
  for (size_t i = 1; i < c.size(); ++i) total = total + c[i].first * phi_eval(c[i].second, ctx);
  return total;
}

LaurentPoly closed_web_value(const WebWord& w, const RepContext& ctx) {
  for (int l : w.domain)
    if (l != ctx.k) throw std::invalid_argument("closed web: domain labels must equal k");
  for (int l : w.codomain())
    if (l != ctx.k) throw std::invalid_argument("closed web: codomain labels must equal k");
  QVec img = phi_apply(w, ctx, {{0, MultiRational(1)}});
  if (img.empty()) return LaurentPoly();
  if (img.size() != 1 || img[0].first != 0) throw std::invalid_argument("closed web: image is not a scalar");
  return img[0].second.to_laurent();
}

namespace {

WebWord mirror_web(const WebWord& w) {
  WebWord m;
  m.domain.assign(w.domain.rbegin(), w.domain.rend());
  std::vector<int> labels = w.domain;
  for (const auto& s : w.slices) {
    const int size = static_cast<int>(labels.size());
    Slice t = s;
    std::swap(t.a, t.b);
    t.pos = s.kind == SliceKind::Split ? size - 1 - s.pos : size - 2 - s.pos;
    if (s.kind == SliceKind::CrossPos) t.kind = SliceKind::CrossNeg;
    if (s.kind == SliceKind::CrossNeg) t.kind = SliceKind::CrossPos;
    if (s.kind == SliceKind::Braiding) t.sign = -s.sign;
    m.slices.push_back(t);
    apply_slice_labels(labels, s);
  }
  return m;
}

}  // namespace

WebWord ladder_web(int a, int r, int b) {
  if (a < 0 || b < 0 || r < 0 || r > std::min(a, b)) throw std::invalid_argument("ladder_web: bad labels");
  if (a > b) return mirror_web(ladder_web(b, r, a));
  const int y = b - a + r;
  WebWord w;
  w.domain = {a, b};
  w.slices = {
      {SliceKind::Split, 0, a - r, r},
      {SliceKind::Merge, 1, r, b},
      {SliceKind::Split, 1, y, a},
      {SliceKind::Merge, 0, a - r, y},
  };
  return w;
}

WebCombination braiding_web(int a, int b, const RepContext& ctx, int sign) {
  const int lo = std::min(a, b);
  const MultiRational g = sign > 0 ? ctx.gamma() : ctx.gamma().inverse();
  WebCombination c;
  for (int r = 0; r <= lo; ++r) c.emplace_back(pow(g, lo - r), ladder_web(a, r, b));
  return c;
}

}  // namespace linkhom

namespace linkhom {

QMatrix ladder_action(GenType g, const std::vector<int>& weight, const RepContext& ctx) {
  if (weight.size() != 2) throw std::invalid_argument("ladder_action: weight must have two entries");
  const int a1 = weight[0], a2 = weight[1];
  if (a1 < 0 || a2 < 0 || a1 > ctx.k || a2 > ctx.k) throw std::invalid_argument("ladder_action: weight out of range");
  const int src = space_dim(ctx.k, weight);
  switch (g) {
    case GenType::E: {
      if (a2 == 0 || a1 + 1 > ctx.k) return QMatrix(space_dim(ctx.k, {a1 + 1, a2 - 1}), src);
      WebWord w{{a1, a2}, {{SliceKind::Split, 1, 1, a2 - 1}, {SliceKind::Merge, 0, a1, 1}}};
      return phi_eval(w, ctx);
    }
    case GenType::F: {
      if (a1 == 0 || a2 + 1 > ctx.k) return QMatrix(space_dim(ctx.k, {a1 - 1, a2 + 1}), src);
      WebWord w{{a1, a2}, {{SliceKind::Split, 0, a1 - 1, 1}, {SliceKind::Merge, 1, 1, a2}}};
      // Sign (-eta)^{a1+a2+1}.
      const bool flip = ctx.eta == 1 && (a1 + a2) % 2 == 0;
      return MultiRational(flip ? -1 : 1) * phi_eval(w, ctx);
    }
    case GenType::D:
    case GenType::Dinv: {
      const int e = g == GenType::D ? a1 - a2 : a2 - a1;
      return MultiRational::monomial(1, e) * QMatrix::identity(src);
    }
  }
  throw std::logic_error("unreachable");
}

WebWord closure_web(const BraidWord& b, int k) {
  validate(b);
  if (k < 1) throw std::invalid_argument("closure_web: k must be positive");
  const int n = b.strands;
  WebWord w;
  w.domain.assign(n, k);
  // Each k-line opens into a 1-strand W_j followed by its (k-1)-partner P_j.
  for (int j = 0; j < n; ++j) w.slices.push_back({SliceKind::Split, 2 * j, 1, k - 1});
  for (const auto& l : b.letters) {
    const int p = 2 * l.index - 1;  // position of the partner between the two W strands
    w.slices.push_back({SliceKind::Braiding, p, k - 1, 1, 1});
    w.slices.push_back({l.sign > 0 ? SliceKind::CrossPos : SliceKind::CrossNeg, p - 1});
    w.slices.push_back({SliceKind::Braiding, p, 1, k - 1, -1});
  }
  for (int j = n - 1; j >= 0; --j) w.slices.push_back({SliceKind::Merge, 2 * j, 1, k - 1});
  return w;
}

MultiRational wrt_eval(const BraidWord& b, int k, int eta) {
  RepContext ctx(k, eta);
  return MultiRational::from_laurent(closed_web_value(closure_web(b, k), ctx));
}

namespace {

// Product of normalized crossing matrices acting on W^{(x)n}, applied to x.
QVec apply_braid(const std::vector<QMatrix>& ops, QVec x) {
  for (const auto& op : ops) x = op.apply(x);
  return x;
}

std::vector<QMatrix> braid_operators(const BraidWord& b, const RepContext& ctx) {
  std::vector<QMatrix> ops;
  std::map<std::pair<int, int>, QMatrix> cache;
  for (const auto& l : b.letters) {
    auto key = std::make_pair(l.index, l.sign);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, crossing_matrix(ctx, l.index, b.strands, l.sign)).first;
    }
    ops.push_back(it->second);
  }
  return ops;
}

// Quantum trace of M over W^{(x)n} with weight (-gamma)^{2s-k-1} on e_s.
MultiRational quantum_trace(const RepContext& ctx, int n, const std::function<QVec(QVec)>& m) {
  const MultiRational base = -1 * ctx.gamma();
  std::vector<MultiRational> w(ctx.k);
  for (int s = 1; s <= ctx.k; ++s) w[s - 1] = pow(base, 2 * s - ctx.k - 1);
  const int dim = ipow(ctx.k, n);
  MultiRational total;
  for (int idx = 0; idx < dim; ++idx) {
    QVec img = m({{idx, MultiRational(1)}});
    auto it = std::lower_bound(img.begin(), img.end(), idx, [](const auto& e, int x) { return e.first < x; });
    if (it == img.end() || it->first != idx) continue;
    MultiRational c = it->second;
    for (int r = idx, f = 0; f < n; ++f, r /= ctx.k) c *= w[r % ctx.k];
    total += c;
  }
  return total;
}

}  // namespace

MultiRational wrt_trace(const BraidWord& b, int k, int eta) {
  validate(b);
  RepContext ctx(k, eta);
  const auto ops = braid_operators(b, ctx);
  return quantum_trace(ctx, b.strands, [&](QVec x) { return apply_braid(ops, std::move(x)); });
}

namespace {

// Scalar by which the normalized full twist of m parallel strands acts on the
// image of the Jones-Wenzl projector.
MultiRational twist_scalar(int m) {
  static std::mutex mu;
  static std::map<int, MultiRational> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  const RepContext ctx(2, 1);
  BraidWord twist{m, {}};
  for (int round = 0; round < m; ++round)
    for (int i = 1; i < m; ++i) twist.letters.push_back({i, 1});
  const auto ops = braid_operators(twist, ctx);
  const QMatrix p = jones_wenzl(m);
  MultiRational lambda(1);
  for (int j = 0; j < p.cols(); ++j) {
    if (p.column(j).empty()) continue;
    QVec img = apply_braid(ops, p.column(j));
    lambda = img.front().second / p.column(j).front().second;
    if (img.front().first != p.column(j).front().first) throw std::logic_error("twist_scalar: not an eigenvector");
    break;
  }
  cache.emplace(m, lambda);
  return lambda;
}

}  // namespace

MultiRational colored_jones(const BraidWord& b, const std::vector<int>& colors) {
  validate(b);
  const std::vector<int> comp = strand_components(b);
  const int ncomp = component_count(b);
  if (static_cast<int>(colors.size()) != ncomp)
    throw std::invalid_argument("colored_jones: expected " + std::to_string(ncomp) + " colours");
  for (int c : colors)
    if (c < 0) throw std::invalid_argument("colored_jones: colours must be non-negative");

  // Cable every letter into a block of crossings and record self-writhes.
  std::vector<int> cur = comp, writhe(ncomp, 0);
  BraidWord cable{0, {}};
  for (int c : comp) cable.strands += colors[c];
  if (cable.strands == 0) return MultiRational(1);
  for (const auto& l : b.letters) {
    int offset = 0;
    for (int t = 0; t < l.index - 1; ++t) offset += colors[cur[t]];
    const int p = colors[cur[l.index - 1]], q = colors[cur[l.index]];
    for (int j = p; j >= 1; --j)
      for (int t = 0; t < q; ++t) cable.letters.push_back({offset + j + t, l.sign});
    if (cur[l.index - 1] == cur[l.index]) writhe[cur[l.index - 1]] += l.sign;
    std::swap(cur[l.index - 1], cur[l.index]);
  }

  // One projector per component, placed on its first block at the bottom.
  std::vector<QMatrix> projectors;
  std::vector<bool> seen(ncomp, false);
  int offset = 0;
  for (int c : comp) {
    if (!seen[c] && colors[c] > 1) {
      seen[c] = true;
      projectors.push_back(place(jones_wenzl(colors[c]), ipow(2, offset), ipow(2, cable.strands - offset - colors[c])));
    }
    offset += colors[c];
  }

  const RepContext ctx(2, 1);
  const auto ops = braid_operators(cable, ctx);
  MultiRational value = quantum_trace(ctx, cable.strands, [&](QVec x) {
    for (const auto& pr : projectors) x = pr.apply(x);
    return apply_braid(ops, std::move(x));
  });
  for (int c = 0; c < ncomp; ++c)
    if (writhe[c] != 0 && colors[c] > 1) value *= pow(twist_scalar(colors[c]), -writhe[c]);
  // Present the result in the variable -v^{-1}, where colour 1 gives Jones.
  const LaurentPoly raw = value.to_laurent();
  LaurentPoly out;
  for (const auto& [e, c] : raw.terms()) out += LaurentPoly::monomial(-e, e % 2 ? Rational(-c) : c);
  return MultiRational::from_laurent(out);
}

}  // namespace linkhom
