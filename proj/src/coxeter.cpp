#include "vinberg/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace vinberg {

namespace {

// Minimal polynomial of 4cos^2(pi/m) in x = q - shift, highest degree first.
struct AnglePolynomial {
  int m;
  long shift;
  std::vector<long> coeffs;
};

const std::vector<AnglePolynomial>& angle_table() {
  static const std::vector<AnglePolynomial> table{
      {3, 0, {1, -1}},
      {4, 0, {1, -2}},
      {5, 0, {1, -3, 1}},
      {6, 0, {1, -3}},
      {7, 0, {1, -5, 6, -1}},
      {8, 0, {1, -4, 2}},
      {9, 0, {1, -6, 9, -1}},
      {10, 0, {1, -5, 5}},
      {11, 2, {1, 1, -4, -3, 3, 1}},  // 2cos(2pi/11)
      {12, 0, {1, -4, 1}},
  };
  return table;
}

bool near_identity_value(const FieldElement& q, long double target) {
  // Exact comparison against a rational bracket of width 2e-9.
  const long scale = 1000000000L;
  const long lo = std::lround(target * scale) - 1;
  const FieldSpec f = q.field();
  const FieldElement flo(RingElement(f, lo), scale), fhi(RingElement(f, lo + 2), scale);
  return compare_by_identity_embedding(q, flo) == std::strong_ordering::greater &&
         compare_by_identity_embedding(q, fhi) == std::strong_ordering::less;
}

}  // namespace

std::string EdgeLabel::str() const {
  switch (kind) {
    case EdgeKind::Orthogonal: return "2";
    case EdgeKind::Weight: return std::to_string(m);
    case EdgeKind::Thick: return "inf";
    case EdgeKind::Dashed: return "dashed";
  }
  return "?";
}

EdgeLabel EdgeLabel::parse(const std::string& text) {
  if (text == "2") return orthogonal();
  if (text == "inf") return thick();
  if (text == "dashed") return dashed();
  try {
    size_t used = 0;
    const int m = std::stoi(text, &used);
    if (used == text.size() && m >= 3 && m <= kMaxWeight) return weight(m);
  } catch (const std::exception&) {
  }
  throw Error("unknown edge label '" + text + "'");
}

EdgeLabel label_from_q(const FieldElement& q) {
  if (q.is_zero()) return EdgeLabel::orthogonal();
  const FieldElement four = FieldElement::integer(q.field(), 4);
  const auto c = compare_by_identity_embedding(q, four);
  if (c == std::strong_ordering::equal) return EdgeLabel::thick();
  if (c == std::strong_ordering::greater) return EdgeLabel::dashed();
  for (const auto& row : angle_table()) {
    const FieldElement x = q - FieldElement::integer(q.field(), row.shift);
    FieldElement value(RingElement(q.field()));
    for (long c : row.coeffs) value = value * x + FieldElement::integer(q.field(), c);
    if (!value.is_zero()) continue;
    const long double target = 4.0L * std::pow(std::cos(std::acos(-1.0L) / row.m), 2);
    if (near_identity_value(q, target)) return EdgeLabel::weight(row.m);
  }
  std::ostringstream msg;
  msg << "unrecognized dihedral angle: 4cos^2 = " << q.str() << " (~" << static_cast<double>(q.to_real()) << ")";
  throw Error(msg.str());
}

EdgeLabel label_edge(const Root& a, const Root& b, const GramForm& f) {
  const RingElement g = inner_product(a.e(), b.e(), f);
  const FieldElement q = FieldElement(g * g * 4) / FieldElement(a.norm() * b.norm());
  return label_from_q(q);
}

CoxeterDiagram::CoxeterDiagram(const GramForm& f, std::vector<Root> roots)
    : form_(std::make_shared<const GramForm>(f)) {
  for (const auto& r : roots) add_root(r);
}

void CoxeterDiagram::add_root(const Root& r) {
  const size_t k = roots_.size();
  std::vector<RingElement> row(k + 1);
  std::vector<EdgeLabel> labels(k + 1);
  std::vector<long double> cos(k + 1);
  const long double sr = r.norm().to_real();
  for (size_t i = 0; i < k; ++i) {
    const RingElement g = inner_product(roots_[i].e(), r.e(), *form_);
    if (sign_under_embedding(g, Embedding::Identity) > 0)
      throw Error("roots " + std::to_string(i + 1) + " and " + std::to_string(k + 1) + " have positive inner product");
    const FieldElement q = FieldElement(g * g * 4) / FieldElement(roots_[i].norm() * r.norm());
    try {
      labels[i] = label_from_q(q);
    } catch (const Error& e) {
      throw Error(std::string(e.what()) + " between roots " + to_string(roots_[i].e()) + " and " + to_string(r.e()));
    }
    row[i] = g;
    cos[i] = -g.to_real() / std::sqrt(roots_[i].norm().to_real() * sr);
  }
  row[k] = r.norm();
  labels[k] = EdgeLabel::orthogonal();
  cos[k] = -1;
  for (size_t i = 0; i < k; ++i) {
    gram_[i].push_back(row[i]);
    labels_[i].push_back(labels[i]);
    cosine_[i].push_back(cos[i]);
  }
  gram_.push_back(std::move(row));
  labels_.push_back(std::move(labels));
  cosine_.push_back(std::move(cos));
  roots_.push_back(r);
}

RingMatrix CoxeterDiagram::gram_matrix(const std::vector<size_t>& subset) const {
  RingMatrix m(subset.size(), subset.size());
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t j = 0; j < subset.size(); ++j) m(i, j) = gram_[subset[i]][subset[j]];
  return m;
}

CoxeterDiagram build_diagram(const std::vector<Root>& roots, const GramForm& f) { return CoxeterDiagram(f, roots); }

size_t count_components(const DiagramView& d, const std::vector<size_t>& subset) {
  std::vector<int> comp(subset.size(), -1);
  size_t count = 0;
  for (size_t s = 0; s < subset.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<size_t> stack{s};
    comp[s] = static_cast<int>(count);
    while (!stack.empty()) {
      const size_t x = stack.back();
      stack.pop_back();
      for (size_t y = 0; y < subset.size(); ++y)
        if (comp[y] < 0 && d.adjacent(subset[x], subset[y])) {
          comp[y] = static_cast<int>(count);
          stack.push_back(y);
        }
    }
    ++count;
  }
  return count;
}

SubdiagramClass classify_subdiagram(const CoxeterDiagram& d, const std::vector<size_t>& subset) {
  if (subset.empty()) throw Error("empty subdiagram");
  const DefiniteRankClass c = definite_rank_class(d.gram_matrix(subset));
  SubdiagramClass out;
  out.components = count_components(d, subset);
  out.rank = c.rank;
  if (c.kind == Definiteness::PositiveDefinite) {
    out.kind = SubdiagramKind::Elliptic;
  } else if (c.kind == Definiteness::PositiveSemidefinite && c.nullity() == out.components) {
    out.kind = SubdiagramKind::Parabolic;
  }
  return out;
}

int CoxeterDiagram::definiteness(const std::vector<size_t>& subset) const {
  if (subset.empty()) return 1;
  const DefiniteRankClass c = definite_rank_class(gram_matrix(subset));
  if (c.kind == Definiteness::PositiveDefinite) return 1;
  if (c.kind == Definiteness::PositiveSemidefinite && c.nullity() == 1) return 0;
  return -1;
}

namespace {

int label_order(const std::vector<std::vector<EdgeLabel>>& labels) {
  long l = 1;
  for (const auto& row : labels)
    for (const auto& e : row) {
      if (e.kind == EdgeKind::Dashed) throw Error("label-only diagrams cannot carry dashed edges");
      if (e.kind == EdgeKind::Weight) l = std::lcm(l, static_cast<long>(e.m));
    }
  return static_cast<int>(2 * l);
}

}  // namespace

LabelDiagram::LabelDiagram(size_t n, std::vector<std::vector<EdgeLabel>> labels)
    : n_(n), labels_(std::move(labels)), field_(label_order(labels_)) {
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].size() != labels_.size()) throw Error("label matrix is not square");
    for (size_t j = 0; j < labels_.size(); ++j)
      if (i != j && !(labels_[i][j] == labels_[j][i])) throw Error("label matrix is not symmetric");
  }
}

long double LabelDiagram::cosine(size_t i, size_t j) const {
  if (i == j) return -1;
  const EdgeLabel& l = labels_[i][j];
  if (l.kind == EdgeKind::Thick) return 1;
  if (l.kind == EdgeKind::Orthogonal) return 0;
  return std::cos(std::acos(-1.0L) / l.m);
}

std::vector<std::vector<CyclotomicField::Poly>> LabelDiagram::matrix(const std::vector<size_t>& subset) const {
  std::vector<std::vector<CyclotomicField::Poly>> m(subset.size(), std::vector<CyclotomicField::Poly>(subset.size()));
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = 0; b < subset.size(); ++b) {
      const EdgeLabel& l = labels_[subset[a]][subset[b]];
      if (a == b) {
        m[a][b] = field_.integer(2);
      } else if (l.kind == EdgeKind::Thick) {
        m[a][b] = field_.integer(-2);
      } else if (l.kind == EdgeKind::Orthogonal) {
        m[a][b] = field_.integer(0);
      } else {
        m[a][b] = field_.sub(field_.integer(0), field_.two_cos(field_.order() / (2 * l.m)));
      }
    }
  return m;
}

namespace {

bool leading_minors_positive(const LabelDiagram& d, const std::vector<size_t>& subset) {
  std::vector<size_t> prefix;
  for (size_t v : subset) {
    prefix.push_back(v);
    if (d.field().sign(d.field().determinant(d.matrix(prefix)), 1) <= 0) return false;
  }
  return true;
}

}  // namespace

int LabelDiagram::definiteness(const std::vector<size_t>& subset) const {
  if (subset.empty()) return 1;
  for (size_t drop = 0; drop < subset.size(); ++drop) {
    std::vector<size_t> rest;
    for (size_t i = 0; i < subset.size(); ++i)
      if (i != drop) rest.push_back(subset[i]);
    if (!leading_minors_positive(*this, rest)) continue;
    const int s = field_.sign(field_.determinant(matrix(subset)), 1);
    return s > 0 ? 1 : (s == 0 ? 0 : -1);
  }
  return -1;
}

bool LabelDiagram::hyperbolic() const {
  if (size() != n_ + 1) return true;
  std::vector<size_t> all(size());
  std::iota(all.begin(), all.end(), 0);
  if (field_.sign(field_.determinant(matrix(all)), 1) >= 0) return false;
  // a facet without negative eigenvalues leaves room for exactly one
  for (size_t drop = 0; drop < all.size(); ++drop) {
    std::vector<size_t> rest;
    for (size_t i = 0; i < all.size(); ++i)
      if (i != drop) rest.push_back(i);
    if (definiteness(rest) >= 0) return true;
  }
  return false;
}

LabelDiagram triangle_diagram(int p, int q, int r) {
  auto label = [](int m) {
    if (m == 0) return EdgeLabel::thick();
    if (m == 2) return EdgeLabel::orthogonal();
    return EdgeLabel::weight(m);
  };
  // angle pi/p between sides 0,1; pi/q between 1,2; pi/r between 2,0
  std::vector<std::vector<EdgeLabel>> l(3, std::vector<EdgeLabel>(3, EdgeLabel::orthogonal()));
  l[0][1] = l[1][0] = label(p);
  l[1][2] = l[2][1] = label(q);
  l[2][0] = l[0][2] = label(r);
  return LabelDiagram(2, std::move(l));
}

// ---------------------------------------------------------------------------
// Finite volume

size_t VolumeChecker::KeyHash::operator()(const Key& k) const noexcept {
  size_t h = 1469598103934665603ULL;
  for (uint32_t x : k) h = (h ^ x) * 1099511628211ULL;
  return h;
}

VolumeChecker::VolumeChecker(const DiagramView& d) : d_(&d), n_(d.n()) {}

VolumeChecker::Kind VolumeChecker::classify(const Key& c) {
  if (auto it = cache_.find(c); it != cache_.end()) return it->second;
  // Cholesky of the normalized Gram matrix; a pivot near zero defers to the
  // exact test.
  const size_t k = c.size();
  std::vector<std::vector<long double>> l(k, std::vector<long double>(k, 0));
  Kind kind = Kind::Elliptic;
  bool exact = false;
  for (size_t i = 0; i < k && !exact && kind == Kind::Elliptic; ++i) {
    for (size_t j = 0; j <= i; ++j) {
      long double v = i == j ? 1.0L : -d_->cosine(c[i], c[j]);
      for (size_t t = 0; t < j; ++t) v -= l[i][t] * l[j][t];
      if (i == j) {
        if (v < -1e-8L) {
          kind = Kind::Other;
        } else if (v <= 1e-8L) {
          exact = true;
        } else {
          l[i][i] = std::sqrt(v);
        }
      } else {
        l[i][j] = v / l[j][j];
      }
    }
  }
  if (exact) {
    const int def = d_->definiteness(std::vector<size_t>(c.begin(), c.end()));
    kind = def > 0 ? Kind::Elliptic : (def == 0 ? Kind::Affine : Kind::Other);
  }
  cache_.emplace(c, kind);
  return kind;
}

std::vector<VolumeChecker::Key> VolumeChecker::components(const Key& set) const {
  std::vector<Key> out;
  std::vector<bool> seen(set.size(), false);
  for (size_t s = 0; s < set.size(); ++s) {
    if (seen[s]) continue;
    Key comp;
    std::vector<size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const size_t a = stack.back();
      stack.pop_back();
      comp.push_back(set[a]);
      for (size_t b = 0; b < set.size(); ++b)
        if (!seen[b] && d_->adjacent(set[a], set[b])) {
          seen[b] = true;
          stack.push_back(b);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<VolumeChecker::Vertex> VolumeChecker::find_vertex() {
  // Depth-first over sets whose components are all elliptic or affine, in
  // increasing index order; the first of rank n (elliptic) or rank n-1
  // (affine only) is a vertex.
  const auto m = static_cast<uint32_t>(d_->size());
  Key set;
  std::optional<Vertex> found;
  std::function<void(uint32_t)> dfs = [&](uint32_t from) {
    const auto comps = components(set);
    size_t affine = 0;
    for (const auto& c : comps) affine += classify(c) == Kind::Affine;
    const size_t rank = set.size() - affine;
    if (affine == 0 && set.size() == n_) {
      found = Vertex{set, false};
      return;
    }
    if (affine == comps.size() && !comps.empty() && rank + 1 == n_) {
      found = Vertex{set, true};
      return;
    }
    if (rank >= n_) return;
    for (uint32_t v = from; v < m && !found; ++v) {
      Key merged{v};
      for (const auto& c : comps) {
        bool touch = false;
        for (uint32_t x : c) touch = touch || d_->adjacent(x, v);
        if (touch) merged.insert(merged.end(), c.begin(), c.end());
      }
      std::sort(merged.begin(), merged.end());
      if (classify(merged) == Kind::Other) continue;
      set.push_back(v);
      dfs(v + 1);
      set.pop_back();
    }
  };
  dfs(0);
  return found;
}

std::vector<VolumeChecker::Vertex> VolumeChecker::endpoints(const Key& edge) {
  std::vector<Vertex> out;
  const auto comps = components(edge);
  struct Completion {
    uint32_t root;
    std::vector<size_t> covers;
  };
  std::vector<Completion> affine;
  const auto m = static_cast<uint32_t>(d_->size());
  for (uint32_t j = 0; j < m; ++j) {
    if (std::binary_search(edge.begin(), edge.end(), j)) continue;
    Key merged{j};
    std::vector<size_t> covers;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
      bool touch = false;
      for (uint32_t x : comps[ci]) touch = touch || d_->adjacent(x, j);
      if (touch) {
        covers.push_back(ci);
        merged.insert(merged.end(), comps[ci].begin(), comps[ci].end());
      }
    }
    std::sort(merged.begin(), merged.end());
    const Kind k = classify(merged);
    if (k == Kind::Elliptic) {
      Key v = edge;
      v.insert(std::upper_bound(v.begin(), v.end(), j), j);
      out.push_back({std::move(v), false});
    } else if (k == Kind::Affine) {
      affine.push_back({j, std::move(covers)});
    }
  }
  // Ideal endpoints: pairwise orthogonal completions covering every
  // component of the edge exactly once.
  std::vector<int> owner(comps.size(), -1);
  std::vector<uint32_t> chosen;
  std::function<void()> cover = [&] {
    size_t next = 0;
    while (next < comps.size() && owner[next] >= 0) ++next;
    if (next == comps.size()) {
      Key v = edge;
      v.insert(v.end(), chosen.begin(), chosen.end());
      std::sort(v.begin(), v.end());
      out.push_back({std::move(v), true});
      return;
    }
    for (size_t a = 0; a < affine.size(); ++a) {
      const auto& c = affine[a];
      if (std::find(c.covers.begin(), c.covers.end(), next) == c.covers.end()) continue;
      bool ok = true;
      for (size_t ci : c.covers) ok = ok && owner[ci] < 0;
      for (uint32_t other : chosen) ok = ok && !d_->adjacent(other, c.root);
      if (!ok) continue;
      for (size_t ci : c.covers) owner[ci] = static_cast<int>(a);
      chosen.push_back(c.root);
      cover();
      chosen.pop_back();
      for (size_t ci : c.covers) owner[ci] = -1;
    }
  };
  if (!comps.empty()) cover();
  return out;
}

FiniteVolumeReport VolumeChecker::check() {
  FiniteVolumeReport r;
  if (d_->size() < n_ + 1) {
    r.reason = "fewer than n+1 roots";
    return r;
  }
  if (!d_->hyperbolic()) {
    r.reason = "configuration is not hyperbolic";
    return r;
  }
  auto start = find_vertex();
  if (!start) {
    r.reason = "no vertices";
    return r;
  }
  std::unordered_map<Key, bool, KeyHash> seen_vertices;
  std::unordered_map<Key, bool, KeyHash> seen_edges;
  std::vector<Vertex> queue{*start};
  seen_vertices.emplace(start->roots, start->ideal);
  for (size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    if (v.ideal) {
      ++r.ideal_vertices;
    } else {
      ++r.ordinary_vertices;
    }
    // edges through v: drop one root, or one root per component at a cusp
    std::vector<Key> edges;
    if (!v.ideal) {
      for (size_t i = 0; i < v.roots.size(); ++i) {
        Key e = v.roots;
        e.erase(e.begin() + static_cast<long>(i));
        edges.push_back(std::move(e));
      }
    } else {
      const auto comps = components(v.roots);
      std::vector<size_t> pick(comps.size(), 0);
      for (;;) {
        Key e;
        for (size_t c = 0; c < comps.size(); ++c)
          for (size_t t = 0; t < comps[c].size(); ++t)
            if (t != pick[c]) e.push_back(comps[c][t]);
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
        size_t c = 0;
        while (c < comps.size() && ++pick[c] == comps[c].size()) pick[c++] = 0;
        if (c == comps.size()) break;
      }
    }
    for (auto& e : edges) {
      if (!seen_edges.emplace(e, true).second) continue;
      const auto ends = endpoints(e);
      if (ends.size() != 2) {
        std::ostringstream msg;
        msg << "edge {";
        for (size_t i = 0; i < e.size(); ++i) msg << (i ? "," : "") << e[i] + 1;
        msg << "} has " << ends.size() << (ends.size() == 1 ? " vertex" : " vertices");
        r.reason = msg.str();
        r.edges = seen_edges.size();
        return r;
      }
      for (const auto& w : ends)
        if (seen_vertices.emplace(w.roots, w.ideal).second) queue.push_back(w);
    }
  }
  r.edges = seen_edges.size();
  r.finite_volume = true;
  r.compact = r.ideal_vertices == 0;
  return r;
}

FiniteVolumeReport check_finite_volume(const DiagramView& d) { return VolumeChecker(d).check(); }

// ---------------------------------------------------------------------------
// Automorphisms

namespace {

class ColoredGraph {
 public:
  explicit ColoredGraph(const CoxeterDiagram& d) : n_(d.size()), color_(n_ * n_) {
    // off-diagonal colour: the exact value 4(e_i,e_j)^2/(s_i s_j)
    std::map<std::string, int> ids;
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j) {
        const RingElement& g = d.gram(i, j);
        const auto key = i == j ? std::string("diag")
                                : (FieldElement(g * g * 4) / FieldElement(d.root(i).norm() * d.root(j).norm())).str();
        auto it = ids.try_emplace(key, static_cast<int>(ids.size())).first;
        color_[i * n_ + j] = it->second;
      }
  }
  size_t size() const { return n_; }
  int color(size_t i, size_t j) const { return color_[i * n_ + j]; }

 private:
  size_t n_;
  std::vector<int> color_;
};

// Refines two cell assignments simultaneously; returns false when the two
// sides become inconsistent.
bool refine(const ColoredGraph& g, std::vector<int>& a, std::vector<int>& b) {
  const size_t n = g.size();
  size_t cells = 0;
  for (;;) {
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    auto signature = [&](const std::vector<int>& cell, size_t v) {
      Sig s{cell[v], {}};
      s.second.reserve(n);
      for (size_t w = 0; w < n; ++w) s.second.emplace_back(cell[w], g.color(v, w));
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::vector<Sig> sa(n), sb(n);
    for (size_t v = 0; v < n; ++v) {
      sa[v] = signature(a, v);
      sb[v] = signature(b, v);
    }
    std::vector<Sig> ua = sa, ub = sb;
    std::sort(ua.begin(), ua.end());
    std::sort(ub.begin(), ub.end());
    if (ua != ub) return false;
    ua.erase(std::unique(ua.begin(), ua.end()), ua.end());
    for (size_t v = 0; v < n; ++v) {
      a[v] = static_cast<int>(std::lower_bound(ua.begin(), ua.end(), sa[v]) - ua.begin());
      b[v] = static_cast<int>(std::lower_bound(ua.begin(), ua.end(), sb[v]) - ua.begin());
    }
    if (ua.size() == cells) return true;
    cells = ua.size();
  }
}

bool is_automorphism(const ColoredGraph& g, const std::vector<size_t>& p) {
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      if (g.color(i, j) != g.color(p[i], p[j])) return false;
  return true;
}

// Finds one automorphism compatible with the (already individualized) cells.
bool search(const ColoredGraph& g, std::vector<int> a, std::vector<int> b, std::vector<size_t>& out) {
  if (!refine(g, a, b)) return false;
  const size_t n = g.size();
  std::vector<int> size(n + 1, 0);
  for (int c : a) ++size[c];
  size_t pick = n;
  for (size_t v = 0; v < n; ++v)
    if (size[a[v]] > 1 && (pick == n || size[a[v]] < size[a[pick]])) pick = v;
  if (pick == n) {
    out.assign(n, 0);
    for (size_t v = 0; v < n; ++v)
      for (size_t w = 0; w < n; ++w)
        if (b[w] == a[v]) out[v] = w;
    return is_automorphism(g, out);
  }
  const int cell = a[pick];
  const int fresh = static_cast<int>(n) + 1;
  for (size_t w = 0; w < n; ++w) {
    if (b[w] != cell) continue;
    std::vector<int> a2 = a, b2 = b;
    a2[pick] = fresh;
    b2[w] = fresh;
    if (search(g, a2, b2, out)) return true;
  }
  return false;
}

std::vector<size_t> orbit_closure(size_t start, const std::vector<std::vector<size_t>>& gens, size_t n) {
  std::vector<bool> seen(n, false);
  std::vector<size_t> orbit{start};
  seen[start] = true;
  for (size_t i = 0; i < orbit.size(); ++i)
    for (const auto& p : gens)
      if (!seen[p[orbit[i]]]) {
        seen[p[orbit[i]]] = true;
        orbit.push_back(p[orbit[i]]);
      }
  return orbit;
}

}  // namespace

AutomorphismGroup diagram_automorphisms(const CoxeterDiagram& d) {
  const ColoredGraph g(d);
  const size_t n = g.size();
  AutomorphismGroup out;
  if (n == 0) return out;

  // Stabilizer chain along the base 0, 1, 2, ...; generators found at level
  // k fix 0..k-1 pointwise.
  std::vector<std::vector<std::vector<size_t>>> level_gens(n);
  std::vector<Integer> orbit_sizes(n, 1);
  for (size_t k = n; k-- > 0;) {
    std::vector<std::vector<size_t>> gens;
    for (size_t l = k; l < n; ++l)
      for (const auto& p : level_gens[l]) gens.push_back(p);
    std::vector<size_t> orbit = orbit_closure(k, gens, n);
    for (size_t c = 0; c < n; ++c) {
      if (std::find(orbit.begin(), orbit.end(), c) != orbit.end()) continue;
      // fix 0..k-1, send k to c
      if (c < k) continue;
      std::vector<int> a(n, 0), b(n, 0);
      for (size_t i = 0; i < k; ++i) a[i] = b[i] = static_cast<int>(i) + 1;
      a[k] = b[c] = static_cast<int>(k) + 1;
      std::vector<size_t> perm;
      if (search(g, a, b, perm)) {
        level_gens[k].push_back(perm);
        gens.push_back(perm);
        orbit = orbit_closure(k, gens, n);
      }
    }
    orbit_sizes[k] = orbit.size();
  }
  for (const auto& s : orbit_sizes) out.order *= s;
  for (size_t k = 0; k < n; ++k)
    for (auto& p : level_gens[k]) out.generators.push_back(std::move(p));
  return out;
}

// ---------------------------------------------------------------------------
// Export

DiagramFormat parse_diagram_format(const std::string& name) {
  if (name == "dot") return DiagramFormat::Dot;
  if (name == "text") return DiagramFormat::Text;
  if (name == "json") return DiagramFormat::Json;
  throw Error("unknown diagram format '" + name + "'");
}

std::string export_diagram(const CoxeterDiagram& d, DiagramFormat format) {
  std::ostringstream out;
  switch (format) {
    case DiagramFormat::Text: {
      bool first = true;
      for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j) {
          if (d.label(i, j).kind == EdgeKind::Orthogonal) continue;
          if (!first) out << "\n";
          first = false;
          out << i + 1 << " -- " << j + 1 << " [" << d.label(i, j).str() << "]";
        }
      break;
    }
    case DiagramFormat::Dot: {
      out << "graph coxeter {\n  node [shape=circle, width=0.3, label=\"\"];\n";
      for (size_t i = 0; i < d.size(); ++i)
        out << "  v" << i + 1 << " [xlabel=\"" << i + 1 << "\", tooltip=\"" << to_string(d.root(i).e())
            << " norm " << d.root(i).norm().str() << "\"];\n";
      for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j) {
          const EdgeLabel& l = d.label(i, j);
          if (l.kind == EdgeKind::Orthogonal) continue;
          out << "  v" << i + 1 << " -- v" << j + 1;
          if (l.kind == EdgeKind::Thick) {
            out << " [style=bold, penwidth=3, label=\"inf\"]";
          } else if (l.kind == EdgeKind::Dashed) {
            out << " [style=dashed]";
          } else if (l.m == 4) {
            out << " [color=\"black:black\", label=\"4\"]";
          } else if (l.m == 5) {
            out << " [color=\"black:black:black\", label=\"5\"]";
          } else if (l.m > 5) {
            out << " [label=\"" << l.m << "\"]";
          }
          out << ";\n";
        }
      out << "}\n";
      break;
    }
    case DiagramFormat::Json: {
      nlohmann::ordered_json j;
      j["n"] = d.n();
      j["field"] = d.form().field().describe();
      auto& vs = j["vertices"] = nlohmann::ordered_json::array();
      for (size_t i = 0; i < d.size(); ++i) {
        nlohmann::ordered_json v;
        v["index"] = i + 1;
        auto& coords = v["root"] = nlohmann::ordered_json::array();
        for (const auto& x : d.root(i).e()) coords.push_back(x.str());
        v["norm"] = d.root(i).norm().str();
        vs.push_back(v);
      }
      auto& es = j["edges"] = nlohmann::ordered_json::array();
      for (size_t a = 0; a < d.size(); ++a)
        for (size_t b = a + 1; b < d.size(); ++b) {
          if (d.label(a, b).kind == EdgeKind::Orthogonal) continue;
          es.push_back({{"i", a + 1}, {"j", b + 1}, {"label", d.label(a, b).str()}});
        }
      out << j.dump(2);
      break;
    }
  }
  return out.str();
}

CoxeterDiagram diagram_from_json(const std::string& text, const GramForm& f) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("diagram json: ") + e.what());
  }
  CoxeterDiagram d(f, {});
  for (const auto& v : j.at("vertices")) {
    Vector e;
    for (const auto& c : v.at("root")) e.push_back(RingElement::parse(c.get<std::string>(), f.field()));
    d.add_root(Root(std::move(e), f));
  }
  size_t listed = 0;
  for (const auto& e : j.at("edges")) {
    const size_t a = e.at("i").get<size_t>() - 1, b = e.at("j").get<size_t>() - 1;
    if (a >= d.size() || b >= d.size()) throw Error("diagram json: edge index out of range");
    if (!(d.label(a, b) == EdgeLabel::parse(e.at("label").get<std::string>())))
      throw Error("diagram json: stored label disagrees with the roots");
    ++listed;
  }
  size_t actual = 0;
  for (size_t a = 0; a < d.size(); ++a)
    for (size_t b = a + 1; b < d.size(); ++b)
      if (d.label(a, b).kind != EdgeKind::Orthogonal) ++actual;
  if (actual != listed) throw Error("diagram json: edge list is incomplete");
  return d;
}

}  // namespace vinberg
