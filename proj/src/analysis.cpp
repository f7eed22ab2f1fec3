#include "vinberg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "vinberg/linalg.hpp"

namespace vinberg {

namespace {

// Simple cycles of a graph: every edge once as a 2-cycle, then longer
// cycles up to cap vertices, each once (smallest vertex first, second
// vertex below the last). Returns false when the visitor or max_cycles
// cut the enumeration short.
bool for_each_cycle(size_t m, const std::function<bool(size_t, size_t)>& adjacent, size_t cap, size_t max_cycles,
                    const std::function<bool(const std::vector<size_t>&)>& visit) {
  size_t count = 0;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (adjacent(i, j)) {
        if (++count > max_cycles || !visit({i, j})) return false;
      }
  if (cap < 3) return cap >= m || m < 3;
  std::vector<size_t> path;
  std::vector<char> used(m, 0);
  bool complete = true;
  std::function<bool(size_t)> extend = [&](size_t start) {
    const size_t last = path.back();
    for (size_t next = start; next < m; ++next) {
      if (!adjacent(last, next)) continue;
      if (used[next]) continue;
      path.push_back(next);
      used[next] = 1;
      if (path.size() >= 3 && adjacent(next, path.front()) && path[1] < next) {
        if (++count > max_cycles || !visit(path)) return false;
      }
      if (path.size() < cap && !extend(start)) return false;
      used[next] = 0;
      path.pop_back();
    }
    return true;
  };
  for (size_t s = 0; s < m && complete; ++s) {
    path = {s};
    used.assign(m, 0);
    used[s] = 1;
    complete = extend(s + 1);
  }
  // cycles longer than cap can only exist when cap < m
  return complete && cap >= m;
}

// For each vertex, the tree path from the root of its component.
std::vector<std::vector<size_t>> tree_paths(size_t m, const std::function<bool(size_t, size_t)>& adjacent) {
  std::vector<std::vector<size_t>> path(m);
  std::vector<char> seen(m, 0);
  for (size_t r = 0; r < m; ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    path[r] = {r};
    std::vector<size_t> queue{r};
    for (size_t q = 0; q < queue.size(); ++q) {
      const size_t x = queue[q];
      for (size_t y = 0; y < m; ++y)
        if (!seen[y] && adjacent(x, y)) {
          seen[y] = 1;
          path[y] = path[x];
          path[y].push_back(y);
          queue.push_back(y);
        }
    }
  }
  return path;
}

// Closed walk realising x_i a_ij x_j, where x_i is the product of the
// entries along the tree path to i; for i == j it realises x_i^2.
std::vector<size_t> conjugating_walk(const std::vector<size_t>& pi, const std::vector<size_t>& pj, bool diagonal) {
  std::vector<size_t> walk = pi;
  const auto& back = diagonal ? pi : pj;
  if (!diagonal && pj.size() > 1) walk.push_back(pj.back());
  for (size_t t = back.size() - 1; t-- > 1;) walk.push_back(back[t]);
  return walk;
}

FieldElement walk_product(const std::vector<size_t>& walk, const std::vector<std::vector<RingElement>>& gram,
                          const std::vector<RingElement>& norms) {
  const FieldSpec& field = norms.front().field();
  if (walk.size() == 1) return FieldElement::integer(field, 1);
  RingElement num = RingElement::integer(field, 1);
  RingElement den = RingElement::integer(field, 1);
  for (size_t t = 0; t < walk.size(); ++t) {
    num *= gram[walk[t]][walk[(t + 1) % walk.size()]] * 2;
    den *= norms[walk[t]];
  }
  return FieldElement(num) / FieldElement(den);
}

std::string cycle_string(const std::vector<size_t>& c) {
  std::string s;
  for (size_t v : c) s += (s.empty() ? "" : "-") + std::to_string(v + 1);
  return s;
}

}  // namespace

FieldElement cyclic_product(const std::vector<Root>& cycle, const GramForm& f) {
  if (cycle.size() < 2) throw Error("a cycle needs at least two roots");
  std::vector<std::vector<RingElement>> gram(cycle.size(), std::vector<RingElement>(cycle.size()));
  std::vector<RingElement> norms;
  for (size_t i = 0; i < cycle.size(); ++i) {
    norms.push_back(cycle[i].norm());
    for (size_t j = 0; j < cycle.size(); ++j) gram[i][j] = inner_product(cycle[i].e(), cycle[j].e(), f);
  }
  std::vector<size_t> walk(cycle.size());
  std::iota(walk.begin(), walk.end(), 0);
  return walk_product(walk, gram, norms);
}

ArithmeticityReport arithmeticity_check(const std::vector<Root>& roots, const GramForm& f, size_t cycle_cap,
                                        size_t max_cycles) {
  ArithmeticityReport rep;
  const size_t m = roots.size();
  if (m < 2) throw Error("arithmeticity needs at least two roots");
  std::vector<std::vector<RingElement>> gram(m, std::vector<RingElement>(m));
  std::vector<RingElement> norms;
  for (size_t i = 0; i < m; ++i) {
    norms.push_back(roots[i].norm());
    for (size_t j = 0; j < m; ++j) gram[i][j] = inner_product(roots[i].e(), roots[j].e(), f);
  }
  auto adjacent = [&](size_t i, size_t j) { return i != j && !gram[i][j].is_zero(); };

  bool irrational = false;
  rep.integral = true;
  rep.exhaustive = for_each_cycle(m, adjacent, std::min(cycle_cap, m), max_cycles, [&](const std::vector<size_t>& c) {
    ++rep.cycles_examined;
    const FieldElement p = walk_product(c, gram, norms);
    if (!p.numerator().is_rational()) irrational = true;
    if (!p.is_integral()) {
      rep.integral = false;
      rep.failing_cycle = c;
      rep.detail = "cyclic product " + p.str() + " over " + cycle_string(c) + " is not an algebraic integer";
      return false;
    }
    return true;
  });
  rep.field = irrational ? f.field().describe() : "Q";

  rep.conjugate_check = true;
  if (irrational) {
    const auto paths = tree_paths(m, adjacent);
    FieldMatrix b(m, m);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        if (i == j)
          b(i, j) = FieldElement::integer(f.field(), 2) * walk_product(conjugating_walk(paths[i], paths[i], true), gram, norms);
        else if (adjacent(i, j))
          b(i, j) = walk_product(conjugating_walk(paths[i], paths[j], false), gram, norms);
        else
          b(i, j) = FieldElement(RingElement(f.field()));
      }
    const Inertia in = inertia(conjugate(b));
    if (in.negative > 0) {
      rep.conjugate_check = false;
      if (rep.detail.empty()) rep.detail = "conjugate Gram matrix has " + std::to_string(in.negative) + " negative eigenvalue(s)";
    }
  }
  rep.is_arithmetic = rep.integral && rep.conjugate_check;
  if (rep.is_arithmetic && !rep.exhaustive) rep.detail = "arithmetic so far: cycle enumeration stopped early";
  return rep;
}

ArithmeticityReport arithmeticity_check(const LabelDiagram& d, size_t cycle_cap, size_t max_cycles) {
  ArithmeticityReport rep;
  const size_t m = d.size();
  if (m < 2) throw Error("arithmeticity needs at least two walls");
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (i != j && (d.label(i, j).kind == EdgeKind::Thick || d.label(i, j).kind == EdgeKind::Dashed))
        throw Error("label-only arithmeticity needs finite weights on every edge");
  const CyclotomicField& cf = d.field();
  std::vector<size_t> all(m);
  std::iota(all.begin(), all.end(), 0);
  const auto a = d.matrix(all);
  auto adjacent = [&](size_t i, size_t j) { return i != j && d.adjacent(i, j); };
  auto product = [&](const std::vector<size_t>& walk) {
    if (walk.size() == 1) return cf.integer(1);
    CyclotomicField::Poly p = cf.integer(1);
    for (size_t t = 0; t < walk.size(); ++t) p = cf.mul(p, a[walk[t]][walk[(t + 1) % walk.size()]]);
    return p;
  };

  // Entries lie in Z[zeta], so every cyclic product is an algebraic integer.
  std::vector<CyclotomicField::Poly> products;
  rep.integral = true;
  rep.exhaustive = for_each_cycle(m, adjacent, std::min(cycle_cap, m), max_cycles, [&](const std::vector<size_t>& c) {
    ++rep.cycles_examined;
    products.push_back(product(c));
    return true;
  });

  // Embeddings of the field of cyclic products, one per distinct image.
  std::vector<int> moving;
  std::vector<std::vector<CyclotomicField::Poly>> images;
  for (int t : cf.real_embeddings()) {
    std::vector<CyclotomicField::Poly> img;
    for (const auto& p : products) img.push_back(cf.galois(p, t));
    bool fresh = true;
    for (const auto& seen : images) {
      bool same = true;
      for (size_t k = 0; k < img.size() && same; ++k) same = cf.equal(img[k], seen[k]);
      if (same) fresh = false;
    }
    if (fresh) {
      images.push_back(img);
      if (t != 1) moving.push_back(t);
    }
  }
  rep.field = images.size() == 1 ? "Q"
                                 : "degree " + std::to_string(images.size()) + " subfield of Q(zeta_" +
                                       std::to_string(cf.order()) + ")";

  rep.conjugate_check = true;
  if (!moving.empty()) {
    if (m > 16) throw Error("label-only conjugate check limited to 16 walls");
    const auto paths = tree_paths(m, adjacent);
    std::vector<std::vector<CyclotomicField::Poly>> b(m, std::vector<CyclotomicField::Poly>(m));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        if (i == j)
          b[i][j] = cf.mul(cf.integer(2), product(conjugating_walk(paths[i], paths[i], true)));
        else if (adjacent(i, j))
          b[i][j] = product(conjugating_walk(paths[i], paths[j], false));
        else
          b[i][j] = cf.integer(0);
      }
    // nonnegative definite iff every principal minor is >= 0
    for (size_t mask = 1; mask < (size_t{1} << m) && rep.conjugate_check; ++mask) {
      std::vector<std::vector<CyclotomicField::Poly>> sub;
      for (size_t i = 0; i < m; ++i) {
        if (!(mask >> i & 1)) continue;
        sub.emplace_back();
        for (size_t j = 0; j < m; ++j)
          if (mask >> j & 1) sub.back().push_back(b[i][j]);
      }
      const auto det = cf.determinant(sub);
      for (int t : moving)
        if (cf.sign(det, t) < 0) {
          rep.conjugate_check = false;
          rep.detail = "conjugate Gram matrix under zeta -> zeta^" + std::to_string(t) + " is not nonnegative definite";
          break;
        }
    }
  }
  rep.is_arithmetic = rep.integral && rep.conjugate_check;
  if (rep.is_arithmetic && !rep.exhaustive) rep.detail = "arithmetic so far: cycle enumeration stopped early";
  return rep;
}

MinimalityReport minimality(const std::vector<Root>& roots, const GramForm& f) {
  if (roots.size() < 2) throw Error("minimality needs at least two roots");
  MinimalityReport rep;
  rep.max_square = FieldElement(RingElement(f.field()));
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j) {
      const RingElement g = inner_product(roots[i].e(), roots[j].e(), f);
      const FieldElement q = FieldElement(g * g * 4) / FieldElement(roots[i].norm() * roots[j].norm());
      if (compare_by_identity_embedding(q, rep.max_square) == std::strong_ordering::greater) rep.max_square = q;
    }
  rep.max_entry = std::sqrt(rep.max_square.to_real());
  return rep;
}

namespace {

bool doubling_label(const EdgeLabel& l) {
  switch (l.kind) {
    case EdgeKind::Orthogonal:
    case EdgeKind::Thick:
    case EdgeKind::Dashed: return true;
    case EdgeKind::Weight: return l.m % 2 == 0;
  }
  return false;
}

template <class D>
std::vector<size_t> doubling_walls_of(const D& d) {
  std::vector<size_t> out;
  for (size_t i = 0; i < d.size(); ++i) {
    bool ok = true;
    for (size_t j = 0; j < d.size() && ok; ++j)
      if (j != i) ok = doubling_label(d.label(i, j));
    if (ok) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<size_t> doubling_walls(const CoxeterDiagram& d) { return doubling_walls_of(d); }
std::vector<size_t> doubling_walls(const LabelDiagram& d) { return doubling_walls_of(d); }

std::vector<Root> double_polyhedron(const std::vector<Root>& roots, size_t wall, const GramForm& f) {
  if (wall >= roots.size()) throw Error("wall index out of range");
  const CoxeterDiagram d(f, roots);
  const auto walls = doubling_walls(d);
  if (std::find(walls.begin(), walls.end(), wall) == walls.end())
    throw Error("wall " + std::to_string(wall + 1) + " meets another wall at an odd angle");
  std::vector<Root> out;
  auto add = [&](const Vector& e) {
    for (const auto& r : out) {
      if (r.e() == e) return;
      Vector neg = e;
      for (auto& c : neg) c = -c;
      if (r.e() == neg) return;
    }
    out.emplace_back(e, f);
  };
  for (size_t j = 0; j < roots.size(); ++j)
    if (j != wall) add(roots[j].e());
  for (size_t j = 0; j < roots.size(); ++j)
    if (j != wall) add(reflect(roots[j].e(), roots[wall], f));
  CoxeterDiagram check(f, out);  // throws if some angle is not pi/m
  return out;
}

}  // namespace vinberg
