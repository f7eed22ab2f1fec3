#include "vinberg/engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace vinberg {

namespace {

bool less_by_identity(const FieldElement& x, const FieldElement& y) {
  return compare_by_identity_embedding(x, y) == std::strong_ordering::less;
}

// Ring elements x with both real images inside the given ranges (plus a
// little slack; callers re-check exactly).
std::vector<RingElement> ring_box(const FieldSpec& field, long double lo1, long double hi1, long double lo2,
                                  long double hi2) {
  std::vector<RingElement> out;
  const long double eps = 1e-9L * (1 + std::fabs(lo1) + std::fabs(hi1) + std::fabs(lo2) + std::fabs(hi2));
  if (field.is_rational()) {
    const long double lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    for (long a = static_cast<long>(std::ceil(lo - eps)); a <= static_cast<long>(std::floor(hi + eps)); ++a)
      out.push_back(RingElement::integer(field, a));
    return out;
  }
  const long double w1 = field.omega_value(Embedding::Identity), w2 = field.omega_value(Embedding::Conjugate);
  const long double delta = w1 - w2;
  const long b_lo = static_cast<long>(std::ceil((lo1 - hi2) / delta - eps));
  const long b_hi = static_cast<long>(std::floor((hi1 - lo2) / delta + eps));
  for (long b = b_lo; b <= b_hi; ++b) {
    const long double a_lo = std::max(lo1 - b * w1, lo2 - b * w2);
    const long double a_hi = std::min(hi1 - b * w1, hi2 - b * w2);
    for (long a = static_cast<long>(std::ceil(a_lo - eps)); a <= static_cast<long>(std::floor(a_hi + eps)); ++a)
      out.emplace_back(field, a, b);
  }
  return out;
}

// Generator of the fractional ideal spanned by the entries of G u0.
FieldElement height_generator(const GramForm& f, const FieldVector& u0) {
  const FieldVector gu = f.apply(u0);
  Integer den = 1;
  for (const auto& x : gu) den = lcm(den, x.denominator());
  RingElement g(f.field());
  for (const auto& x : gu) {
    const RingElement scaled = (x * FieldElement(RingElement(f.field(), den))).to_ring();
    g = gcd(g, scaled);
  }
  if (g.is_zero()) throw Error("basepoint is zero");
  return FieldElement(g, den);
}

long trace_size(const Vector& v) {
  long t = 0;
  for (const auto& x : v) t += (x * x).trace().get_si();
  return t;
}

}  // namespace

FieldVector choose_basepoint(const GramForm& f, const std::optional<FieldVector>& supplied) {
  if (supplied) {
    const FieldVector& u = *supplied;
    if (u.size() != f.dim())
      throw Error("basepoint has " + std::to_string(u.size()) + " coordinates, expected " + std::to_string(f.dim()));
    for (const auto& x : u)
      if (!(x.field() == f.field())) throw Error("basepoint lies in the wrong field");
    if (sign_under_embedding(inner_product(u, u, f), Embedding::Identity) >= 0)
      throw Error("basepoint " + to_string(u) + " is not timelike");
    return u;
  }
  // Vectors of growing coefficient size sum |a| + |b| with a positive first
  // nonzero entry; within a size the smallest trace of sum x_i^2 wins, then
  // lexicographic order.
  const FieldSpec& field = f.field();
  const size_t dim = f.dim();
  const bool quad = !field.is_rational();
  for (long level = 1; level <= 4; ++level) {
    std::vector<Vector> found;
    Vector v(dim, RingElement(field));
    std::function<void(size_t, long)> rec = [&](size_t i, long left) {
      if (i == dim) {
        if (left != 0 || sign_under_embedding(inner_product(v, v, f), Embedding::Identity) >= 0) return;
        for (const auto& x : v)
          if (!x.is_zero()) {
            if (sign_under_embedding(x, Embedding::Identity) > 0) found.push_back(v);
            break;
          }
        return;
      }
      for (long a = -left; a <= left; ++a) {
        const long rest = left - std::labs(a);
        for (long b = quad ? -rest : 0; b <= (quad ? rest : 0); ++b) {
          v[i] = RingElement(field, a, b);
          rec(i + 1, rest - std::labs(b));
        }
      }
      v[i] = RingElement(field);
    };
    rec(0, level);
    if (found.empty()) continue;
    std::sort(found.begin(), found.end(), [](const Vector& x, const Vector& y) {
      const long tx = trace_size(x), ty = trace_size(y);
      if (tx != ty) return tx < ty;
      return lex_less(x, y);
    });
    return to_field(found.front());
  }
  throw Error("no timelike vector with small coordinates; supply a basepoint");
}

std::vector<Root> stabilizer_chamber(const GramForm& f, const FieldVector& u0, std::vector<long> weights) {
  const ShellEnumerator en(f, u0, {});
  const FieldElement zero{RingElement(f.field())};
  std::vector<Vector> all;
  for (const auto& s : f.root_norms())
    for (auto& e : en.enumerate(s, zero))
      if (is_primitive(e) && is_crystallographic(e, f)) all.push_back(std::move(e));
  if (all.empty()) return {};

  // The chamber containing the direction dual to w: keep the roots with
  // w.e < 0 and accept them greedily by increasing (w.e)^2/(e,e).
  auto attempt = [&](const std::vector<long>& w) -> std::optional<std::vector<Root>> {
    struct Candidate {
      RingElement lambda, norm;
      const Vector* e;
    };
    std::vector<Candidate> neg;
    for (const auto& e : all) {
      RingElement lambda(f.field());
      for (size_t i = 0; i < e.size(); ++i) lambda += e[i] * w[i];
      const int sg = sign_under_embedding(lambda, Embedding::Identity);
      if (sg == 0) return std::nullopt;
      if (sg < 0) neg.push_back({lambda, inner_product(e, e, f), &e});
    }
    std::stable_sort(neg.begin(), neg.end(), [](const Candidate& x, const Candidate& y) {
      const RingElement d = x.lambda * x.lambda * y.norm - y.lambda * y.lambda * x.norm;
      const int sg = sign_under_embedding(d, Embedding::Identity);
      if (sg != 0) return sg < 0;
      return lex_less(*x.e, *y.e);
    });
    std::vector<Root> chamber;
    for (const auto& c : neg) {
      bool ok = true;
      for (const auto& r : chamber)
        if (sign_under_embedding(inner_product(*c.e, r.e(), f), Embedding::Identity) > 0) {
          ok = false;
          break;
        }
      if (ok) chamber.emplace_back(*c.e, f);
    }
    return chamber;
  };

  const size_t dim = f.dim();
  if (!weights.empty()) {
    if (weights.size() != dim) throw Error("chamber weights need " + std::to_string(dim) + " entries");
    auto r = attempt(weights);
    if (!r) throw Error("chamber weights vanish on a root orthogonal to the basepoint");
    return *r;
  }
  std::vector<long> w(dim);
  for (size_t i = 0; i < dim; ++i) w[i] = static_cast<long>(dim - i);
  if (auto r = attempt(w)) return *r;
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<long> pick(1, 1000003);
  for (int tries = 0; tries < 64; ++tries) {
    for (auto& x : w) x = pick(rng);
    if (auto r = attempt(w)) return *r;
  }
  throw Error("could not find a generic direction for the stabilizer chamber");
}

FieldElement root_priority(const Root& r, const GramForm& f, const FieldVector& u0) {
  const FieldElement k = inner_product(r.e(), u0, f);
  return k * k / FieldElement(r.norm());
}

VinbergSearch::VinbergSearch(const GramForm& f, FieldVector u0, std::vector<Root> accepted, const RunConfig& cfg)
    : form_(&f), u0_(std::move(u0)), cfg_(cfg), accepted_(std::move(accepted)), start_(std::chrono::steady_clock::now()) {
  u0_norm_ = inner_product(u0_, u0_, f);
  height_unit_ = height_generator(f, u0_);
  for (const auto& r : accepted_)
    (inner_product(r.e(), u0_, f).is_zero() ? cone_ : walls_).push_back(r.e());
  enumerator_ = std::make_unique<ShellEnumerator>(f, u0_, cone_, cfg_.threads);
  band_lo_ = FieldElement(RingElement(f.field()));
  band_hi_ = band_lo_;
}

bool VinbergSearch::admissible_candidate(const Vector& e) const {
  for (const auto& r : accepted_)
    if (sign_under_embedding(inner_product(e, r.e(), *form_), Embedding::Identity) > 0) return false;
  return is_primitive(e) && is_crystallographic(e, *form_);
}

void VinbergSearch::next_band() {
  const GramForm& f = *form_;
  const FieldSpec& field = f.field();
  const auto& norms = f.root_norms();
  if (band_hi_.is_zero()) {
    // first band ends at the smallest conceivable priority g^2/s_max
    FieldElement smax(norms.front());
    for (const auto& s : norms)
      if (less_by_identity(smax, FieldElement(s))) smax = FieldElement(s);
    band_hi_ = height_unit_ * height_unit_ / smax;
  } else {
    band_lo_ = band_hi_;
    band_hi_ = band_hi_ * FieldElement::integer(field, 2);
  }
  pending_.clear();
  pending_pos_ = 0;
  const long double g1 = std::fabs(height_unit_.to_real(Embedding::Identity));
  const long double g2 = std::fabs(height_unit_.to_real(Embedding::Conjugate));
  const long double hi = band_hi_.to_real();
  const long double n2 = u0_norm_.to_real(Embedding::Conjugate);
  for (const auto& s : norms) {
    const long double s1 = s.to_real(Embedding::Identity), s2 = s.to_real(Embedding::Conjugate);
    const long double t1 = std::sqrt(hi * s1) / g1;
    const long double t2 = field.is_rational() ? t1 : std::sqrt(std::max(0.0L, s2 * n2)) / g2;
    for (const auto& t : ring_box(field, -t1, t1, -t2, t2)) {
      const FieldElement k = height_unit_ * FieldElement(t);
      if (sign_under_embedding(k, Embedding::Identity) >= 0) continue;
      const FieldElement p = k * k / FieldElement(s);
      if (less_by_identity(p, band_lo_) || !less_by_identity(p, band_hi_)) continue;
      if (!field.is_rational() && sign_under_embedding(FieldElement(s) * u0_norm_ - k * k, Embedding::Conjugate) < 0)
        continue;
      pending_.push_back({s, k, p});
    }
  }
  std::sort(pending_.begin(), pending_.end(), [](const Shell& x, const Shell& y) {
    const auto c = compare_by_identity_embedding(x.priority, y.priority);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    const auto cs = compare_by_identity_embedding(FieldElement(x.s), FieldElement(y.s));
    if (cs != std::strong_ordering::equal) return cs == std::strong_ordering::less;
    return less_by_identity(y.k, x.k);
  });
}

VinbergSearch::Step VinbergSearch::step() {
  for (;;) {
    if (accepted_.size() >= cfg_.max_roots) {
      cap_ = "max_roots";
      return Step::Cap;
    }
    if (in_shell_) {
      while (current_pos_ < current_.size()) {
        const Vector& e = current_[current_pos_++];
        if (admissible_candidate(e)) {
          accepted_.emplace_back(e, *form_);
          walls_.push_back(e);
          shell_found_ = true;
          return Step::Root;
        }
      }
      in_shell_ = false;
      if (shell_found_) {
        shell_found_ = false;
        return Step::ShellEnd;
      }
    }
    if (pending_pos_ == pending_.size()) {
      if (cfg_.max_priority && !band_hi_.is_zero() && less_by_identity(*cfg_.max_priority, band_hi_)) {
        cap_ = "max_priority";
        return Step::Cap;
      }
      next_band();
      continue;
    }
    if (cfg_.max_norm_shells != 0 && shells_searched_ >= cfg_.max_norm_shells) {
      cap_ = "max_norm_shells";
      return Step::Cap;
    }
    if (cfg_.max_seconds > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() > cfg_.max_seconds) {
      cap_ = "max_seconds";
      return Step::Cap;
    }
    const Shell& sh = pending_[pending_pos_++];
    if (cfg_.max_priority && less_by_identity(*cfg_.max_priority, sh.priority)) {
      cap_ = "max_priority";
      return Step::Cap;
    }
    current_ = enumerator_->enumerate(sh.s, sh.k, walls_);
    current_pos_ = 0;
    in_shell_ = true;
    ++shells_searched_;
  }
}

std::optional<Root> next_root(const GramForm& f, const FieldVector& u0, const std::vector<Root>& accepted,
                              const RunConfig& cfg) {
  VinbergSearch search(f, u0, accepted, cfg);
  for (;;) {
    switch (search.step()) {
      case VinbergSearch::Step::Root: return search.last();
      case VinbergSearch::Step::ShellEnd: break;
      case VinbergSearch::Step::Cap: return std::nullopt;
    }
  }
}

RunVerdict run(const GramForm& f, const RunConfig& cfg, const std::optional<FieldVector>& basepoint) {
  const AdmissibilityReport adm = check_admissible(f);
  if (!adm.admissible()) throw Error("form is not admissible: " + adm.reason());
  if (cfg.max_roots < f.n() + 1)
    throw Error("max_roots must be at least n + 1 = " + std::to_string(f.n() + 1));
  if (cfg.check_interval == 0) throw Error("check_interval must be positive");

  const auto start = std::chrono::steady_clock::now();
  RunVerdict verdict;
  verdict.basepoint = choose_basepoint(f, basepoint);
  const std::vector<Root> stabilizer = stabilizer_chamber(f, verdict.basepoint, cfg.chamber_weights);
  verdict.stabilizer_roots = stabilizer.size();

  PolyhedronReport& p = verdict.polyhedron;
  p.diagram = CoxeterDiagram(f, stabilizer);
  VolumeChecker checker(p.diagram);
  VinbergSearch search(f, verdict.basepoint, stabilizer, cfg);
  size_t unchecked = stabilizer.size();
  FiniteVolumeReport last;
  auto finite = [&] {
    unchecked = 0;
    if (p.diagram.size() < f.n() + 1) return false;
    last = checker.check();
    return last.finite_volume;
  };

  for (;;) {
    const auto st = search.step();
    bool done = false;
    if (st == VinbergSearch::Step::Root) {
      p.diagram.add_root(search.last());
      ++unchecked;
      done = unchecked >= cfg.check_interval && finite();
    } else {
      done = unchecked > 0 && finite();
    }
    if (done) {
      const FiniteVolumeReport& fv = last;
      verdict.outcome = Outcome::Reflective;
      p.finite_volume = true;
      p.compact = fv.compact;
      p.ordinary_vertices = fv.ordinary_vertices;
      p.ideal_vertices = fv.ideal_vertices;
      p.symmetry_order = diagram_automorphisms(p.diagram).order;
      break;
    }
    if (st == VinbergSearch::Step::Cap) {
      verdict.outcome = Outcome::Inconclusive;
      verdict.cap_hit = search.cap();
      break;
    }
  }
  p.roots = search.roots();
  p.faces = p.roots.size();
  verdict.shells_searched = search.shells_searched();
  verdict.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return verdict;
}

}  // namespace vinberg
