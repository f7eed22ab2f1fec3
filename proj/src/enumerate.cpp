#include "vinberg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace vinberg {

namespace {

// Upper-triangular LDL^T of a positive definite matrix in the Fincke-Pohst
// layout: q(z) = sum_j d_j (z_j + sum_{i>j} u_ji z_i)^2.
void decompose(std::vector<std::vector<long double>> q, std::vector<long double>& d,
               std::vector<std::vector<long double>>& u) {
  const size_t n = q.size();
  for (size_t i = 0; i < n; ++i) {
    if (!(q[i][i] > 0)) throw Error("enumeration form is not positive definite");
    for (size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (size_t k = i + 1; k < n; ++k)
      for (size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  d.assign(n, 0);
  u.assign(n, std::vector<long double>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    d[i] = q[i][i];
    for (size_t j = i + 1; j < n; ++j) u[i][j] = q[i][j];
  }
}

long double slack(long double x) { return 1e-9L * (1.0L + std::fabs(x)); }

constexpr long long kCoordinateLimit = 1LL << 52;

long long floor_ll(long double x) {
  if (!(std::fabs(x) < static_cast<long double>(kCoordinateLimit))) throw Error("enumeration coordinate out of range");
  return static_cast<long long>(std::floor(x));
}

long long ceil_ll(long double x) {
  if (!(std::fabs(x) < static_cast<long double>(kCoordinateLimit))) throw Error("enumeration coordinate out of range");
  return static_cast<long long>(std::ceil(x));
}

}  // namespace

struct ShellEnumerator::Work {
  const RingElement* s = nullptr;
  const FieldElement* k = nullptr;
  long double r1 = 0, r2 = 0;
  std::vector<long long> za, zb;
  std::vector<long double> x1, x2;
  std::vector<long double> p1, p2;  // p[j] = contribution of levels >= j
  std::vector<Vector> found;
  unsigned long long leaves = 0;
  const std::vector<ShellEnumerator::Halfspace>* hs = nullptr;
  std::vector<long double> hsum, hmag;  // per halfspace, per level
  std::vector<long double> mz;          // per level: M z restricted to fixed levels
  std::vector<long double> q0;          // per level: q(z) with the free levels at 0
};

ShellEnumerator::ShellEnumerator(const GramForm& f, FieldVector u0, std::vector<Vector> cone, unsigned threads)
    : form_(&f), field_(f.field()), u0_(std::move(u0)), threads_(std::max(1u, threads)) {
  const size_t dim = f.dim();
  n_ = f.n();
  cone_ = cone.size();
  if (u0_.size() != dim) throw Error("basepoint has the wrong dimension");
  u0_norm_ = inner_product(u0_, u0_, f);
  if (sign_under_embedding(u0_norm_, Embedding::Identity) >= 0) throw Error("basepoint is not timelike");
  if (!field_.is_rational() && sign_under_embedding(u0_norm_, Embedding::Conjugate) <= 0)
    throw Error("conjugate form is not positive definite at the basepoint");

  const FieldVector gu0 = f.apply(u0_);
  FieldMatrix constraints(1 + cone_, dim);
  for (size_t i = 0; i < dim; ++i) constraints(0, i) = gu0[i];
  for (size_t a = 0; a < cone_; ++a) {
    if (cone[a].size() != dim) throw Error("cone vector has the wrong dimension");
    if (!inner_product(cone[a], u0_, f).is_zero()) throw Error("cone vector is not orthogonal to the basepoint");
    const Vector gc = f.apply(cone[a]);
    for (size_t i = 0; i < dim; ++i) constraints(a + 1, i) = gc[i];
  }
  if (rank(constraints) != 1 + cone_) throw Error("cone vectors are linearly dependent");
  std::vector<Vector> basis = cone;
  for (auto& v : integral_kernel(clear_row_denominators(constraints))) basis.push_back(make_primitive(v));
  if (basis.size() != n_) throw Error("internal: complement basis has the wrong size");

  // Gram of the coordinate basis; (w,w) = y^T M^{-1} y with y_a = (e, b_a).
  FieldMatrix m(n_, n_);
  for (size_t a = 0; a < n_; ++a)
    for (size_t b = a; b < n_; ++b) m(a, b) = m(b, a) = FieldElement(inner_product(basis[a], basis[b], f));
  const FieldMatrix minv = inverse(m);
  std::vector<std::vector<long double>> q1(n_, std::vector<long double>(n_)), q2 = q1;
  for (size_t a = 0; a < n_; ++a)
    for (size_t b = 0; b < n_; ++b) {
      FieldElement v = minv(a, b);
      if ((a < cone_) != (b < cone_)) v = -v;
      q1[a][b] = v.to_real(Embedding::Identity);
      q2[a][b] = v.to_real(Embedding::Conjugate);
    }
  decompose(q1, d1_, u1_);
  m1_ = q1;
  if (!field_.is_rational()) {
    decompose(q2, d2_, u2_);
    omega1_ = field_.omega_value(Embedding::Identity);
    omega2_ = field_.omega_value(Embedding::Conjugate);
  }

  FieldMatrix b(dim, dim);
  for (size_t i = 0; i < dim; ++i) b(0, i) = gu0[i];
  for (size_t a = 0; a < n_; ++a) {
    const Vector gb = f.apply(basis[a]);
    for (size_t i = 0; i < dim; ++i) b(a + 1, i) = FieldElement(gb[i]);
  }
  const FieldMatrix binv = inverse(b);
  denom_ = 1;
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j)
      mpz_lcm(denom_.get_mpz_t(), denom_.get_mpz_t(), binv(i, j).denominator().get_mpz_t());
  scaled_inverse_ = RingMatrix(dim, dim);
  const FieldElement scale(RingElement(field_, denom_));
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) scaled_inverse_(i, j) = (binv(i, j) * scale).to_ring();
}

bool ShellEnumerator::push_halfspaces(Work& w, size_t j) const {
  if (w.hs->empty()) return true;
  const size_t stride = n_ + 1;
  const long double z = w.x1[j];
  const long double* prev = &w.mz[(j + 1) * n_];
  long double* cur = &w.mz[j * n_];
  for (size_t i = 0; i < j; ++i) cur[i] = prev[i] + m1_[i][j] * z;
  w.q0[j] = w.q0[j + 1] + 2 * z * prev[j] + m1_[j][j] * z * z;
  bool alive = true;
  for (size_t h = 0; h < w.hs->size(); ++h) {
    const Halfspace& H = (*w.hs)[h];
    const long double t = H.beta[j] * z;
    const long double v = w.hsum[h * stride + j + 1] + t, m = w.hmag[h * stride + j + 1] + std::fabs(t);
    w.hsum[h * stride + j] = v;
    w.hmag[h * stride + j] = m;
    if (!alive || j > H.prune_from) continue;
    const long double tol = slack(m) * 10;
    if (v > tol) {
      alive = false;
      continue;
    }
    // The free levels lie in the simplex z >= 0, sum beta_i z_i <= -v; q is
    // convex, so its maximum there sits at a vertex.
    if (j > H.positive_from || j == 0) continue;
    const long double budget = std::max(0.0L, -v) + tol;
    long double best = w.q0[j];
    for (size_t i = 0; i < j; ++i) {
      const long double s = budget / H.beta[i];
      best = std::max(best, w.q0[j] + s * (2 * cur[i] + m1_[i][i] * s));
    }
    if (best < w.r1 - slack(w.r1) * 10 - slack(best) * 10) alive = false;
  }
  return alive;
}

void ShellEnumerator::leaf(Work& w) const {
  ++w.leaves;
  const size_t dim = n_ + 1;
  const Integer& kd = w.k->denominator();
  const RingElement& kn = w.k->numerator();
  const Integer total = denom_ * kd;
  Vector e(dim, RingElement(field_));
  std::vector<RingElement> y(n_);
  for (size_t a = 0; a < n_; ++a) {
    RingElement z(field_, Integer(static_cast<long>(w.za[a])), field_.is_rational() ? Integer(0) : Integer(static_cast<long>(w.zb[a])));
    if (a < cone_) {
      if (sign_under_embedding(z, Embedding::Identity) < 0) return;
      z = -z;
    }
    y[a] = z * RingElement(field_, kd);
  }
  for (size_t i = 0; i < dim; ++i) {
    RingElement acc = kn * scaled_inverse_(i, 0);
    for (size_t a = 0; a < n_; ++a)
      if (!y[a].is_zero() && !scaled_inverse_(i, a + 1).is_zero()) acc += y[a] * scaled_inverse_(i, a + 1);
    if (!mpz_divisible_p(acc.a().get_mpz_t(), total.get_mpz_t()) ||
        !mpz_divisible_p(acc.b().get_mpz_t(), total.get_mpz_t()))
      return;
    Integer ea = acc.a() / total, eb = acc.b() / total;
    e[i] = RingElement(field_, std::move(ea), std::move(eb));
  }
  if (!(inner_product(e, e, *form_) == *w.s)) return;
  const size_t stride = n_ + 1;
  for (size_t h = 0; h < w.hs->size(); ++h) {
    const long double v = w.hsum[h * stride], tol = slack(w.hmag[h * stride]) * 10;
    if (v < -tol) continue;
    if (v > tol) return;
    if (sign_under_embedding(inner_product(e, *(*w.hs)[h].h, *form_), Embedding::Identity) > 0) return;
  }
  w.found.push_back(std::move(e));
}

void ShellEnumerator::search(Work& w, int level) const {
  if (level < 0) {
    if (std::fabs(w.p1[0] - w.r1) > slack(w.r1) * 10) return;
    if (!field_.is_rational() && std::fabs(w.p2[0] - w.r2) > slack(w.r2) * 10) return;
    leaf(w);
    return;
  }
  const size_t j = static_cast<size_t>(level);
  long double c1 = 0;
  for (size_t i = j + 1; i < n_; ++i) c1 += u1_[j][i] * w.x1[i];
  const long double rem1 = std::max(0.0L, w.r1 - w.p1[j + 1]);
  const long double rad1 = std::sqrt(rem1 / d1_[j]);
  long double lo1 = -c1 - rad1 - slack(rad1 + c1), hi1 = -c1 + rad1 + slack(rad1 + c1);
  if (j < cone_) lo1 = std::max(lo1, -slack(0));
  if (lo1 > hi1) return;

  auto descend = [&](long long a, long long b, long double v1, long double v2, long double c2) {
    const long double t1 = v1 + c1;
    const long double p1 = w.p1[j + 1] + d1_[j] * t1 * t1;
    if (p1 > w.r1 + slack(w.r1)) return;
    w.p1[j] = p1;
    if (!field_.is_rational()) {
      const long double t2 = v2 + c2;
      const long double p2 = w.p2[j + 1] + d2_[j] * t2 * t2;
      if (p2 > w.r2 + slack(w.r2)) return;
      w.p2[j] = p2;
    }
    w.za[j] = a;
    w.zb[j] = b;
    w.x1[j] = v1;
    w.x2[j] = v2;
    if (!push_halfspaces(w, j)) return;
    search(w, level - 1);
  };

  if (field_.is_rational()) {
    for (long long a = ceil_ll(lo1), ahi = floor_ll(hi1); a <= ahi; ++a)
      descend(a, 0, static_cast<long double>(a), 0, 0);
    return;
  }

  long double c2 = 0;
  for (size_t i = j + 1; i < n_; ++i) c2 += u2_[j][i] * w.x2[i];
  const long double rem2 = std::max(0.0L, w.r2 - w.p2[j + 1]);
  const long double rad2 = std::sqrt(rem2 / d2_[j]);
  const long double lo2 = -c2 - rad2 - slack(rad2 + c2), hi2 = -c2 + rad2 + slack(rad2 + c2);
  const long double delta = omega1_ - omega2_;
  const long long blo = ceil_ll((lo1 - hi2) / delta - 1e-12L), bhi = floor_ll((hi1 - lo2) / delta + 1e-12L);
  for (long long b = blo; b <= bhi; ++b) {
    const long double bw1 = static_cast<long double>(b) * omega1_, bw2 = static_cast<long double>(b) * omega2_;
    const long double alo = std::max(lo1 - bw1, lo2 - bw2), ahi = std::min(hi1 - bw1, hi2 - bw2);
    if (alo > ahi) continue;
    for (long long a = ceil_ll(alo), amax = floor_ll(ahi); a <= amax; ++a) {
      const long double ad = static_cast<long double>(a);
      descend(a, b, ad + bw1, ad + bw2, c2);
    }
  }
}

std::vector<Vector> ShellEnumerator::enumerate(const RingElement& s, const FieldElement& k,
                                               const std::vector<Vector>& halfspaces) const {
  const FieldElement radius = FieldElement(s) - k * k / u0_norm_;
  const int sign1 = sign_under_embedding(radius, Embedding::Identity);
  const int sign2 = field_.is_rational() ? 1 : sign_under_embedding(radius, Embedding::Conjugate);
  if (sign1 < 0 || sign2 < 0) return {};

  // (e,h) = alpha + sum_a beta_a z_a on the identity embedding. Where every
  // still-free coordinate is a cone coordinate with beta_a >= 0 the partial
  // sum bounds (e,h) from below.
  std::vector<Halfspace> hs;
  const size_t dim = n_ + 1;
  const FieldElement inv_denom = FieldElement::integer(field_, 1) / FieldElement(RingElement(field_, denom_));
  for (const auto& h : halfspaces) {
    if (h.size() != dim) throw Error("halfspace vector has the wrong dimension");
    const Vector gh = form_->apply(h);
    auto column_product = [&](size_t c) {
      RingElement acc(field_);
      for (size_t i = 0; i < dim; ++i)
        if (!scaled_inverse_(i, c).is_zero()) acc += scaled_inverse_(i, c) * gh[i];
      return FieldElement(acc) * inv_denom;
    };
    Halfspace H{&h, (k * column_product(0)).to_real(Embedding::Identity), std::vector<long double>(n_), 0, 0};
    bool nonnegative = true, positive = true;
    for (size_t a = 0; a < n_; ++a) {
      FieldElement b = column_product(a + 1);
      if (a < cone_) b = -b;
      H.beta[a] = b.to_real(Embedding::Identity);
      const int sb = sign_under_embedding(b, Embedding::Identity);
      if (nonnegative && a < cone_ && sb >= 0)
        H.prune_from = a + 1;
      else
        nonnegative = false;
      if (positive && a < cone_ && sb > 0)
        H.positive_from = a + 1;
      else
        positive = false;
    }
    hs.push_back(std::move(H));
  }

  auto fresh = [&]() {
    Work w;
    w.s = &s;
    w.k = &k;
    w.r1 = radius.to_real(Embedding::Identity);
    w.r2 = field_.is_rational() ? 0 : radius.to_real(Embedding::Conjugate);
    w.za.assign(n_, 0);
    w.zb.assign(n_, 0);
    w.x1.assign(n_, 0);
    w.x2.assign(n_, 0);
    w.p1.assign(n_ + 1, 0);
    w.p2.assign(n_ + 1, 0);
    w.hs = &hs;
    w.hsum.assign(hs.size() * (n_ + 1), 0);
    w.hmag.assign(hs.size() * (n_ + 1), 0);
    w.mz.assign((n_ + 1) * n_, 0);
    w.q0.assign(n_ + 1, 0);
    for (size_t h = 0; h < hs.size(); ++h) {
      w.hsum[h * (n_ + 1) + n_] = hs[h].alpha;
      w.hmag[h * (n_ + 1) + n_] = std::fabs(hs[h].alpha);
    }
    return w;
  };

  std::vector<Vector> out;
  leaves_ = 0;
  if (n_ == 0) return out;

  // Collect the top-level branches, then share them between workers.
  struct Branch {
    long long a, b;
    long double v1, v2;
  };
  std::vector<Branch> branches;
  {
    Work probe = fresh();
    const size_t top = n_ - 1;
    const long double rad1 = std::sqrt(std::max(0.0L, probe.r1) / d1_[top]);
    long double lo1 = -rad1 - slack(rad1), hi1 = rad1 + slack(rad1);
    if (top < cone_) lo1 = std::max(lo1, -slack(0));
    if (field_.is_rational()) {
      for (long long a = ceil_ll(lo1), ahi = floor_ll(hi1); a <= ahi; ++a)
        branches.push_back({a, 0, static_cast<long double>(a), 0});
    } else {
      const long double rad2 = std::sqrt(std::max(0.0L, probe.r2) / d2_[top]);
      const long double lo2 = -rad2 - slack(rad2), hi2 = rad2 + slack(rad2);
      const long double delta = omega1_ - omega2_;
      const long long blo = ceil_ll((lo1 - hi2) / delta - 1e-12L), bhi = floor_ll((hi1 - lo2) / delta + 1e-12L);
      for (long long b = blo; b <= bhi; ++b) {
        const long double bw1 = static_cast<long double>(b) * omega1_, bw2 = static_cast<long double>(b) * omega2_;
        const long double alo = std::max(lo1 - bw1, lo2 - bw2), ahi = std::min(hi1 - bw1, hi2 - bw2);
        if (alo > ahi) continue;
        for (long long a = ceil_ll(alo), amax = floor_ll(ahi); a <= amax; ++a) {
          const long double ad = static_cast<long double>(a);
          branches.push_back({a, b, ad + bw1, ad + bw2});
        }
      }
    }
  }

  auto run_branch = [&](Work& w, const Branch& br) {
    const size_t top = n_ - 1;
    const long double p1 = d1_[top] * br.v1 * br.v1;
    if (p1 > w.r1 + slack(w.r1)) return;
    w.p1[top] = p1;
    if (!field_.is_rational()) {
      const long double p2 = d2_[top] * br.v2 * br.v2;
      if (p2 > w.r2 + slack(w.r2)) return;
      w.p2[top] = p2;
    }
    w.za[top] = br.a;
    w.zb[top] = br.b;
    w.x1[top] = br.v1;
    w.x2[top] = br.v2;
    if (!push_halfspaces(w, top)) return;
    search(w, static_cast<int>(top) - 1);
  };

  const unsigned workers = std::min<size_t>(threads_, std::max<size_t>(1, branches.size()));
  if (workers <= 1) {
    Work w = fresh();
    for (const auto& br : branches) run_branch(w, br);
    out = std::move(w.found);
    leaves_ = w.leaves;
  } else {
    std::atomic<size_t> next{0};
    std::mutex merge;
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&]() {
        try {
          Work w = fresh();
          for (size_t i; (i = next.fetch_add(1)) < branches.size();) run_branch(w, branches[i]);
          std::lock_guard<std::mutex> lock(merge);
          for (auto& v : w.found) out.push_back(std::move(v));
          leaves_ += w.leaves;
        } catch (...) {
          std::lock_guard<std::mutex> lock(merge);
          failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace vinberg
