#include "vinberg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace vinberg {

namespace {

int sign_of(const Integer& x) { return mpz_sgn(x.get_mpz_t()); }

// Sign of p + q*sqrt(d), d square-free > 1.
int sign_pq(const Integer& p, const Integer& q, int d) {
  const int sp = sign_of(p);
  const int sq = sign_of(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  const Integer lhs = p * p;
  const Integer rhs = q * q * d;
  return lhs > rhs ? sp : sq;
}

// x = (p + q*sqrt d) / 2 for the (1+sqrt d)/2 convention, p + q*sqrt d
// otherwise. Returns p, q in the doubled or plain form; only signs matter.
void to_sqrt_form(const RingElement& x, Embedding which, Integer& p, Integer& q) {
  const FieldSpec& f = x.field();
  if (f.omega_trace() == 1) {
    p = 2 * x.a() + x.b();
    q = x.b();
  } else {
    p = x.a();
    q = x.b();
  }
  if (which == Embedding::Conjugate) q = -q;
}

FieldSpec join(const FieldSpec& x, const FieldSpec& y) {
  if (x == y) return x;
  if (x.is_rational()) return y;
  if (y.is_rational()) return x;
  throw Error("arithmetic between elements of " + x.describe() + " and " + y.describe());
}

bool is_square_free(int d) {
  for (int p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

// |x| + |conj x| as an exact ring element whose identity value is that sum.
RingElement l1_of_embeddings(const RingElement& x) {
  RingElement r = x * sign_under_embedding(x, Embedding::Identity);
  r += x.conjugate() * sign_under_embedding(x, Embedding::Conjugate);
  return r;
}

bool l1_less(const RingElement& x, const RingElement& y) {
  return sign_under_embedding(l1_of_embeddings(x) - l1_of_embeddings(y), Embedding::Identity) < 0;
}

RingElement unit_inverse(const RingElement& u) {
  // conj(u) / N(u), N(u) = +-1
  return u.conjugate() * static_cast<long>(u.norm().get_si());
}

// Walk x * step^k to the minimum of |x| + |conj x|; step must be a unit
// with identity value > 1.
RingElement minimize_l1(RingElement x, const RingElement& step) {
  const RingElement inv = unit_inverse(step);
  for (;;) {
    RingElement up = x * step;
    if (l1_less(up, x)) {
      x = std::move(up);
      continue;
    }
    RingElement down = x * inv;
    if (l1_less(down, x)) {
      x = std::move(down);
      continue;
    }
    // Ties between neighbours resolve to the smaller identity value.
    if (!l1_less(x, down) && !l1_less(down, x)) x = std::move(down);
    return x;
  }
}

}  // namespace

// ---------------------------------------------------------------- FieldSpec

bool FieldSpec::supported(int d) { return d == 2 || d == 3 || d == 5 || d == 13 || d == 17; }

FieldSpec FieldSpec::quadratic(int d) {
  if (d <= 1 || !is_square_free(d)) throw Error("d must be a square-free integer > 1, got " + std::to_string(d));
  if (!supported(d))
    throw Error("Q(sqrt" + std::to_string(d) + ") is not on the supported ring list {2, 3, 5, 13, 17}");
  return FieldSpec(Kind::RealQuadratic, d);
}

long FieldSpec::omega_trace() const {
  if (is_rational()) return 0;
  return d_ % 4 == 1 ? 1 : 0;
}

long FieldSpec::omega_constant() const {
  if (is_rational()) return 0;
  return d_ % 4 == 1 ? (d_ - 1) / 4 : d_;
}

long double FieldSpec::sqrt_d() const { return is_rational() ? 0.0L : std::sqrt(static_cast<long double>(d_)); }

long double FieldSpec::omega_value(Embedding which) const {
  if (is_rational()) return 0.0L;
  const long double r = which == Embedding::Identity ? sqrt_d() : -sqrt_d();
  return omega_trace() == 1 ? (1.0L + r) / 2.0L : r;
}

std::string FieldSpec::describe() const {
  return is_rational() ? "Q" : "Q(sqrt" + std::to_string(d_) + ")";
}

// -------------------------------------------------------------- RingElement

RingElement::RingElement(FieldSpec field, Integer a, Integer b) : field_(field), a_(std::move(a)), b_(std::move(b)) {
  if (field_.is_rational() && b_ != 0) throw Error("rational integer with a nonzero w coefficient");
}

RingElement RingElement::omega(FieldSpec field) {
  if (field.is_rational()) throw Error("w is undefined over Q");
  return RingElement(field, 0, 1);
}

void RingElement::check_field(const RingElement& o) const { (void)join(field_, o.field_); }

bool RingElement::is_unit() const {
  const Integer n = norm();
  return n == 1 || n == -1;
}

RingElement RingElement::conjugate() const {
  if (field_.is_rational()) return *this;
  return RingElement(field_, a_ + b_ * field_.omega_trace(), -b_);
}

Integer RingElement::norm() const {
  if (field_.is_rational()) return a_;
  return a_ * a_ + a_ * b_ * field_.omega_trace() - b_ * b_ * field_.omega_constant();
}

Integer RingElement::trace() const {
  if (field_.is_rational()) return a_;
  return 2 * a_ + b_ * field_.omega_trace();
}

long double RingElement::to_real(Embedding which) const {
  long double v = static_cast<long double>(a_.get_d());
  if (b_ != 0) v += static_cast<long double>(b_.get_d()) * field_.omega_value(which);
  return v;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  field_ = join(field_, o.field_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  field_ = join(field_, o.field_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  field_ = join(field_, o.field_);
  if (b_ == 0 && o.b_ == 0) {
    a_ *= o.a_;
    return *this;
  }
  const Integer bb = b_ * o.b_;
  Integer na = a_ * o.a_ + bb * field_.omega_constant();
  Integer nb = a_ * o.b_ + b_ * o.a_ + bb * field_.omega_trace();
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

RingElement& RingElement::operator*=(long n) {
  a_ *= n;
  b_ *= n;
  return *this;
}

RingElement RingElement::operator-() const { return RingElement(field_, -a_, -b_); }

std::string RingElement::str() const {
  if (b_ == 0) return a_.get_str();
  if (a_ == 0) return b_.get_str() + "*w";
  std::string s = a_.get_str();
  if (b_ > 0) s += "+";
  s += b_.get_str();
  s += "*w";
  return s;
}

RingElement RingElement::parse(std::string_view text, FieldSpec field) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw Error("empty ring element");

  Integer a = 0, b = 0;
  size_t pos = 0;
  bool any = false;
  while (pos < t.size()) {
    int sign = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      sign = t[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      throw Error("malformed ring element '" + t + "'");
    }
    size_t start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    std::string digits = t.substr(start, pos - start);
    bool is_w = false;
    if (pos < t.size() && (t[pos] == '*' || t[pos] == 'w')) {
      if (t[pos] == '*') ++pos;
      if (pos >= t.size() || t[pos] != 'w') throw Error("malformed ring element '" + t + "'");
      ++pos;
      is_w = true;
    }
    if (digits.empty()) {
      if (!is_w) throw Error("malformed ring element '" + t + "'");
      digits = "1";
    }
    Integer v(digits, 10);
    if (sign < 0) v = -v;
    (is_w ? b : a) += v;
    any = true;
  }
  if (b != 0 && field.is_rational()) throw Error("element '" + t + "' uses w over Q");
  return RingElement(field, a, b);
}

// ------------------------------------------------------------- FieldElement

FieldElement::FieldElement(RingElement num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error("zero denominator");
  normalize();
}

void FieldElement::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num_.a().get_mpz_t(), num_.b().get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    Integer a = num_.a() / g, b = num_.b() / g;
    num_ = RingElement(num_.field(), std::move(a), std::move(b));
    den_ /= g;
  }
}

RingElement FieldElement::to_ring() const {
  if (den_ != 1) throw Error("element " + str() + " is not integral");
  return num_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (field().is_rational()) return FieldElement(RingElement(field(), den_), num_.a());
  if (num_.b() == 0) return FieldElement(RingElement(field(), den_), num_.a());
  const Integer n = num_.norm();
  return FieldElement(num_.conjugate() * RingElement(num_.field(), den_), n);
}

long double FieldElement::to_real(Embedding which) const {
  if (den_ == 1) return num_.to_real(which);
  // Scale through mpf to keep precision for large numerators.
  mpf_class a(num_.a(), 128), b(num_.b(), 128), d(den_, 128);
  mpf_class qa = a / d, qb = b / d;
  long double v = static_cast<long double>(qa.get_d());
  if (num_.b() != 0) v += static_cast<long double>(qb.get_d()) * num_.field().omega_value(which);
  return v;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * RingElement(FieldSpec(), o.den_) + o.num_ * RingElement(FieldSpec(), den_);
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

std::string FieldElement::str() const {
  if (den_ == 1) return num_.str();
  if (num_.b() == 0) return num_.str() + "/" + den_.get_str();
  return "(" + num_.str() + ")/" + den_.get_str();
}

FieldElement FieldElement::parse(std::string_view text, FieldSpec field) {
  const auto slash = text.rfind('/');
  if (slash == std::string_view::npos) return FieldElement(RingElement::parse(text, field));
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  num = trim(num);
  den = trim(den);
  if (!num.empty() && num.front() == '(') {
    if (num.back() != ')') throw Error("unbalanced parentheses in '" + std::string(text) + "'");
    num = num.substr(1, num.size() - 2);
  }
  const RingElement d = RingElement::parse(den, FieldSpec());
  return FieldElement(RingElement::parse(num, field), d.a());
}

// -------------------------------------------------------------------- free

int sign_under_embedding(const RingElement& x, Embedding which) {
  if (x.b() == 0) return sign_of(x.a());
  Integer p, q;
  to_sqrt_form(x, which, p, q);
  return sign_pq(p, q, x.field().d());
}

int sign_under_embedding(const FieldElement& x, Embedding which) {
  return sign_under_embedding(x.numerator(), which);
}

bool is_totally_positive(const RingElement& x) {
  if (sign_under_embedding(x, Embedding::Identity) <= 0) return false;
  return x.field().is_rational() || sign_under_embedding(x, Embedding::Conjugate) > 0;
}

bool is_totally_positive(const FieldElement& x) { return is_totally_positive(x.numerator()); }

std::strong_ordering compare_by_identity_embedding(const FieldElement& x, const FieldElement& y) {
  const int s = sign_under_embedding(x - y, Embedding::Identity);
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

bool divides(const RingElement& x, const RingElement& y) {
  if (x.is_zero()) throw Error("division by zero");
  if (x.b() == 0)
    return mpz_divisible_p(y.a().get_mpz_t(), x.a().get_mpz_t()) && mpz_divisible_p(y.b().get_mpz_t(), x.a().get_mpz_t());
  const RingElement num = y * x.conjugate();
  const Integer n = x.norm();
  return mpz_divisible_p(num.a().get_mpz_t(), n.get_mpz_t()) && mpz_divisible_p(num.b().get_mpz_t(), n.get_mpz_t());
}

RingElement divide_exact(const RingElement& y, const RingElement& x) {
  if (x.is_zero()) throw Error("division by zero");
  const bool integral = x.b() == 0;
  const RingElement num = integral ? y : y * x.conjugate();
  const Integer n = integral ? x.a() : x.norm();
  if (!mpz_divisible_p(num.a().get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(num.b().get_mpz_t(), n.get_mpz_t()))
    throw Error(x.str() + " does not divide " + y.str());
  Integer a = num.a() / n, b = num.b() / n;
  return RingElement(num.field(), std::move(a), std::move(b));
}

std::pair<RingElement, RingElement> euclidean_divide(const RingElement& y, const RingElement& x) {
  if (x.is_zero()) throw Error("division by zero");
  const FieldSpec field = y.field().is_rational() ? x.field() : y.field();
  if (field.is_rational()) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), y.a().get_mpz_t(), x.a().get_mpz_t());
    if (r < 0) {
      r += abs(x.a());
      q -= sign_of(x.a());
    }
    return {RingElement(field, q), RingElement(field, r)};
  }
  const bool integral = x.b() == 0;
  const RingElement num = integral ? y : y * x.conjugate();
  const Integer n = integral ? x.a() : x.norm();
  Integer qa, qb;
  mpz_fdiv_q(qa.get_mpz_t(), num.a().get_mpz_t(), n.get_mpz_t());
  mpz_fdiv_q(qb.get_mpz_t(), num.b().get_mpz_t(), n.get_mpz_t());
  const Integer target = abs(RingElement(field, x.a(), x.b()).norm());
  bool found = false;
  RingElement best_q(field), best_r(field);
  Integer best_norm;
  for (int da = -2; da <= 3; ++da) {
    for (int db = -2; db <= 3; ++db) {
      RingElement q(field, qa + da, qb + db);
      RingElement r = y - q * x;
      Integer rn = abs(r.norm());
      if (!found || rn < best_norm) {
        found = true;
        best_norm = rn;
        best_q = q;
        best_r = r;
      }
    }
  }
  if (best_norm >= target) throw Error("no Euclidean quotient found in " + field.describe());
  return {best_q, best_r};
}

RingElement fundamental_unit(FieldSpec field) {
  if (field.is_rational()) return RingElement::integer(field, 1);
  switch (field.d()) {
    case 2: return RingElement(field, 1, 1);
    case 3: return RingElement(field, 2, 1);
    case 5: return RingElement(field, 0, 1);
    case 13: return RingElement(field, 1, 1);
    case 17: return RingElement(field, 3, 2);
  }
  throw Error("no fundamental unit recorded for " + field.describe());
}

std::vector<RingElement> totally_positive_unit_classes(FieldSpec field) {
  std::vector<RingElement> out{RingElement::integer(field, 1)};
  if (field.is_rational()) return out;
  const RingElement eps = fundamental_unit(field);
  if (eps.norm() == 1) out.push_back(is_totally_positive(eps) ? eps : -eps);
  return out;
}

RingElement canonical_associate(const RingElement& x) {
  if (x.is_zero()) return x;
  RingElement y = sign_under_embedding(x, Embedding::Identity) < 0 ? -x : x;
  if (y.field().is_rational()) return y;
  return minimize_l1(std::move(y), fundamental_unit(y.field()));
}

RingElement gcd(const RingElement& x, const RingElement& y) {
  RingElement p = x, q = y;
  while (!q.is_zero()) {
    auto [quot, rem] = euclidean_divide(p, q);
    p = std::move(q);
    q = std::move(rem);
  }
  return canonical_associate(p);
}

std::vector<RingElement> totally_positive_divisors(const RingElement& x) {
  if (x.is_zero()) throw Error("divisors of zero");
  const FieldSpec field = x.field();
  std::vector<RingElement> out;
  if (field.is_rational()) {
    const Integer m = abs(x.a());
    for (Integer t = 1; t * t <= m; ++t) {
      if (m % t != 0) continue;
      out.push_back(RingElement(field, t));
      if (t * t != m) out.push_back(RingElement(field, m / t));
    }
    std::sort(out.begin(), out.end(), [](const RingElement& a, const RingElement& b) { return a.a() < b.a(); });
    return out;
  }

  const RingElement eps = fundamental_unit(field);
  const RingElement eps2 = eps * eps;
  const long double e = eps.to_real(Embedding::Identity);
  const long double w1 = field.omega_value(Embedding::Identity);
  const Integer m = abs(x.norm());
  if (!m.fits_slong_p()) throw Error("divisor search limited to machine-size norms");
  const long mm = m.get_si();

  auto canonical_mod_squares = [&](RingElement s) { return minimize_l1(std::move(s), eps2); };

  for (long t = 1; t <= mm; ++t) {
    if (mm % t != 0) continue;
    // Balanced associates have both embeddings bounded by eps*sqrt(t).
    const long double bound = e * std::sqrt(static_cast<long double>(t)) + 1.0L;
    const long bmax = static_cast<long>(std::ceil(2.0L * bound / field.sqrt_d())) + 1;
    for (long b = -bmax; b <= bmax; ++b) {
      const long double center = -static_cast<long double>(b) * w1;
      const long alo = static_cast<long>(std::floor(center - bound)) - 1;
      const long ahi = static_cast<long>(std::ceil(center + bound)) + 1;
      for (long a = alo; a <= ahi; ++a) {
        RingElement delta(field, a, b);
        if (abs(delta.norm()) != t || !divides(delta, x)) continue;
        for (const RingElement& cand : {delta, -delta, delta * eps, -(delta * eps)}) {
          if (!is_totally_positive(cand)) continue;
          for (const RingElement& u : totally_positive_unit_classes(field)) {
            RingElement s = canonical_mod_squares(cand * u);
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RingElement& a, const RingElement& b) {
    return compare_by_identity_embedding(a, b) == std::strong_ordering::less;
  });
  return out;
}

}  // namespace vinberg
