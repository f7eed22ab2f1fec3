#pragma once

// Exact arithmetic in Z and in the ring of integers of a real quadratic
// field Q(sqrt d). Elements are a + b*w with w = (1 + sqrt d)/2 when
// d = 1 mod 4 and w = sqrt d otherwise.

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vinberg {

using Integer = mpz_class;

/// Thrown for every input or precondition violation in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Embedding { Identity, Conjugate };

class FieldSpec {
 public:
  enum class Kind { Rational, RealQuadratic };

  /// The rational field; its ring of integers is Z.
  FieldSpec() = default;

  static FieldSpec rational() { return {}; }
  /// Q(sqrt d) for d on the PID allow-list {2, 3, 5, 13, 17}.
  static FieldSpec quadratic(int d);
  /// Allow-list membership without constructing.
  static bool supported(int d);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  int d() const { return d_; }

  // w^2 = trace * w + constant
  long omega_trace() const;
  long omega_constant() const;

  long double omega_value(Embedding which) const;
  long double sqrt_d() const;

  /// "Q" or "Q(sqrt5)".
  std::string describe() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind k, int d) : kind_(k), d_(d) {}
  Kind kind_ = Kind::Rational;
  int d_ = 1;
};

class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(FieldSpec field, Integer a = 0, Integer b = 0);
  /// Rational integer n in the given field.
  static RingElement integer(FieldSpec field, long n) { return RingElement(field, n, 0); }
  /// The generator w.
  static RingElement omega(FieldSpec field);

  const FieldSpec& field() const { return field_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_unit() const;

  RingElement conjugate() const;
  /// Field norm x * conj(x).
  Integer norm() const;
  Integer trace() const;

  long double to_real(Embedding which = Embedding::Identity) const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);
  RingElement& operator*=(long n);
  RingElement operator-() const;
  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend RingElement operator*(RingElement x, const RingElement& y) { return x *= y; }
  friend RingElement operator*(RingElement x, long n) { return x *= n; }
  friend RingElement operator*(long n, RingElement x) { return x *= n; }

  friend bool operator==(const RingElement& x, const RingElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Canonical text form: "3", "1+2*w", "-2*w", "4-1*w".
  std::string str() const;
  static RingElement parse(std::string_view text, FieldSpec field);

 private:
  void check_field(const RingElement& o) const;

  FieldSpec field_;
  Integer a_ = 0;
  Integer b_ = 0;
};

/// numerator / denominator, denominator > 0 and coprime to the content of
/// the numerator.
class FieldElement {
 public:
  FieldElement() : den_(1) {}
  FieldElement(const RingElement& x) : num_(x), den_(1) {}  // NOLINT: implicit lift
  FieldElement(RingElement num, Integer den);
  static FieldElement integer(FieldSpec field, long n) { return FieldElement(RingElement::integer(field, n)); }

  const FieldSpec& field() const { return num_.field(); }
  const RingElement& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }
  /// Throws unless integral.
  RingElement to_ring() const;

  FieldElement conjugate() const { return FieldElement(num_.conjugate(), den_); }
  FieldElement inverse() const;
  long double to_real(Embedding which = Embedding::Identity) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }
  FieldElement operator-() const { return FieldElement(-num_, den_); }
  friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
  friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
  friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
  friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.den_ == y.den_ && x.num_ == y.num_;
  }

  /// Ring syntax when integral, otherwise "num/den" with a parenthesized
  /// numerator when it has a w part: "3/2", "(1+1*w)/2".
  std::string str() const;
  static FieldElement parse(std::string_view text, FieldSpec field);

 private:
  void normalize();
  RingElement num_;
  Integer den_;
};

/// Exact sign of the real image under the chosen embedding.
int sign_under_embedding(const RingElement& x, Embedding which);
int sign_under_embedding(const FieldElement& x, Embedding which);

bool is_totally_positive(const RingElement& x);
bool is_totally_positive(const FieldElement& x);

/// Total order by the identity real embedding.
std::strong_ordering compare_by_identity_embedding(const FieldElement& x, const FieldElement& y);

/// True iff y / x lies in the ring of integers. Throws on x == 0.
bool divides(const RingElement& x, const RingElement& y);
/// y / x, which must be exact.
RingElement divide_exact(const RingElement& y, const RingElement& x);

/// Euclidean division y = q*x + r with |N(r)| < |N(x)|.
std::pair<RingElement, RingElement> euclidean_divide(const RingElement& y, const RingElement& x);

/// Canonical associate: positive under the identity embedding and
/// minimizing |x| + |conj x|, which is the minimal-trace totally positive
/// associate whenever one exists. Zero maps to zero.
RingElement canonical_associate(const RingElement& x);

/// Canonicalized greatest common divisor; gcd(x, 0) = canonical_associate(x).
RingElement gcd(const RingElement& x, const RingElement& y);

/// Fundamental unit (> 1 under the identity embedding); 1 over Q.
RingElement fundamental_unit(FieldSpec field);

/// Representatives of totally positive units modulo squares of units.
std::vector<RingElement> totally_positive_unit_classes(FieldSpec field);

/// All totally positive divisors of x, one per class modulo multiplication
/// by squares of units, in increasing order of identity embedding value.
std::vector<RingElement> totally_positive_divisors(const RingElement& x);

}  // namespace vinberg
