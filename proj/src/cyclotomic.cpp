#include "vinberg/cyclotomic.hpp"

#include <cmath>
#include <numeric>

namespace vinberg {

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

void trim(std::vector<Integer>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic order must be positive");
  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}; multiply first, then divide.
  std::vector<Integer> p{1};
  std::vector<int> divide;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 1) {
      std::vector<Integer> q(p.size() + d, 0);
      for (size_t i = 0; i < p.size(); ++i) {
        q[i + d] += p[i];
        q[i] -= p[i];
      }
      p = std::move(q);
    } else if (mu == -1) {
      divide.push_back(d);
    }
  }
  for (int d : divide) {
    // p / (x^d - 1): q_i = q_{i+d}... solve from the top: p = q (x^d - 1)
    const size_t deg = p.size() - 1 - d;
    std::vector<Integer> q(deg + 1, 0);
    std::vector<Integer> r = p;
    for (size_t i = r.size() - 1; i + 1 > static_cast<size_t>(d); --i) {
      const Integer c = r[i];
      if (c == 0) continue;
      q[i - d] = c;
      r[i] -= c;
      r[i - d] += c;
    }
    for (const auto& x : r)
      if (x != 0) throw Error("internal: cyclotomic division has a remainder");
    p = std::move(q);
  }
  trim(p);
  return p;
}

CyclotomicField::CyclotomicField(int order) : n_(order), phi_(cyclotomic_polynomial(order)) {}

CyclotomicField::Poly CyclotomicField::reduce(Poly x) const {
  const size_t d = phi_.size() - 1;
  for (size_t i = x.size(); i-- > d;) {
    const Integer c = x[i];
    if (c == 0) continue;
    for (size_t j = 0; j <= d; ++j) x[i - d + j] -= c * phi_[j];
  }
  x.resize(std::max<size_t>(d, 1), 0);
  return x;
}

CyclotomicField::Poly CyclotomicField::integer(long c) const {
  Poly p(std::max(degree(), 1), 0);
  p[0] = c;
  return p;
}

CyclotomicField::Poly CyclotomicField::two_cos(int j) const {
  j = ((j % n_) + n_) % n_;
  Poly p(static_cast<size_t>(n_), 0);
  p[static_cast<size_t>(j)] += 1;
  p[static_cast<size_t>((n_ - j) % n_)] += 1;
  return reduce(std::move(p));
}

CyclotomicField::Poly CyclotomicField::add(const Poly& x, const Poly& y) const {
  Poly out(std::max(x.size(), y.size()), 0);
  for (size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  for (size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

CyclotomicField::Poly CyclotomicField::sub(const Poly& x, const Poly& y) const {
  Poly out(std::max(x.size(), y.size()), 0);
  for (size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  for (size_t i = 0; i < y.size(); ++i) out[i] -= y[i];
  return out;
}

CyclotomicField::Poly CyclotomicField::mul(const Poly& x, const Poly& y) const {
  Poly out(x.size() + y.size(), 0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) out[i + j] += x[i] * y[j];
  }
  return reduce(std::move(out));
}

bool CyclotomicField::is_zero(const Poly& x) const {
  for (const auto& c : reduce(x))
    if (c != 0) return false;
  return true;
}

CyclotomicField::Poly CyclotomicField::galois(const Poly& x, int k) const {
  Poly out(static_cast<size_t>(n_), 0);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) out[static_cast<size_t>((static_cast<long>(i) * k) % n_)] += x[i];
  return reduce(std::move(out));
}

long double CyclotomicField::evaluate(const Poly& x, int k) const {
  const long double tau = 2.0L * std::acos(-1.0L);
  long double sum = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const long e = (static_cast<long>(i) * k) % n_;
    sum += static_cast<long double>(x[i].get_d()) * std::cos(tau * static_cast<long double>(e) / n_);
  }
  return sum;
}

int CyclotomicField::sign(const Poly& x, int k) const {
  if (is_zero(x)) return 0;
  const Poly r = reduce(x);
  long double magnitude = 0;
  for (const auto& c : r) magnitude += std::fabs(static_cast<long double>(c.get_d()));
  const long double v = evaluate(r, k);
  if (std::fabs(v) <= magnitude * 1e-15L) throw Error("cyclotomic sign too close to zero to certify");
  return v > 0 ? 1 : -1;
}

std::vector<int> CyclotomicField::real_embeddings() const {
  std::vector<int> out;
  for (int k = 1; 2 * k <= n_; ++k)
    if (std::gcd(k, n_) == 1) out.push_back(k);
  if (out.empty()) out.push_back(1);
  return out;
}

CyclotomicField::Poly CyclotomicField::determinant(const std::vector<std::vector<Poly>>& m) const {
  const size_t n = m.size();
  if (n == 0) return integer(1);
  if (n > 20) throw Error("determinant expansion limited to 20 rows");
  // f[mask] = det of rows 0..|mask|-1 against the columns in mask
  std::vector<Poly> f(size_t{1} << n);
  f[0] = integer(1);
  for (size_t mask = 1; mask < f.size(); ++mask) {
    const int row = __builtin_popcountll(mask) - 1;
    Poly acc = integer(0);
    int parity = 0;
    for (size_t col = n; col-- > 0;) {
      if (!(mask >> col & 1)) continue;
      // sign from the columns of mask above col
      const Poly term = mul(m[static_cast<size_t>(row)][col], f[mask ^ (size_t{1} << col)]);
      acc = parity % 2 == 0 ? add(acc, term) : sub(acc, term);
      ++parity;
    }
    f[mask] = std::move(acc);
  }
  return f.back();
}

}  // namespace vinberg
