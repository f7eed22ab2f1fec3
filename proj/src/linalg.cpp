#include "vinberg/linalg.hpp"

#include <utility>

namespace vinberg {

FieldMatrix to_field(const RingMatrix& m) {
  FieldMatrix out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = FieldElement(m(i, j));
  return out;
}

RingMatrix conjugate(const RingMatrix& m) {
  RingMatrix out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).conjugate();
  return out;
}

FieldMatrix conjugate(const FieldMatrix& m) {
  FieldMatrix out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).conjugate();
  return out;
}

template <typename T>
static bool symmetric_impl(const Matrix<T>& m) {
  if (!m.square()) return false;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

bool is_symmetric(const RingMatrix& m) { return symmetric_impl(m); }
bool is_symmetric(const FieldMatrix& m) { return symmetric_impl(m); }

namespace {

// Row-reduces in place; returns pivot columns and the sign of the row swaps.
std::vector<size_t> row_reduce(FieldMatrix& m, int* swap_sign = nullptr, FieldElement* det = nullptr) {
  std::vector<size_t> pivots;
  int sign = 1;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
      sign = -sign;
    }
    const FieldElement inv = m(row, col).inverse();
    if (det) *det *= m(row, col);
    for (size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const FieldElement f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  if (swap_sign) *swap_sign = sign;
  return pivots;
}

}  // namespace

FieldElement determinant(FieldMatrix m) {
  if (!m.square()) throw Error("determinant of a non-square matrix");
  if (m.rows() == 0) return FieldElement(RingElement::integer(FieldSpec(), 1));
  FieldElement det(RingElement::integer(m(0, 0).field(), 1));
  int sign = 1;
  const auto pivots = row_reduce(m, &sign, &det);
  if (pivots.size() < m.rows()) return FieldElement();
  return sign < 0 ? -det : det;
}

size_t rank(FieldMatrix m) { return row_reduce(m).size(); }

FieldMatrix inverse(const FieldMatrix& m) {
  if (!m.square()) throw Error("inverse of a non-square matrix");
  const size_t n = m.rows();
  FieldMatrix aug(n, 2 * n);
  const FieldSpec field = n ? m(0, 0).field() : FieldSpec();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldElement::integer(field, 1);
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error("matrix is singular");
  FieldMatrix out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

std::vector<std::vector<FieldElement>> nullspace(FieldMatrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  const FieldSpec field = m.rows() && m.cols() ? m(0, 0).field() : FieldSpec();
  std::vector<std::vector<FieldElement>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(m.cols());
    v[free] = FieldElement::integer(field, 1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

DefiniteRankClass definite_rank_class(const FieldMatrix& input) {
  if (!is_symmetric(input)) throw Error("definiteness of a non-symmetric matrix");
  const size_t n = input.rows();
  FieldMatrix a = input;
  std::vector<bool> done(n, false);
  size_t pivots = 0;
  bool psd = true;
  for (;;) {
    size_t p = n;
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || a(i, i).is_zero()) continue;
      if (sign_under_embedding(a(i, i), Embedding::Identity) < 0) {
        psd = false;
        break;
      }
      p = i;
      break;
    }
    if (!psd) break;
    if (p == n) {
      // Remaining diagonal is zero; any nonzero off-diagonal entry gives a
      // 2x2 principal minor of negative determinant.
      for (size_t i = 0; i < n && psd; ++i)
        for (size_t j = 0; j < n && psd; ++j)
          if (!done[i] && !done[j] && !a(i, j).is_zero()) psd = false;
      break;
    }
    done[p] = true;
    ++pivots;
    const FieldElement inv = a(p, p).inverse();
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || a(i, p).is_zero()) continue;
      const FieldElement f = a(i, p) * inv;
      for (size_t j = 0; j < n; ++j)
        if (!done[j]) a(i, j) -= f * a(p, j);
    }
  }
  if (!psd) return {Definiteness::Indefinite, rank(input), n};
  return {pivots == n ? Definiteness::PositiveDefinite : Definiteness::PositiveSemidefinite, pivots, n};
}

DefiniteRankClass definite_rank_class(const RingMatrix& m) { return definite_rank_class(to_field(m)); }

}  // namespace vinberg

namespace vinberg {

RingMatrix clear_row_denominators(const FieldMatrix& m) {
  RingMatrix out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    for (size_t j = 0; j < m.cols(); ++j) {
      const FieldElement scaled = m(i, j) * FieldElement(RingElement(m(i, j).field(), l));
      out(i, j) = scaled.to_ring();
    }
  }
  return out;
}

std::vector<std::vector<RingElement>> integral_kernel(const RingMatrix& m) {
  const size_t rows = m.rows(), cols = m.cols();
  FieldSpec field;
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      if (!m(i, j).field().is_rational()) field = m(i, j).field();

  RingMatrix a = m;
  RingMatrix t(cols, cols, RingElement(field));
  for (size_t j = 0; j < cols; ++j) t(j, j) = RingElement::integer(field, 1);

  auto col_axpy = [&](size_t dst, size_t src, const RingElement& q) {
    // column dst -= q * column src, mirrored on the transform
    for (size_t i = 0; i < rows; ++i) a(i, dst) -= q * a(i, src);
    for (size_t i = 0; i < cols; ++i) t(i, dst) -= q * t(i, src);
  };
  auto col_swap = [&](size_t x, size_t y) {
    if (x == y) return;
    for (size_t i = 0; i < rows; ++i) std::swap(a(i, x), a(i, y));
    for (size_t i = 0; i < cols; ++i) std::swap(t(i, x), t(i, y));
  };

  size_t pivot = 0;
  for (size_t r = 0; r < rows && pivot < cols; ++r) {
    for (;;) {
      // smallest nonzero entry (by |norm|) among columns >= pivot
      size_t best = cols;
      Integer best_norm;
      for (size_t c = pivot; c < cols; ++c) {
        if (a(r, c).is_zero()) continue;
        Integer nn = abs(a(r, c).norm());
        if (best == cols || nn < best_norm) {
          best = c;
          best_norm = nn;
        }
      }
      if (best == cols) break;
      col_swap(pivot, best);
      bool clean = true;
      for (size_t c = pivot + 1; c < cols; ++c) {
        if (a(r, c).is_zero()) continue;
        auto [q, rem] = euclidean_divide(a(r, c), a(r, pivot));
        col_axpy(c, pivot, q);
        if (!a(r, c).is_zero()) clean = false;
      }
      if (clean) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<std::vector<RingElement>> basis;
  for (size_t c = pivot; c < cols; ++c) {
    std::vector<RingElement> v(cols);
    for (size_t i = 0; i < cols; ++i) v[i] = t(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

Inertia inertia(const FieldMatrix& input) {
  if (!is_symmetric(input)) throw Error("inertia of a non-symmetric matrix");
  const size_t n = input.rows();
  FieldMatrix a = input;
  std::vector<bool> done(n, false);
  Inertia out;
  size_t remaining = n;
  while (remaining > 0) {
    size_t p = n;
    for (size_t i = 0; i < n; ++i)
      if (!done[i] && !a(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p == n) {
      // Zero diagonal: fold a row with a nonzero off-diagonal entry into its
      // partner (x_i -> x_i + x_j) to create a nonzero diagonal.
      size_t fi = n, fj = n;
      for (size_t i = 0; i < n && fi == n; ++i)
        for (size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && !a(i, j).is_zero()) {
            fi = i;
            fj = j;
            break;
          }
      if (fi == n) {
        out.zero += remaining;
        break;
      }
      for (size_t k = 0; k < n; ++k) a(fi, k) += a(fj, k);
      for (size_t k = 0; k < n; ++k) a(k, fi) += a(k, fj);
      continue;
    }
    (sign_under_embedding(a(p, p), Embedding::Identity) > 0 ? out.positive : out.negative) += 1;
    done[p] = true;
    --remaining;
    const FieldElement inv = a(p, p).inverse();
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || a(i, p).is_zero()) continue;
      const FieldElement f = a(i, p) * inv;
      for (size_t j = 0; j < n; ++j)
        if (!done[j]) a(i, j) -= f * a(p, j);
    }
  }
  return out;
}

}  // namespace vinberg
