#pragma once

// Dense exact matrices over Q or Q(sqrt d).

#include <cstddef>
#include <vector>

#include "vinberg/ring.hpp"

namespace vinberg {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<T> data_;
};

using RingMatrix = Matrix<RingElement>;
using FieldMatrix = Matrix<FieldElement>;

FieldMatrix to_field(const RingMatrix& m);
RingMatrix conjugate(const RingMatrix& m);
FieldMatrix conjugate(const FieldMatrix& m);
bool is_symmetric(const RingMatrix& m);
bool is_symmetric(const FieldMatrix& m);

/// Principal submatrix on the given row/column indices.
template <typename T>
Matrix<T> principal_submatrix(const Matrix<T>& m, const std::vector<size_t>& idx) {
  Matrix<T> out(idx.size(), idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) out(i, j) = m(idx[i], idx[j]);
  return out;
}

FieldElement determinant(FieldMatrix m);
size_t rank(FieldMatrix m);
/// Throws on a singular matrix.
FieldMatrix inverse(const FieldMatrix& m);
/// Basis of the right null space {x : m x = 0}.
std::vector<std::vector<FieldElement>> nullspace(FieldMatrix m);

/// Saturated basis of {x in O^cols : m x = 0} via unimodular column
/// reduction over the Euclidean ring.
std::vector<std::vector<RingElement>> integral_kernel(const RingMatrix& m);

/// Multiplies each row by the least common multiple of its denominators.
RingMatrix clear_row_denominators(const FieldMatrix& m);

struct Inertia {
  size_t positive = 0;
  size_t negative = 0;
  size_t zero = 0;
};

/// Sylvester inertia under the identity embedding by symmetric congruence.
Inertia inertia(const FieldMatrix& m);

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct DefiniteRankClass {
  Definiteness kind;
  size_t rank;
  size_t dim;
  size_t nullity() const { return dim - rank; }
};

/// Exact classification of a symmetric matrix under the identity embedding.
/// "Indefinite" covers every matrix that is not positive semidefinite.
/// Elimination uses symmetric (diagonal) pivoting so the pivot signs are the
/// inertia of the matrix.
DefiniteRankClass definite_rank_class(const FieldMatrix& m);
DefiniteRankClass definite_rank_class(const RingMatrix& m);

}  // namespace vinberg
