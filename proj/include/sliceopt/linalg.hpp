#pragma once

// Congruence diagonalization Q = S D S^T over the rationals, integral
// rescaling and inertia.

#include <cstddef>
#include <vector>

#include "sliceopt/exactnum.hpp"

namespace sliceopt {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) data_.insert(data_.end(), row.begin(), row.end());
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);

/// Square symmetric integer matrix.
class SymMatrix {
 public:
  SymMatrix() = default;
  /// Throws std::invalid_argument when `entries` is not square and symmetric.
  explicit SymMatrix(IntMatrix entries);

  /// Q + Q^T when Q is not symmetric (same quadratic form up to the factor 2),
  /// Q itself otherwise. `doubled` reports which case applied.
  static SymMatrix symmetrized(const IntMatrix& raw, bool* doubled = nullptr);

  std::size_t size() const { return entries_.rows(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const IntMatrix& entries() const { return entries_; }
  SymMatrix negated() const;

 private:
  IntMatrix entries_;
};

/// Counts of positive, negative and zero eigenvalues.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  bool operator==(const Inertia&) const = default;
};

/// S D S^T = c^3 Q with S integral and invertible, D integral diagonal, c >= 1.
/// The linear forms of the decomposition are the columns of S:
/// x^T (c^3 Q) x = sum_i d_i (S^T x)_i^2.
struct Decomposition {
  IntMatrix s;
  std::vector<Integer> d;
  Integer c;

  std::size_t size() const { return d.size(); }
  /// Column i of S.
  std::vector<Integer> form(std::size_t i) const;
};

Inertia inertia(const SymMatrix& q);
Inertia inertia(const Decomposition& dec);

Decomposition decompose(const SymMatrix& q);

/// Checks S D S^T == c^3 Q by exact multiplication.
bool reconstructs(const Decomposition& dec, const SymMatrix& q);

/// Moves the unique negative diagonal entry (if any) to the last position.
/// Throws std::invalid_argument when D has two or more negative entries.
Decomposition reorder_for_one_negative(Decomposition dec);

}  // namespace sliceopt
