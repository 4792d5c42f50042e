#pragma once

#include "logcy/gaussian_rational.hpp"

#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

namespace logcy {

using IntVector = std::vector<BigInt>;

/// Dense rectangular matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  /// Columns given as vectors of equal length `rows`.
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  IntVector apply(const IntVector& x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k);
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

BigInt dot(const IntVector& a, const IntVector& b);
BigInt determinant(const IntMatrix& m);
BigInt gcd_of(const IntVector& v);

/// U * A * V == D with U, V unimodular and D diagonal (d1 | d2 | ..., all >= 0).
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  std::vector<BigInt> diagonal() const;
};

SnfDecomposition snf(const IntMatrix& a);

/// Basis of the saturated integer kernel {x : A x = 0}; empty iff A is injective.
std::vector<IntVector> kernel_basis(const IntMatrix& a);

/// rank of A over Q.
std::size_t rank(const IntMatrix& a);

/// Z^rows / image(A) as Z^free_rank + sum Z/t_i (each t_i > 1).
struct CokernelStructure {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  bool is_free() const { return torsion.empty(); }
};

CokernelStructure cokernel_structure(const IntMatrix& a);

/// Integer x with A x == b, when one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Inverse of a square matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Result of deciding whether a homomorphism Z^r -> C^x with prescribed
/// character values exists.
struct TorusSolvability {
  bool solvable = false;
  /// On failure: integer relation a with a^T A == 0 and prod targets^a != 1.
  IntVector violated_relation;
};

/// Rows of A are characters on Z^r; asks for x in (C^x)^r with
/// prod_j x_j^{A_ij} == targets_i for every row i. Decided by the relation
/// criterion: solvable iff prod targets^a == 1 for every left-kernel vector a.
/// Throws DomainError on a zero target.
TorusSolvability solvable_over_torus(const IntMatrix& a, const std::vector<GaussianRational>& targets);

/// Outcome of actually producing a solution in Q(i)^x.
struct TorusSolution {
  TorusSolvability solvability;
  /// Present iff solvable and every needed root exists in Q(i).
  std::optional<std::vector<GaussianRational>> values;
};

TorusSolution solve_over_torus(const IntMatrix& a, const std::vector<GaussianRational>& targets);

/// prod_j values_j^{exponents_j}
GaussianRational evaluate_monomial(const std::vector<GaussianRational>& values, const IntVector& exponents);

}  // namespace logcy
