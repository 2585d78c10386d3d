#pragma once

#include <vector>

#include "qssr/ratfun.hpp"

namespace qssr {

/// Dense matrix over the fraction field of the polynomial ring. Small by
/// construction (Jacobian blocks of desk-scale reaction systems), so the
/// exact algorithms favor clarity: Bareiss elimination for determinants,
/// adjugate for inverses, fraction-field Gauss for rank.
class RfMatrix {
 public:
  RfMatrix() = default;
  RfMatrix(int rows, int cols, SymTab table);

  static RfMatrix identity(int n, SymTab table);
  static RfMatrix from_polys(int rows, int cols, const std::vector<Polynomial>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SymTab& table() const { return table_; }

  RationalFunction& at(int r, int c) { return entries_[r * cols_ + c]; }
  const RationalFunction& at(int r, int c) const { return entries_[r * cols_ + c]; }

  RfMatrix operator*(const RfMatrix& other) const;
  RfMatrix operator+(const RfMatrix& other) const;
  RfMatrix operator-(const RfMatrix& other) const;
  std::vector<RationalFunction> apply(const std::vector<RationalFunction>& v) const;

  bool is_zero() const;

  /// Determinant by fraction-free Bareiss elimination after clearing row
  /// denominators (divisions stay exact in the polynomial ring).
  RationalFunction determinant() const;

  /// All k x k minors, lexicographic over (row subset, column subset).
  std::vector<RationalFunction> minors(int k) const;

  /// Fraction-field inverse; throws SingularMatrixError when det == 0.
  RfMatrix inverse() const;

  /// Rank over the fraction field (symbolic pivots).
  int generic_rank() const;

  /// Rank of the exact evaluation at a full point.
  int rank_at_point(const std::vector<Rat>& point) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  SymTab table_;
  std::vector<RationalFunction> entries_;
};

/// Jacobian of F with respect to vars: entry (i, j) = dF_i/dvars_j.
RfMatrix jacobian(const std::vector<Polynomial>& F, const std::vector<int>& vars);

/// Bareiss determinant of a square polynomial matrix.
Polynomial bareiss_determinant(const std::vector<Polynomial>& entries, int n);

/// Exact rank of a rational matrix (Gaussian elimination).
int rational_rank(std::vector<std::vector<Rat>> m);

}  // namespace qssr
