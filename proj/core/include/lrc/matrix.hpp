#pragma once

#include <vector>

#include "lrc/galois.hpp"

namespace lrc {

/// Dense row-major matrix over a single finite field.
class FqMatrix {
public:
  FqMatrix(Field field, int rows, int cols);
  static FqMatrix identity(const Field& field, int n);
  static FqMatrix from_rows(const Field& field,
                            const std::vector<std::vector<FieldElement>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  FieldElement at(int r, int c) const { return entries_[std::size_t(r) * cols_ + c]; }
  FieldElement& at(int r, int c) { return entries_[std::size_t(r) * cols_ + c]; }

  std::vector<FieldElement> row(int r) const;
  FqMatrix transposed() const;

  /// Keeps the listed columns, in the given order.
  FqMatrix columns(const std::vector<int>& keep) const;

  bool operator==(const FqMatrix& other) const;
  bool operator!=(const FqMatrix& other) const { return !(*this == other); }

private:
  Field field_;
  int rows_, cols_;
  std::vector<FieldElement> entries_;
};

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
std::vector<FieldElement> vec_mat(const std::vector<FieldElement>& v, const FqMatrix& m);
std::vector<FieldElement> mat_vec(const FqMatrix& m, const std::vector<FieldElement>& v);

FqMatrix hstack(const FqMatrix& a, const FqMatrix& b);
FqMatrix vstack(const FqMatrix& a, const FqMatrix& b);
FqMatrix block_diag(const FqMatrix& a, const FqMatrix& b);
FqMatrix scaled(const FqMatrix& m, FieldElement s);

/// Reduced row echelon form with deterministic pivoting (first nonzero entry
/// in column order). Pivot column indices are appended to *pivots if given.
FqMatrix rref(const FqMatrix& m, std::vector<int>* pivots = nullptr);

int rank(const FqMatrix& m);

/// Basis of {x : M x^T = 0} as rows, cols - rank(M) of them. Deterministic:
/// reduced echelon pivoting with free variables taken in ascending order.
FqMatrix nullspace_basis(const FqMatrix& m);

FieldElement det(const FqMatrix& m);

enum class SolveStatus { Unique, NoSolution, Underdetermined };

struct SolveResult {
  SolveStatus status;
  std::vector<FieldElement> solution;  // populated only when Unique
};

/// Solves M x = b for a column vector b of length rows().
SolveResult solve(const FqMatrix& m, const std::vector<FieldElement>& b);

/// Whether v lies in the row space of m.
bool in_row_space(const FqMatrix& m, const std::vector<FieldElement>& v);

}  // namespace lrc
