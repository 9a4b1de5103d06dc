#pragma once

#include "lrc/linear_code.hpp"

namespace lrc {

/// A matrix checked to be nonsingular by columns: every i x i minor formed
/// from the first i rows and any i columns is invertible, for all i up to
/// the row count.
struct NscMatrix {
  FqMatrix a;
};

/// Exhaustive minor check; the in-scope shapes are tiny.
bool is_nsc(const FqMatrix& a);

/// Rows are powers 0..m_rows-1 of the given distinct points; verified NSC.
NscMatrix vandermonde_nsc(const Field& f, const std::vector<FieldElement>& points,
                          int m_rows);

/// Parameters of a matrix-product composition. d_lower = min_i d_i * rho_i
/// is the distance guarantee; it is the exact distance when the ingredients
/// are nested (`exact`), with rho_i = N - i + 1 for an NSC matrix.
struct MpParams {
  int N = 0;
  int M = 0;
  int k = 0;
  int d_lower = 0;
  bool exact = false;
  std::vector<int> ingredient_d;
  std::vector<int> rho;
};

/// The code {(F_1, ..., F_M) . A} of length N*n built from M codes of equal
/// length n and a full-rank M x N matrix A. The generator is the block
/// matrix (a_{i,j} G_i).
std::pair<LinearCode, MpParams> compose(const std::vector<LinearCode>& codes,
                                        const FqMatrix& a);
std::pair<LinearCode, MpParams> compose(const std::vector<LinearCode>& codes,
                                        const NscMatrix& a);

}  // namespace lrc
