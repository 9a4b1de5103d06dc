#pragma once

#include "lrc/linear_code.hpp"

namespace lrc {

/// Evaluation-point/multiplier description of a generalized Reed-Solomon
/// code: codewords are (v_1 f(a_1), ..., v_n f(a_n)) over all polynomials f
/// of degree below k.
struct GrsSpec {
  std::vector<FieldElement> points;       // pairwise distinct
  std::vector<FieldElement> multipliers;  // all nonzero
  int k = 0;
};

/// [n, k, n-k+1] GRS code. The parity check uses the dual multipliers
/// v'_i = v_i^{-1} * prod_{j != i} (a_i - a_j)^{-1}.
LinearCode grs_code(const Field& f, const GrsSpec& spec);

/// Dual column multipliers for the given points and multipliers.
std::vector<FieldElement> grs_dual_multipliers(const Field& f,
                                               const std::vector<FieldElement>& points,
                                               const std::vector<FieldElement>& multipliers);

/// [n+1, k, n-k+2] extended GRS code; the appended coordinate carries the
/// degree-(k-1) coefficient of the message polynomial.
LinearCode extended_grs_code(const Field& f, const GrsSpec& spec);

/// First n field elements in encoding order, the default evaluation points.
std::vector<FieldElement> default_grs_points(const Field& f, int n);

/// Generator polynomial of the length-(q+1) cyclic MDS code of odd dimension
/// k: the monic product of (x - beta^i) over the exponent run of length
/// q+1-k centered at (q+1)/2, where beta is the canonical primitive
/// (q+1)-th root of unity in GF(q^2). The run is closed under negation mod
/// q+1, so the coefficients land in GF(q); they are returned in the GF(q)
/// encoding.
DensePolynomial cyclic_chain_generator(std::uint64_t q, int k);

/// The [q+1, k, q+2-k] cyclic MDS code with the generator polynomial above.
/// Codes of odd dimension form a nested chain: result(1) < result(3) < ...
LinearCode cyclic_mds_chain(std::uint64_t q, int k);

}  // namespace lrc
