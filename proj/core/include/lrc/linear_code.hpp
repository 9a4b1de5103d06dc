#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/matrix.hpp"

namespace lrc {

enum class DistanceMethod { ColumnSearch, BruteForce, Certified };

/// Minimum-distance answer. When `exact` is false, `value` is a proven
/// lower bound: every weight below it has been ruled out.
struct DistanceResult {
  int value = 0;
  bool exact = false;
  DistanceMethod method = DistanceMethod::ColumnSearch;
};

/// Cost limits for the distance search. Column search estimates its work per
/// subset level ahead of running it; when the estimate exceeds the budget it
/// falls over to codeword enumeration if q^k permits, and otherwise stops
/// with a lower bound.
struct DistanceBudget {
  std::uint64_t brute_force_limit = 12'000'000;  // max q^k for enumeration
  double column_ops_budget = 4e8;                // elimination-op estimate
};

/// An [n, k] linear code. The generator is kept in reduced row echelon form
/// (canonical for row-space comparisons); the parity-check matrix is kept
/// exactly as supplied when the code was built from one, which preserves
/// structured matrices for inspection.
class LinearCode {
public:
  static LinearCode from_generator(const FqMatrix& g);
  static LinearCode from_parity(const FqMatrix& h);  // h must have full row rank

  /// Adopts both matrices verbatim after validating rank(G) = rows(G),
  /// G in reduced echelon form, H full row rank, and H G^T = 0.
  static LinearCode from_parts(const FqMatrix& g, const FqMatrix& h);

  const Field& field() const { return gen_.field(); }
  int n() const { return gen_.cols(); }
  int k() const { return gen_.rows(); }

  const FqMatrix& generator() const { return gen_; }
  const FqMatrix& parity() const { return parity_; }

  std::vector<FieldElement> encode(const std::vector<FieldElement>& message) const;
  bool contains(const std::vector<FieldElement>& word) const;

  bool operator==(const LinearCode& other) const {
    return gen_ == other.gen_;  // generators are canonical
  }

private:
  LinearCode(FqMatrix gen, FqMatrix parity);

  FqMatrix gen_;
  FqMatrix parity_;
};

/// Exact minimum distance when affordable, a lower bound otherwise.
/// cap = 0 means n - k + 1, which always yields an exact answer as long as
/// the budget holds. With a smaller cap, an exact value above the cap is
/// reported as the lower bound cap + 1.
DistanceResult min_distance(const LinearCode& code, int cap = 0,
                            const DistanceBudget& budget = {});

/// Smallest w such that some w columns of the parity-check matrix are
/// linearly dependent, searched in ascending subset sizes.
DistanceResult min_distance_column_search(const LinearCode& code, int cap = 0,
                                          double ops_budget = 4e8);

/// Minimum weight over all q^k codewords by direct enumeration. Throws if
/// q^k exceeds the limit.
int min_distance_brute_force(const LinearCode& code,
                             std::uint64_t limit = 12'000'000);

/// Keeps the listed coordinates (0-based, ascending, non-empty) and
/// re-reduces the generator to full row rank.
LinearCode puncture(const LinearCode& code, const std::vector<int>& keep);

/// Whether every codeword of `candidate` lies in `container`.
bool is_subcode(const LinearCode& candidate, const LinearCode& container);

LinearCode dual(const LinearCode& code);

LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

/// Completes a word with erased positions (nullopt entries) to the unique
/// consistent codeword, or returns nullopt when the erased positions are not
/// uniquely determined. Throws std::invalid_argument if the known positions
/// are inconsistent with every codeword.
std::optional<std::vector<FieldElement>> erasure_solve(
    const LinearCode& code, const std::vector<std::optional<FieldElement>>& received);

}  // namespace lrc
