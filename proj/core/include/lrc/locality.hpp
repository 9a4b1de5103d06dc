#pragma once

#include <cstdint>
#include <optional>

#include "lrc/linear_code.hpp"

namespace lrc {

/// (r, delta)-locality witness: coordinate groups (0-based) covering all
/// code coordinates, each of size at most r + delta - 1, whose punctured
/// codes each have minimum distance at least delta.
struct LocalityCertificate {
  int r = 0;
  int delta = 0;
  std::vector<std::vector<int>> groups;
};

/// d <= n - k + 1 - (ceil(k/r) - 1)(delta - 1).
int singleton_bound(int n, int k, int r, int delta);

/// Indices of the nonzero columns.
std::vector<int> support(const FqMatrix& m);

struct GroupCheck {
  int index = 0;
  bool size_ok = false;
  bool distance_ok = false;
  DistanceResult distance;  // of the punctured code; zero-dimensional groups
                            // are vacuously fine and marked exact with value 0
};

struct CertificateCheck {
  bool valid = false;
  bool covers_all = false;
  std::vector<GroupCheck> groups;
};

CertificateCheck check_certificate(const LinearCode& code,
                                   const LocalityCertificate& cert);

/// Exhaustive per-coordinate search for a certificate: for each uncovered
/// coordinate, subsets containing it are scanned in ascending size and
/// lexicographic order until one qualifies. Throws std::runtime_error when
/// the subset budget is exhausted before the search completes.
std::optional<LocalityCertificate> find_locality(const LinearCode& code, int r,
                                                 int delta,
                                                 std::uint64_t max_subsets = 2'000'000);

struct CodeReport {
  int n = 0, k = 0, d = 0;
  std::uint64_t q = 0;
  int r = 0, delta = 0;
  int bound = 0;
  bool optimal = false;
  DistanceMethod d_method = DistanceMethod::ColumnSearch;
};

/// Verifies the certificate, computes the exact distance and the
/// Singleton-type bound, and reports optimality (d equal to the bound).
CodeReport classify(const LinearCode& code, const LocalityCertificate& cert,
                    const DistanceBudget& budget = {});

struct RepairRecord {
  int position = 0;
  int group = 0;                // index into cert.groups
  std::vector<int> read_coords; // coordinates consulted, all inside that group
};

struct RepairOutcome {
  bool ok = false;
  std::vector<FieldElement> word;   // complete iff ok
  std::vector<RepairRecord> repaired;
  std::vector<int> unrepaired;      // positions no group could restore
};

/// Restores erased positions group-locally: a group with at most delta - 1
/// erasures is solved using only its own coordinates; repairs cascade until
/// a fixpoint. Coordinates in several groups are taken by the first group
/// (ascending index) whose erasure budget allows it.
RepairOutcome local_repair(const LinearCode& code, const LocalityCertificate& cert,
                           const std::vector<std::optional<FieldElement>>& received);

}  // namespace lrc
