#include "lrc/locality.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {
namespace {

void validate_certificate_shape(const LinearCode& code, const LocalityCertificate& cert) {
  if (cert.r < 1 || cert.delta < 2)
    throw std::invalid_argument("locality parameters require r >= 1 and delta >= 2");
  for (const auto& g : cert.groups) {
    if (g.empty()) throw std::invalid_argument("empty repair group");
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] < 0 || g[i] >= code.n())
        throw std::invalid_argument("repair group coordinate out of range");
      if (i > 0 && g[i] <= g[i - 1])
        throw std::invalid_argument("repair group coordinates must be strictly ascending");
    }
  }
}

bool group_qualifies(const LinearCode& code, const std::vector<int>& group, int delta) {
  const LinearCode punctured = puncture(code, group);
  if (punctured.k() == 0) return true;  // all-zero on the group, trivially repairable
  // Distance at least delta <=> no dependency among any delta - 1 columns;
  // cap the search there.
  const DistanceResult d = min_distance(punctured, delta);
  return d.value >= delta;
}

}  // namespace

int singleton_bound(int n, int k, int r, int delta) {
  if (r < 1 || k < r || n < k || delta < 2)
    throw std::invalid_argument("singleton bound requires 1 <= r <= k <= n and delta >= 2");
  const int ceil_kr = (k + r - 1) / r;
  return n - k + 1 - (ceil_kr - 1) * (delta - 1);
}

std::vector<int> support(const FqMatrix& m) {
  std::vector<int> out;
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      if (m.at(i, j) != 0) {
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

CertificateCheck check_certificate(const LinearCode& code,
                                   const LocalityCertificate& cert) {
  validate_certificate_shape(code, cert);
  CertificateCheck result;

  std::vector<bool> covered(code.n(), false);
  const int max_size = cert.r + cert.delta - 1;
  for (std::size_t gi = 0; gi < cert.groups.size(); ++gi) {
    const auto& group = cert.groups[gi];
    GroupCheck gc;
    gc.index = static_cast<int>(gi);
    gc.size_ok = static_cast<int>(group.size()) <= max_size;
    const LinearCode punctured = puncture(code, group);
    if (punctured.k() == 0) {
      gc.distance = {0, true, DistanceMethod::Certified};
      gc.distance_ok = true;
    } else {
      gc.distance = min_distance(punctured, cert.delta);
      gc.distance_ok = gc.distance.value >= cert.delta;
    }
    for (int c : group) covered[c] = true;
    result.groups.push_back(gc);
  }
  result.covers_all =
      std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  result.valid = result.covers_all;
  for (const GroupCheck& gc : result.groups)
    result.valid = result.valid && gc.size_ok && gc.distance_ok;
  return result;
}

std::optional<LocalityCertificate> find_locality(const LinearCode& code, int r,
                                                 int delta, std::uint64_t max_subsets) {
  if (r < 1 || delta < 2)
    throw std::invalid_argument("locality parameters require r >= 1 and delta >= 2");
  const int n = code.n();
  const int max_size = std::min(r + delta - 1, n);

  LocalityCertificate cert{r, delta, {}};
  std::vector<bool> covered(n, false);
  std::uint64_t checked = 0;

  for (int target = 0; target < n; ++target) {
    if (covered[target]) continue;
    std::optional<std::vector<int>> found;
    for (int size = 1; size <= max_size && !found; ++size) {
      // Subsets of the other coordinates, lexicographic, with target merged in.
      std::vector<int> others;
      for (int c = 0; c < n; ++c)
        if (c != target) others.push_back(c);
      std::vector<int> pick(size - 1);
      for (int i = 0; i < size - 1; ++i) pick[i] = i;
      bool more = true;
      while (more) {
        std::vector<int> group;
        group.reserve(size);
        for (int i : pick) group.push_back(others[i]);
        group.push_back(target);
        std::sort(group.begin(), group.end());
        if (++checked > max_subsets)
          throw std::runtime_error("locality search budget exceeded");
        if (group_qualifies(code, group, delta)) {
          found = group;
          break;
        }
        if (size == 1) break;
        // next combination over others
        more = false;
        for (int i = size - 2; i >= 0; --i) {
          if (pick[i] < static_cast<int>(others.size()) - (size - 1) + i) {
            ++pick[i];
            for (int j = i + 1; j < size - 1; ++j) pick[j] = pick[j - 1] + 1;
            more = true;
            break;
          }
        }
      }
    }
    if (!found) return std::nullopt;
    for (int c : *found) covered[c] = true;
    cert.groups.push_back(std::move(*found));
  }
  return cert;
}

CodeReport classify(const LinearCode& code, const LocalityCertificate& cert,
                    const DistanceBudget& budget) {
  const CertificateCheck check = check_certificate(code, cert);
  if (!check.valid)
    throw std::invalid_argument("certificate does not establish (r, delta)-locality");

  const DistanceResult d = min_distance(code, 0, budget);
  if (!d.exact)
    throw std::runtime_error("distance search exhausted its budget without an exact value");

  CodeReport report;
  report.n = code.n();
  report.k = code.k();
  report.d = d.value;
  report.q = code.field().size();
  report.r = cert.r;
  report.delta = cert.delta;
  report.bound = singleton_bound(code.n(), code.k(), cert.r, cert.delta);
  report.optimal = report.d == report.bound;
  report.d_method = d.method;
  if (report.d > report.bound)
    throw std::logic_error("distance exceeds the Singleton-type bound");
  return report;
}

RepairOutcome local_repair(const LinearCode& code, const LocalityCertificate& cert,
                           const std::vector<std::optional<FieldElement>>& received) {
  validate_certificate_shape(code, cert);
  if (static_cast<int>(received.size()) != code.n())
    throw std::invalid_argument("received word length must equal the code length");

  RepairOutcome outcome;
  std::vector<std::optional<FieldElement>> word = received;

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t gi = 0; gi < cert.groups.size(); ++gi) {
      const auto& group = cert.groups[gi];
      std::vector<int> erased_here;
      for (int c : group)
        if (!word[c]) erased_here.push_back(c);
      if (erased_here.empty() ||
          static_cast<int>(erased_here.size()) > cert.delta - 1)
        continue;

      const LinearCode punctured = puncture(code, group);
      std::vector<std::optional<FieldElement>> local(group.size());
      std::vector<int> reads;
      for (std::size_t t = 0; t < group.size(); ++t) {
        local[t] = word[group[t]];
        if (local[t]) reads.push_back(group[t]);
      }
      const auto solved = erasure_solve(punctured, local);
      if (!solved) continue;
      for (std::size_t t = 0; t < group.size(); ++t) {
        if (!word[group[t]]) {
          word[group[t]] = (*solved)[t];
          outcome.repaired.push_back(
              {group[t], static_cast<int>(gi), reads});
          progress = true;
        }
      }
    }
  }

  outcome.word.resize(code.n(), 0);
  outcome.ok = true;
  for (int c = 0; c < code.n(); ++c) {
    if (word[c]) {
      outcome.word[c] = *word[c];
    } else {
      outcome.ok = false;
      outcome.unrepaired.push_back(c);
    }
  }
  if (!outcome.ok) outcome.word.clear();
  return outcome;
}

}  // namespace lrc
