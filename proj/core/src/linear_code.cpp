#include "lrc/linear_code.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lrc {
namespace {

FqMatrix drop_zero_rows(const FqMatrix& m) {
  std::vector<std::vector<FieldElement>> rows;
  for (int i = 0; i < m.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) rows.push_back(m.row(i));
  }
  FqMatrix out(m.field(), static_cast<int>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(static_cast<int>(i), j) = rows[i][j];
  return out;
}

bool is_zero_product(const FqMatrix& h, const FqMatrix& g) {
  const FqMatrix prod = h * g.transposed();
  for (int i = 0; i < prod.rows(); ++i)
    for (int j = 0; j < prod.cols(); ++j)
      if (prod.at(i, j) != 0) return false;
  return true;
}

double binom(int n, int w) {
  double out = 1.0;
  for (int i = 0; i < w; ++i) out = out * double(n - i) / double(i + 1);
  return out;
}

// Any w columns of h (given by idx) linearly dependent?
bool columns_dependent(const FqMatrix& h, const std::vector<int>& idx) {
  const Field& f = h.field();
  const int hr = h.rows();
  const int w = static_cast<int>(idx.size());
  // Incremental elimination: reduce each column against the normalized ones
  // accepted so far; a column that vanishes witnesses a dependency.
  std::vector<std::vector<FieldElement>> basis;
  std::vector<int> basis_pivot;
  for (int t = 0; t < w; ++t) {
    std::vector<FieldElement> col(hr);
    for (int i = 0; i < hr; ++i) col[i] = h.at(i, idx[t]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const FieldElement factor = col[basis_pivot[b]];
      if (factor == 0) continue;
      for (int i = 0; i < hr; ++i)
        col[i] = f.sub(col[i], f.mul(factor, basis[b][i]));
    }
    int pivot = -1;
    for (int i = 0; i < hr; ++i)
      if (col[i] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return true;
    const FieldElement scale = f.inv(col[pivot]);
    for (int i = 0; i < hr; ++i) col[i] = f.mul(scale, col[i]);
    basis.push_back(std::move(col));
    basis_pivot.push_back(pivot);
  }
  return false;
}

// Lexicographic combination step over {0..n-1}.
bool next_combination(std::vector<int>& idx, int n) {
  const int w = static_cast<int>(idx.size());
  for (int i = w - 1; i >= 0; --i) {
    if (idx[i] < n - w + i) {
      ++idx[i];
      for (int j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// True if some w-subset of columns of h is dependent.
bool level_has_dependency(const FqMatrix& h, int w) {
  std::vector<int> idx(w);
  for (int i = 0; i < w; ++i) idx[i] = i;
  do {
    if (columns_dependent(h, idx)) return true;
  } while (next_combination(idx, h.cols()));
  return false;
}

std::optional<double> pow_checked(std::uint64_t base, int exp, double limit) {
  double v = 1.0;
  for (int i = 0; i < exp; ++i) {
    v *= double(base);
    if (v > limit) return std::nullopt;
  }
  return v;
}

}  // namespace

LinearCode::LinearCode(FqMatrix gen, FqMatrix parity)
    : gen_(std::move(gen)), parity_(std::move(parity)) {}

LinearCode LinearCode::from_generator(const FqMatrix& g) {
  const FqMatrix reduced = drop_zero_rows(rref(g));
  FqMatrix parity = rref(nullspace_basis(reduced));
  return LinearCode(reduced, std::move(parity));
}

LinearCode LinearCode::from_parity(const FqMatrix& h) {
  if (rank(h) != h.rows())
    throw std::invalid_argument("parity-check matrix must have full row rank");
  FqMatrix gen = drop_zero_rows(rref(nullspace_basis(h)));
  return LinearCode(std::move(gen), h);
}

LinearCode LinearCode::from_parts(const FqMatrix& g, const FqMatrix& h) {
  if (g.field() != h.field() || g.cols() != h.cols())
    throw std::invalid_argument("generator/parity-check mismatch");
  if (rank(h) != h.rows() || h.rows() != g.cols() - g.rows())
    throw std::invalid_argument("parity-check matrix must have rank n - k");
  std::vector<int> pivots;
  if (rref(g, &pivots) != g || static_cast<int>(pivots.size()) != g.rows())
    throw std::invalid_argument("generator must be in reduced echelon form with full row rank");
  if (!is_zero_product(h, g))
    throw std::invalid_argument("parity-check matrix does not annihilate the generator");
  return LinearCode(g, h);
}

std::vector<FieldElement> LinearCode::encode(const std::vector<FieldElement>& message) const {
  if (static_cast<int>(message.size()) != k())
    throw std::invalid_argument("message length must equal the code dimension");
  return vec_mat(message, gen_);
}

bool LinearCode::contains(const std::vector<FieldElement>& word) const {
  if (static_cast<int>(word.size()) != n())
    throw std::invalid_argument("word length must equal the code length");
  for (FieldElement x : mat_vec(parity_, word))
    if (x != 0) return false;
  return true;
}

DistanceResult min_distance_column_search(const LinearCode& code, int cap,
                                          double ops_budget) {
  if (code.k() == 0) throw std::domain_error("the zero code has no minimum distance");
  if (code.k() == code.n()) return {1, true, DistanceMethod::ColumnSearch};
  const int n = code.n();
  const int hr = code.n() - code.k();
  const int effective_cap = cap > 0 ? std::min(cap, n) : hr + 1;

  double spent = 0.0;
  for (int w = 1; w <= effective_cap; ++w) {
    const double level_cost = binom(n, w) * double(w) * double(std::max(1, hr));
    if (spent + level_cost > ops_budget)
      return {w, false, DistanceMethod::ColumnSearch};  // d >= w proven so far
    spent += level_cost;
    if (level_has_dependency(code.parity(), w))
      return {w, true, DistanceMethod::ColumnSearch};
  }
  return {effective_cap + 1, false, DistanceMethod::ColumnSearch};
}

int min_distance_brute_force(const LinearCode& code, std::uint64_t limit) {
  const int k = code.k();
  const int n = code.n();
  if (k == 0) throw std::domain_error("the zero code has no minimum distance");
  const Field& f = code.field();
  const std::uint64_t q = f.size();
  if (!pow_checked(q, k, double(limit)))
    throw std::domain_error("q^k too large for codeword enumeration");

  std::vector<std::vector<FieldElement>> rows(k);
  for (int i = 0; i < k; ++i) rows[i] = code.generator().row(i);

  std::vector<FieldElement> cur(n, 0);
  int weight = 0;
  int best = n + 1;

  const bool prime = f.prime_field();
  const FieldElement p = static_cast<FieldElement>(f.characteristic());
  auto add_row = [&](const std::vector<FieldElement>& row) {
    if (prime) {
      for (int j = 0; j < n; ++j) {
        const FieldElement old = cur[j];
        FieldElement nv = old + row[j];
        if (nv >= p) nv -= p;
        weight += int(nv != 0) - int(old != 0);
        cur[j] = nv;
      }
    } else {
      for (int j = 0; j < n; ++j) {
        const FieldElement old = cur[j];
        const FieldElement nv = f.add(old, row[j]);
        weight += int(nv != 0) - int(old != 0);
        cur[j] = nv;
      }
    }
  };

  // Depth-first over message digits; q additions of row i walk that digit
  // through the whole field and return cur to its entry state (q * row = 0
  // in characteristic p).
  auto rec = [&](auto&& self, int level, bool nonzero) -> void {
    if (level == k) {
      if (nonzero && weight < best) best = weight;
      return;
    }
    for (std::uint64_t c = 0; c < q; ++c) {
      self(self, level + 1, nonzero || c > 0);
      add_row(rows[level]);
    }
  };
  rec(rec, 0, false);
  return best;
}

DistanceResult min_distance(const LinearCode& code, int cap,
                            const DistanceBudget& budget) {
  if (code.k() == 0) throw std::domain_error("the zero code has no minimum distance");
  if (code.k() == code.n()) return {1, true, DistanceMethod::ColumnSearch};
  const int n = code.n();
  const int hr = code.n() - code.k();
  const int effective_cap = cap > 0 ? std::min(cap, n) : hr + 1;

  const std::optional<double> qk =
      pow_checked(code.field().size(), code.k(), double(budget.brute_force_limit));
  const double brute_cost =
      qk ? *qk * double(n) * 1.3 : std::numeric_limits<double>::infinity();

  auto clamp_to_cap = [&](int d, DistanceMethod method) -> DistanceResult {
    if (d > effective_cap) return {effective_cap + 1, false, method};
    return {d, true, method};
  };

  double spent = 0.0;
  for (int w = 1; w <= effective_cap; ++w) {
    const double level_cost = binom(n, w) * double(w) * double(std::max(1, hr));
    if (spent + level_cost > brute_cost)
      return clamp_to_cap(min_distance_brute_force(code, budget.brute_force_limit),
                          DistanceMethod::BruteForce);
    if (spent + level_cost > budget.column_ops_budget) {
      if (qk)
        return clamp_to_cap(min_distance_brute_force(code, budget.brute_force_limit),
                            DistanceMethod::BruteForce);
      return {w, false, DistanceMethod::ColumnSearch};
    }
    spent += level_cost;
    if (level_has_dependency(code.parity(), w))
      return {w, true, DistanceMethod::ColumnSearch};
  }
  return {effective_cap + 1, false, DistanceMethod::ColumnSearch};
}

LinearCode puncture(const LinearCode& code, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("puncture requires a non-empty coordinate set");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= code.n())
      throw std::invalid_argument("puncture coordinate out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("puncture coordinates must be strictly ascending");
  }
  return LinearCode::from_generator(code.generator().columns(keep));
}

bool is_subcode(const LinearCode& candidate, const LinearCode& container) {
  if (candidate.field() != container.field() || candidate.n() != container.n())
    throw std::invalid_argument("subcode test requires equal field and length");
  for (int i = 0; i < candidate.k(); ++i)
    if (!in_row_space(container.generator(), candidate.generator().row(i)))
      return false;
  return true;
}

LinearCode dual(const LinearCode& code) {
  return LinearCode::from_generator(code.parity());
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
  if (a.field() != b.field()) throw std::invalid_argument("field mismatch");
  // Block-diagonal joins of echelon-form generators stay in echelon form,
  // and of full-rank parity checks stay full rank.
  return LinearCode::from_parts(block_diag(a.generator(), b.generator()),
                                block_diag(a.parity(), b.parity()));
}

std::optional<std::vector<FieldElement>> erasure_solve(
    const LinearCode& code, const std::vector<std::optional<FieldElement>>& received) {
  if (static_cast<int>(received.size()) != code.n())
    throw std::invalid_argument("received word length must equal the code length");
  const Field& f = code.field();
  const FqMatrix& h = code.parity();

  std::vector<int> erased;
  for (int j = 0; j < code.n(); ++j)
    if (!received[j]) erased.push_back(j);

  if (erased.empty()) {
    std::vector<FieldElement> word(code.n());
    for (int j = 0; j < code.n(); ++j) word[j] = *received[j];
    if (!code.contains(word))
      throw std::invalid_argument("received word is not a codeword");
    return word;
  }

  // H restricted to erasures, against the syndrome of the known part.
  std::vector<FieldElement> rhs(h.rows(), 0);
  for (int i = 0; i < h.rows(); ++i) {
    FieldElement acc = 0;
    for (int j = 0; j < code.n(); ++j)
      if (received[j] && *received[j] != 0)
        acc = f.add(acc, f.mul(h.at(i, j), *received[j]));
    rhs[i] = f.neg(acc);
  }
  const SolveResult res = solve(h.columns(erased), rhs);
  if (res.status == SolveStatus::NoSolution)
    throw std::invalid_argument("received word is inconsistent with the code");
  if (res.status == SolveStatus::Underdetermined) return std::nullopt;

  std::vector<FieldElement> word(code.n(), 0);
  for (int j = 0; j < code.n(); ++j)
    if (received[j]) word[j] = *received[j];
  for (std::size_t t = 0; t < erased.size(); ++t) word[erased[t]] = res.solution[t];
  return word;
}

}  // namespace lrc
