#include "lrc/matrix_product.hpp"

#include <stdexcept>

namespace lrc {
namespace {

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

std::pair<LinearCode, MpParams> compose_impl(const std::vector<LinearCode>& codes,
                                             const FqMatrix& a, bool known_nsc) {
  if (codes.empty()) throw std::invalid_argument("composition needs at least one code");
  const Field& f = codes.front().field();
  const int n = codes.front().n();
  for (const LinearCode& c : codes) {
    if (c.field() != f) throw std::invalid_argument("ingredient codes must share a field");
    if (c.n() != n) throw std::invalid_argument("ingredient codes must share a length");
  }
  const int m = static_cast<int>(codes.size());
  const int big_n = a.cols();
  if (a.field() != f) throw std::invalid_argument("matrix field mismatch");
  if (a.rows() != m) throw std::invalid_argument("matrix must have one row per code");
  if (rank(a) != m) throw std::invalid_argument("composition matrix must have full rank");

  int total_k = 0;
  for (const LinearCode& c : codes) total_k += c.k();

  FqMatrix gen(f, total_k, big_n * n);
  int row0 = 0;
  for (int i = 0; i < m; ++i) {
    const FqMatrix& gi = codes[i].generator();
    for (int j = 0; j < big_n; ++j) {
      const FieldElement s = a.at(i, j);
      if (s == 0) continue;
      for (int r = 0; r < gi.rows(); ++r)
        for (int c = 0; c < n; ++c)
          gen.at(row0 + r, j * n + c) = f.mul(s, gi.at(r, c));
    }
    row0 += gi.rows();
  }
  LinearCode code = LinearCode::from_generator(gen);
  if (code.k() != total_k)
    throw std::logic_error("full-rank composition lost dimension");

  MpParams params;
  params.N = big_n;
  params.M = m;
  params.k = total_k;

  bool nested = true;
  for (int i = 0; i + 1 < m; ++i)
    if (!is_subcode(codes[i + 1], codes[i])) {
      nested = false;
      break;
    }

  const bool nsc = known_nsc || is_nsc(a);

  // Distances of the ingredients; identical ingredients share one search.
  params.ingredient_d.resize(m);
  std::vector<bool> all_exact(m, true);
  for (int i = 0; i < m; ++i) {
    int cached = -1;
    for (int j = 0; j < i; ++j)
      if (codes[j] == codes[i]) {
        cached = j;
        break;
      }
    if (cached >= 0) {
      params.ingredient_d[i] = params.ingredient_d[cached];
      all_exact[i] = all_exact[cached];
      continue;
    }
    const DistanceResult d = min_distance(codes[i]);
    params.ingredient_d[i] = d.value;
    all_exact[i] = d.exact;
  }

  // rho_i: distance of the code spanned by the first i rows of A.
  params.rho.resize(m);
  for (int i = 0; i < m; ++i) {
    if (nsc) {
      params.rho[i] = big_n - i;  // rho_{i+1} = N - (i+1) + 1
      continue;
    }
    std::vector<std::vector<FieldElement>> rows;
    for (int r = 0; r <= i; ++r) rows.push_back(a.row(r));
    const DistanceResult d =
        min_distance(LinearCode::from_generator(FqMatrix::from_rows(f, rows)));
    params.rho[i] = d.value;
    if (!d.exact) all_exact[i] = false;
  }

  params.d_lower = params.ingredient_d[0] * params.rho[0];
  bool bound_exactly_known = all_exact[0];
  for (int i = 1; i < m; ++i) {
    params.d_lower = std::min(params.d_lower, params.ingredient_d[i] * params.rho[i]);
    bound_exactly_known = bound_exactly_known && all_exact[i];
  }
  params.exact = nested && bound_exactly_known;
  return {std::move(code), std::move(params)};
}

}  // namespace

bool is_nsc(const FqMatrix& a) {
  if (a.rows() > a.cols()) throw std::invalid_argument("NSC requires rows <= cols");
  for (int i = 1; i <= a.rows(); ++i) {
    std::vector<int> idx(i);
    for (int t = 0; t < i; ++t) idx[t] = t;
    do {
      FqMatrix minor(a.field(), i, i);
      for (int r = 0; r < i; ++r)
        for (int c = 0; c < i; ++c) minor.at(r, c) = a.at(r, idx[c]);
      if (det(minor) == 0) return false;
    } while (next_combination(idx, a.cols()));
  }
  return true;
}

NscMatrix vandermonde_nsc(const Field& f, const std::vector<FieldElement>& points,
                          int m_rows) {
  const int n = static_cast<int>(points.size());
  if (m_rows < 1 || m_rows > n) throw std::invalid_argument("row count out of range");
  for (int i = 0; i < n; ++i) {
    f.element(points[i]);
    for (int j = i + 1; j < n; ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("Vandermonde points must be distinct");
  }
  FqMatrix a(f, m_rows, n);
  for (int j = 0; j < n; ++j) {
    FieldElement power = 1;
    for (int i = 0; i < m_rows; ++i) {
      a.at(i, j) = power;
      power = f.mul(power, points[j]);
    }
  }
  if (!is_nsc(a)) throw std::logic_error("Vandermonde matrix failed the NSC check");
  return NscMatrix{std::move(a)};
}

std::pair<LinearCode, MpParams> compose(const std::vector<LinearCode>& codes,
                                        const FqMatrix& a) {
  return compose_impl(codes, a, false);
}

std::pair<LinearCode, MpParams> compose(const std::vector<LinearCode>& codes,
                                        const NscMatrix& a) {
  return compose_impl(codes, a.a, true);
}

}  // namespace lrc
