#include "lrc/mds.hpp"

#include <map>
#include <stdexcept>

namespace lrc {
namespace {

void validate_spec(const Field& f, const GrsSpec& spec, bool allow_k_zero) {
  const int n = static_cast<int>(spec.points.size());
  if (spec.multipliers.size() != spec.points.size())
    throw std::invalid_argument("points and multipliers must have equal length");
  if (spec.k < (allow_k_zero ? 0 : 1) || spec.k > n)
    throw std::invalid_argument("dimension out of range");
  if (std::uint64_t(n) > f.size())
    throw std::invalid_argument("more evaluation points than field elements");
  for (int i = 0; i < n; ++i) {
    f.element(spec.points[i]);
    if (f.element(spec.multipliers[i]) == 0)
      throw std::invalid_argument("column multipliers must be nonzero");
    for (int j = i + 1; j < n; ++j)
      if (spec.points[i] == spec.points[j])
        throw std::invalid_argument("evaluation points must be pairwise distinct");
  }
}

FqMatrix moment_rows(const Field& f, const std::vector<FieldElement>& points,
                     const std::vector<FieldElement>& multipliers, int num_rows) {
  const int n = static_cast<int>(points.size());
  FqMatrix m(f, num_rows, n);
  for (int j = 0; j < n; ++j) {
    FieldElement power = multipliers[j];
    for (int i = 0; i < num_rows; ++i) {
      m.at(i, j) = power;
      power = f.mul(power, points[j]);
    }
  }
  return m;
}

}  // namespace

std::vector<FieldElement> grs_dual_multipliers(const Field& f,
                                               const std::vector<FieldElement>& points,
                                               const std::vector<FieldElement>& multipliers) {
  const int n = static_cast<int>(points.size());
  std::vector<FieldElement> dual(n);
  for (int i = 0; i < n; ++i) {
    FieldElement prod = multipliers[i];
    for (int j = 0; j < n; ++j)
      if (j != i) prod = f.mul(prod, f.sub(points[i], points[j]));
    dual[i] = f.inv(prod);
  }
  return dual;
}

LinearCode grs_code(const Field& f, const GrsSpec& spec) {
  validate_spec(f, spec, false);
  const int n = static_cast<int>(spec.points.size());
  const FqMatrix g = moment_rows(f, spec.points, spec.multipliers, spec.k);
  if (spec.k == n) return LinearCode::from_generator(g);
  const auto dual_mult = grs_dual_multipliers(f, spec.points, spec.multipliers);
  const FqMatrix h = moment_rows(f, spec.points, dual_mult, n - spec.k);
  const LinearCode code = LinearCode::from_generator(g);
  // Adopt the structured parity check after the orthogonality sanity check
  // built into from_parts.
  return LinearCode::from_parts(code.generator(), h);
}

LinearCode extended_grs_code(const Field& f, const GrsSpec& spec) {
  validate_spec(f, spec, false);
  if (spec.k < 1) throw std::invalid_argument("extended GRS needs k >= 1");
  const int n = static_cast<int>(spec.points.size());
  FqMatrix g(f, spec.k, n + 1);
  for (int j = 0; j < n; ++j) {
    FieldElement power = spec.multipliers[j];
    for (int i = 0; i < spec.k; ++i) {
      g.at(i, j) = power;
      power = f.mul(power, spec.points[j]);
    }
  }
  g.at(spec.k - 1, n) = 1;  // message coefficient of x^{k-1}
  return LinearCode::from_generator(g);
}

std::vector<FieldElement> default_grs_points(const Field& f, int n) {
  if (std::uint64_t(n) > f.size())
    throw std::invalid_argument("more evaluation points than field elements");
  std::vector<FieldElement> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = static_cast<FieldElement>(i);
  return pts;
}

DensePolynomial cyclic_chain_generator(std::uint64_t q, int k) {
  if (q % 2 == 0) throw std::invalid_argument("the chain requires odd q");
  if (k % 2 == 0) throw std::invalid_argument("the chain requires odd dimension");
  if (k < 1 || std::uint64_t(k) > q)
    throw std::invalid_argument("dimension out of range for length q + 1");

  const Field base = field_from_order(q);
  const Field ext(base.characteristic(), 2 * base.degree());
  const FieldElement beta = nth_root_of_unity(ext, q + 1);

  // Exponent run of length q+1-k centered at (q+1)/2; closed under
  // i -> -i mod (q+1), which forces the coefficients into GF(q).
  const int first = (k + 1) / 2;
  const int last = static_cast<int>(q) - (k - 1) / 2;
  std::vector<FieldElement> roots;
  for (int i = first; i <= last; ++i) roots.push_back(ext.pow(beta, i));

  const DensePolynomial g = poly_from_roots(ext, roots);

  const auto embed = subfield_embedding(base, ext);
  std::map<FieldElement, FieldElement> back;
  for (std::uint64_t v = 0; v < base.size(); ++v)
    back[embed[v]] = static_cast<FieldElement>(v);

  DensePolynomial projected;
  projected.coefficients.reserve(g.coefficients.size());
  for (FieldElement c : g.coefficients) {
    const auto it = back.find(c);
    if (it == back.end())
      throw std::logic_error("chain generator coefficient escapes the base field");
    projected.coefficients.push_back(it->second);
  }
  return projected;
}

LinearCode cyclic_mds_chain(std::uint64_t q, int k) {
  const DensePolynomial g = cyclic_chain_generator(q, k);
  const Field f = field_from_order(q);
  const int n = static_cast<int>(q) + 1;
  FqMatrix gen(f, k, n);
  for (int i = 0; i < k; ++i)
    for (std::size_t j = 0; j < g.coefficients.size(); ++j)
      gen.at(i, i + static_cast<int>(j)) = g.coefficients[j];
  return LinearCode::from_generator(gen);
}

}  // namespace lrc
