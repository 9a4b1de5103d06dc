#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lrc {

/// Element of GF(p^m) in its canonical integer encoding: the coefficient
/// vector (c_0, ..., c_{m-1}) over GF(p) with respect to the power basis of
/// the modulus, packed as c_0 + c_1*p + ... + c_{m-1}*p^{m-1}.
using FieldElement = std::uint32_t;

bool is_prime(std::uint64_t n);

/// GF(p^m) with exact arithmetic, p prime, m >= 1, p^m <= 2^32.
///
/// Prime fields compute modulo p directly. Extension fields reduce
/// polynomials modulo a monic irreducible modulus of degree m over GF(p),
/// stored constant-term first. The two-argument constructor selects the
/// canonical modulus: the monic irreducible whose coefficient vector, read
/// as a base-p integer, is smallest. That makes element encodings
/// reproducible across runs.
class Field {
public:
  Field(std::uint32_t p, std::uint32_t m);
  Field(std::uint32_t p, std::uint32_t m, std::vector<FieldElement> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint64_t size() const { return q_; }
  bool prime_field() const { return m_ == 1; }

  /// Modulus coefficients, constant term first, length m+1, leading 1.
  /// For m = 1 this is the unused placeholder x - 0, i.e. {0, 1}.
  const std::vector<FieldElement>& modulus() const { return modulus_; }

  FieldElement zero() const { return 0; }
  FieldElement one() const { return 1; }

  /// Bounds-checked conversion of an integer encoding to an element.
  FieldElement element(std::uint64_t value) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  std::string describe() const;  // e.g. "GF(7)" or "GF(25) = GF(5^2)"

private:
  void validate_and_finish();

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint64_t q_ = 0;
  std::vector<FieldElement> modulus_;
};

/// Constructs GF(q) for a prime power q, factoring q = p^m.
Field field_from_order(std::uint64_t q);

/// Multiplicative order of a nonzero element.
std::uint64_t multiplicative_order(const Field& f, FieldElement a);

/// The element of multiplicative order exactly n with the smallest integer
/// encoding. Requires n | q - 1.
FieldElement nth_root_of_unity(const Field& f, std::uint64_t n);

/// Dense univariate polynomial over a field, coefficients constant-term
/// first with no trailing zeros. The zero polynomial has no coefficients.
struct DensePolynomial {
  std::vector<FieldElement> coefficients;

  bool is_zero() const { return coefficients.empty(); }
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  bool operator==(const DensePolynomial&) const = default;
};

/// Monic product of (x - root) over all supplied roots; empty input gives 1.
DensePolynomial poly_from_roots(const Field& f, const std::vector<FieldElement>& roots);

FieldElement poly_eval(const Field& f, const DensePolynomial& poly, FieldElement x);

/// Embedding table of `sub` into `sup`: index = encoding in sub, value =
/// encoding of the image in sup. Requires equal characteristic and
/// sub.degree() | sup.degree(). The embedding sends the power-basis
/// generator of sub to the smallest root of sub's modulus in sup, which
/// fixes it deterministically.
std::vector<FieldElement> subfield_embedding(const Field& sub, const Field& sup);

}  // namespace lrc
