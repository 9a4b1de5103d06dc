#include "lrc/galois.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>

namespace lrc {
namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t(1) << 32;

// --- polynomial helpers over GF(p), coefficients constant-term first ---

using GfpPoly = std::vector<std::uint32_t>;

void trim(GfpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a mod b, b nonzero. Works in place on a copy of a.
GfpPoly gfp_mod(GfpPoly a, const GfpPoly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = [&] {
    // b is monic everywhere we call this, but invert anyway for safety.
    std::uint64_t x = b[db] % p, r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  }();
  while (a.size() > db) {
    const std::size_t da = a.size() - 1;
    const std::uint64_t c = a[da] % p;
    if (c != 0) {
      const std::uint64_t factor = c * lead_inv % p;
      for (std::size_t i = 0; i <= db; ++i) {
        std::uint64_t t = std::uint64_t(factor) * b[i] % p;
        a[da - db + i] = static_cast<std::uint32_t>((a[da - db + i] + p - t) % p);
      }
    }
    a.pop_back();
    trim(a);
    if (a.size() <= db) break;
  }
  trim(a);
  return a;
}

bool gfp_is_irreducible(const GfpPoly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 0) return false;
  if (m == 1) return true;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::size_t d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      GfpPoly div(d + 1, 0);
      std::uint64_t v = low;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      div[d] = 1;
      if (gfp_mod(f, div, p).empty()) return false;
    }
  }
  return true;
}

GfpPoly canonical_modulus(std::uint32_t p, std::uint32_t m) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    GfpPoly f(m + 1, 0);
    std::uint64_t v = low;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (gfp_is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (m == 1) {
    modulus_ = {0, 1};
  } else {
    auto f = canonical_modulus(p, m);
    modulus_.assign(f.begin(), f.end());
  }
  validate_and_finish();
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<FieldElement> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (modulus_.size() != std::size_t(m) + 1)
    throw std::invalid_argument("modulus must have degree m");
  for (FieldElement c : modulus_)
    if (c >= p) throw std::invalid_argument("modulus coefficients must lie in GF(p)");
  if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
  if (m == 1) {
    if (modulus_ != std::vector<FieldElement>{0, 1})
      throw std::invalid_argument("prime fields use the placeholder modulus x");
  } else {
    GfpPoly f(modulus_.begin(), modulus_.end());
    if (!gfp_is_irreducible(f, p))
      throw std::invalid_argument("modulus is reducible over GF(p)");
  }
  validate_and_finish();
}

void Field::validate_and_finish() {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    q *= p_;
    if (q > kMaxFieldSize)
      throw std::invalid_argument("field size p^m exceeds 2^32");
  }
  q_ = q;
}

FieldElement Field::element(std::uint64_t value) const {
  if (value >= q_) throw std::invalid_argument("encoding out of range for field");
  return static_cast<FieldElement>(value);
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (m_ == 1) {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<FieldElement>(s);
  }
  std::uint64_t va = a, vb = b, out = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint64_t s = va % p_ + vb % p_;
    if (s >= p_) s -= p_;
    out += s * mult;
    mult *= p_;
    va /= p_;
    vb /= p_;
  }
  return static_cast<FieldElement>(out);
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
  if (m_ == 1)
    return a >= b ? a - b : static_cast<FieldElement>(a + p_ - b);
  std::uint64_t va = a, vb = b, out = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint64_t x = va % p_, y = vb % p_;
    out += (x >= y ? x - y : x + p_ - y) * mult;
    mult *= p_;
    va /= p_;
    vb /= p_;
  }
  return static_cast<FieldElement>(out);
}

FieldElement Field::neg(FieldElement a) const { return sub(0, a); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (m_ == 1) return static_cast<FieldElement>(std::uint64_t(a) * b % p_);
  if (a == 0 || b == 0) return 0;

  std::array<std::uint32_t, 64> da{}, db{}, prod{};
  std::uint64_t va = a, vb = b;
  for (std::uint32_t i = 0; i < m_; ++i) {
    da[i] = static_cast<std::uint32_t>(va % p_);
    db[i] = static_cast<std::uint32_t>(vb % p_);
    va /= p_;
    vb /= p_;
  }
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
    }
  }
  // Reduce modulo the monic modulus: x^m == -(lower part of modulus).
  for (int i = 2 * int(m_) - 2; i >= int(m_); --i) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::uint32_t j = 0; j < m_; ++j) {
      std::uint64_t t = c * modulus_[j] % p_;
      prod[i - m_ + j] = static_cast<std::uint32_t>((prod[i - m_ + j] + p_ - t) % p_);
    }
  }
  std::uint64_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += std::uint64_t(prod[i]) * mult;
    mult *= p_;
  }
  return static_cast<FieldElement>(out);
}

FieldElement Field::inv(FieldElement a) const {
  if (a == 0) throw std::domain_error("division by zero in finite field");
  if (m_ == 1) return pow(a, p_ - 2);

  // Extended Euclid on (a as polynomial, modulus) over GF(p).
  auto mod_p = [this](std::uint64_t x) { return static_cast<std::uint32_t>(x % p_); };
  GfpPoly r0(modulus_.begin(), modulus_.end());
  GfpPoly r1;
  {
    std::uint64_t v = a;
    for (std::uint32_t i = 0; i < m_; ++i) {
      r1.push_back(static_cast<std::uint32_t>(v % p_));
      v /= p_;
    }
    trim(r1);
  }
  GfpPoly s0 = {}, s1 = {1};  // coefficients of a in r0, r1
  auto scalar_inv = [&](std::uint32_t c) {
    std::uint64_t x = c, r = 1, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * x % p_;
      x = x * x % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  };
  while (!r1.empty()) {
    // Divide r0 by r1, tracking the cofactor.
    GfpPoly q(r0.size(), 0);
    GfpPoly rem = r0;
    const std::uint32_t li = scalar_inv(r1.back());
    while (rem.size() >= r1.size() && !rem.empty()) {
      const std::size_t shift = rem.size() - r1.size();
      const std::uint32_t factor = mod_p(std::uint64_t(rem.back()) * li);
      q[shift] = factor;
      for (std::size_t i = 0; i < r1.size(); ++i) {
        std::uint64_t t = std::uint64_t(factor) * r1[i] % p_;
        rem[shift + i] = mod_p(rem[shift + i] + p_ - t);
      }
      trim(rem);
      if (rem.empty()) break;
    }
    trim(q);
    // s_next = s0 - q*s1
    GfpPoly qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j)
        qs[i + j] = mod_p(qs[i + j] + std::uint64_t(q[i]) * s1[j]);
    }
    trim(qs);
    GfpPoly s_next(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s_next.size(); ++i) {
      std::uint32_t x = i < s0.size() ? s0[i] : 0;
      std::uint32_t y = i < qs.size() ? qs[i] : 0;
      s_next[i] = mod_p(std::uint64_t(x) + p_ - y);
    }
    trim(s_next);
    r0 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s_next);
  }
  // r0 = gcd is a nonzero constant; a^{-1} = s0 / r0.
  if (r0.size() != 1) throw std::logic_error("modulus not coprime to element");
  const std::uint32_t gi = scalar_inv(r0[0]);
  std::uint64_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t c = i < s0.size() ? mod_p(std::uint64_t(s0[i]) * gi) : 0;
    out += std::uint64_t(c) * mult;
    mult *= p_;
  }
  return static_cast<FieldElement>(out);
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  FieldElement base = a, out = 1;
  while (e) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

bool Field::operator==(const Field& other) const {
  return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

std::string Field::describe() const {
  if (m_ == 1) return "GF(" + std::to_string(q_) + ")";
  return "GF(" + std::to_string(q_) + ") = GF(" + std::to_string(p_) + "^" +
         std::to_string(m_) + ")";
}

Field field_from_order(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t m = 0;
  std::uint64_t v = q;
  while (v > 1) {
    if (v % p != 0) throw std::invalid_argument("field order must be a prime power");
    v /= p;
    ++m;
  }
  return Field(static_cast<std::uint32_t>(p), m);
}

std::uint64_t multiplicative_order(const Field& f, FieldElement a) {
  if (a == 0) throw std::invalid_argument("zero has no multiplicative order");
  std::uint64_t order = f.size() - 1;
  for (std::uint64_t t : prime_factors(f.size() - 1)) {
    while (order % t == 0 && f.pow(a, order / t) == 1) order /= t;
  }
  return order;
}

FieldElement nth_root_of_unity(const Field& f, std::uint64_t n) {
  if (n == 0 || (f.size() - 1) % n != 0)
    throw std::domain_error("n does not divide q - 1");
  const auto factors = prime_factors(n);
  for (std::uint64_t v = 1; v < f.size(); ++v) {
    const FieldElement a = static_cast<FieldElement>(v);
    if (f.pow(a, n) != 1) continue;
    bool exact = true;
    for (std::uint64_t t : factors) {
      if (f.pow(a, n / t) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return a;
  }
  throw std::logic_error("no element of the requested order");  // unreachable
}

DensePolynomial poly_from_roots(const Field& f, const std::vector<FieldElement>& roots) {
  std::vector<FieldElement> c = {1};
  for (FieldElement r : roots) {
    std::vector<FieldElement> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], c[i]);
      next[i] = f.sub(next[i], f.mul(r, c[i]));
    }
    c = std::move(next);
  }
  return DensePolynomial{std::move(c)};
}

FieldElement poly_eval(const Field& f, const DensePolynomial& poly, FieldElement x) {
  FieldElement acc = 0;
  for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend(); ++it)
    acc = f.add(f.mul(acc, x), *it);
  return acc;
}

std::vector<FieldElement> subfield_embedding(const Field& sub, const Field& sup) {
  if (sub.characteristic() != sup.characteristic())
    throw std::invalid_argument("subfield embedding requires equal characteristic");
  if (sup.degree() % sub.degree() != 0)
    throw std::invalid_argument("subfield degree must divide extension degree");
  const std::uint32_t p = sub.characteristic();

  std::vector<FieldElement> table(sub.size());
  if (sub.degree() == 1) {
    // Constants encode identically in every extension with the power basis.
    for (std::uint64_t v = 0; v < sub.size(); ++v)
      table[v] = static_cast<FieldElement>(v);
    return table;
  }

  DensePolynomial mod{std::vector<FieldElement>(sub.modulus().begin(), sub.modulus().end())};
  FieldElement theta = 0;
  bool found = false;
  for (std::uint64_t v = 0; v < sup.size(); ++v) {
    if (poly_eval(sup, mod, static_cast<FieldElement>(v)) == 0) {
      theta = static_cast<FieldElement>(v);
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("modulus has no root in the extension field");

  for (std::uint64_t v = 0; v < sub.size(); ++v) {
    std::uint64_t digits = v;
    FieldElement acc = 0, power = 1;
    for (std::uint32_t i = 0; i < sub.degree(); ++i) {
      const FieldElement c = static_cast<FieldElement>(digits % p);
      acc = sup.add(acc, sup.mul(c, power));
      power = sup.mul(power, theta);
      digits /= p;
    }
    table[v] = acc;
  }
  return table;
}

}  // namespace lrc
