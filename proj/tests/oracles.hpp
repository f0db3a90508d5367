#pragma once

// Slow, independent reference implementations the unit tests compare
// against. Nothing here shares code paths with the library beyond the
// Field interface itself.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "bchcert/bch.hpp"
#include "bchcert/gf.hpp"
#include "bchcert/locator.hpp"
#include "bchcert/poly.hpp"

namespace ref {

using bchcert::Element;
using bchcert::Field;
using bchcert::Matrix;
using bchcert::Polynomial;

// Schoolbook arithmetic on polynomial-basis encodings, reducing modulo the
// field's stored modulus. Shares nothing with the log/Zech tables.
struct EncodedField {
  int p;
  int e;
  std::vector<int> modulus;  // monic, constant first

  explicit EncodedField(const Field& f)
      : p(f.characteristic()), e(f.degree()), modulus(f.modulus()) {}

  std::vector<int> digits(std::uint32_t v) const {
    std::vector<int> d(e);
    for (int i = 0; i < e; ++i) {
      d[i] = static_cast<int>(v % p);
      v /= p;
    }
    return d;
  }
  std::uint32_t encode(const std::vector<int>& d) const {
    std::uint32_t v = 0;
    for (int i = e - 1; i >= 0; --i) v = v * p + static_cast<std::uint32_t>(d[i]);
    return v;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < e; ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = digits(a), y = digits(b);
    std::vector<int> prod(2 * e, 0);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (int d = 2 * e - 1; d >= e; --d) {
      const int c = prod[d];
      if (c == 0) continue;
      for (int i = 0; i <= e; ++i) prod[d - e + i] = ((prod[d - e + i] - c * modulus[i]) % p + p) % p;
    }
    prod.resize(e);
    return encode(prod);
  }
};

// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<Matrix> gauss_inverse(const Field& f, Matrix a) {
  const std::size_t r = a.size();
  Matrix inv(r, std::vector<Element>(r));
  for (std::size_t i = 0; i < r; ++i) inv[i][i] = f.one();
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    while (piv < r && a[piv][col].is_zero()) ++piv;
    if (piv == r) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Element s = f.inv(a[col][col]);
    for (std::size_t j = 0; j < r; ++j) {
      a[col][j] = f.mul(a[col][j], s);
      inv[col][j] = f.mul(inv[col][j], s);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      const Element c = a[i][col];
      for (std::size_t j = 0; j < r; ++j) {
        a[i][j] = f.sub(a[i][j], f.mul(c, a[col][j]));
        inv[i][j] = f.sub(inv[i][j], f.mul(c, inv[col][j]));
      }
    }
  }
  return inv;
}

inline Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix c(a.size(), std::vector<Element>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) c[i][j] = f.add(c[i][j], f.mul(a[i][k], b[k][j]));
  return c;
}

inline bool is_identity(const Field& f, const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != (i == j ? f.one() : f.zero())) return false;
  return true;
}

// M = (x_j^(i-1)), rows i = 1..r.
inline Matrix vandermonde(const Field& f, const std::vector<Element>& x, bool modified) {
  const std::size_t r = x.size();
  Matrix m(r, std::vector<Element>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m[i][j] = f.pow(x[j], static_cast<std::int64_t>(i + (modified ? 1 : 0)));
  return m;
}

inline std::vector<Element> random_points(const Field& f, std::size_t r, std::mt19937_64& rng,
                                          bool avoid_one) {
  std::set<std::int32_t> used;
  std::vector<Element> out;
  std::uniform_int_distribution<std::int32_t> dist(0, static_cast<std::int32_t>(f.order()) - 1);
  while (out.size() < r) {
    const std::int32_t k = dist(rng);
    if ((avoid_one && k == 0) || !used.insert(k).second) continue;
    out.push_back(Element::from_log(k));
  }
  return out;
}

// Every monic polynomial of the given degree with coefficients in GF(s),
// s a subfield size of f's field.
inline std::vector<Polynomial> monic_polys(const bchcert::FieldPtr& f, int degree, std::uint64_t s) {
  std::vector<Element> sub{f->zero()};
  for (std::uint64_t k = 0; k + 1 < s; ++k) sub.push_back(f->from_subfield_log(static_cast<std::int64_t>(k), s));
  std::vector<Polynomial> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(degree), 0);
  while (true) {
    std::vector<Element> c;
    for (auto i : idx) c.push_back(sub[i]);
    c.push_back(f->one());
    out.emplace_back(f, c);
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == sub.size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return out;
}

// Irreducible iff no monic factor of degree 1..deg/2 over GF(s).
inline bool irreducible_by_trial(const Polynomial& f, std::uint64_t s) {
  for (int d = 1; 2 * d <= f.degree(); ++d)
    for (const auto& g : monic_polys(f.field_ptr(), d, s))
      if ((f % g).is_zero()) return false;
  return f.degree() >= 1;
}

// Smallest k with f | x^(s^k) - x, f separable over GF(s).
inline int splitting_degree_scan(const Polynomial& f, std::uint64_t s, int k_max) {
  const auto& F = f.field_ptr();
  const Polynomial x = Polynomial::monomial(F, F->one(), 1);
  Polynomial power = x % f;
  for (int k = 1; k <= k_max; ++k) {
    power = bchcert::powmod(power, s, f);
    if ((power - x % f).is_zero()) return k;
  }
  return -1;
}

// Defining set by the definition: j is in T iff j = (b + i) q^s mod n for
// some 0 <= i <= delta - 2 and s >= 0.
inline std::set<std::uint64_t> defining_set_naive(std::uint64_t q, std::uint64_t n, std::uint64_t delta,
                                                  std::uint64_t b) {
  std::set<std::uint64_t> t;
  for (std::uint64_t i = 0; i + 1 < delta; ++i) {
    std::uint64_t j = (b + i) % n;
    for (std::uint64_t s = 0; s < n; ++s) {
      t.insert(j);
      j = j * q % n;
    }
  }
  return t;
}

}  // namespace ref
