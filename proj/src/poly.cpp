#include "bchcert/poly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bchcert/error.hpp"

namespace bchcert {

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (a.field_ptr() != b.field_ptr()) {
    throw Error(ErrorCode::FieldMismatch, "polynomials live over different fields");
  }
}

std::uint64_t resolve_subfield(const Field& field, std::uint64_t subfield_size) {
  if (subfield_size == 0) return field.size();
  if (!field.has_subfield(subfield_size)) {
    throw Error(ErrorCode::NotASubfield, "GF(" + std::to_string(subfield_size) +
                                             ") is not a subfield of GF(" +
                                             std::to_string(field.size()) + ")");
  }
  return subfield_size;
}

Polynomial x_poly(const FieldPtr& field) { return Polynomial::monomial(field, field->one(), 1); }

// x^(q^k) mod f by k successive q-th powers.
Polynomial frobenius_power(const Polynomial& f, std::uint64_t q, int k) {
  Polynomial h = x_poly(f.field_ptr()) % f;
  for (int i = 0; i < k; ++i) h = powmod(h, q, f);
  return h;
}

// Splits a monic squarefree g whose roots all lie in GF(s) into its roots.
void split_linear(const Polynomial& g, std::uint64_t s, std::vector<Element>& roots) {
  const Field& field = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    roots.push_back(field.neg(g.coeff(0)));
    return;
  }
  const FieldPtr& fp = g.field_ptr();
  const Polynomial one = Polynomial::monomial(fp, field.one(), 0);
  const Polynomial x = x_poly(fp);
  for (std::uint64_t k = 0; k < s; ++k) {
    const Element a = (k == 0) ? field.zero()
                               : field.from_subfield_log(static_cast<std::int64_t>(k - 1), s);
    Polynomial probe(fp);
    if (field.characteristic() == 2) {
      // Trace of a*x from GF(s) down to GF(2).
      Polynomial term = (a * x) % g;
      Polynomial acc(fp);
      std::uint64_t levels = 0;
      for (std::uint64_t t = s; t > 1; t >>= 1) ++levels;
      for (std::uint64_t i = 0; i < levels; ++i) {
        acc = acc + term;
        term = (term * term) % g;
      }
      probe = acc;
    } else {
      const Polynomial shifted = x + Polynomial::monomial(fp, a, 0);
      probe = powmod(shifted, (s - 1) / 2, g) - one;
    }
    const Polynomial d = gcd(g, probe);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, s, roots);
      split_linear(monic(g / d), s, roots);
      return;
    }
  }
  throw Error(ErrorCode::Internal, "equal-degree splitting made no progress");
}

constexpr std::uint64_t kDirectScanLimit = std::uint64_t{1} << 16;

}  // namespace

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldPtr field, std::vector<Element> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::from_ints(FieldPtr field, std::initializer_list<std::int64_t> coeffs) {
  return from_ints(std::move(field), std::vector<std::int64_t>(coeffs));
}

Polynomial Polynomial::from_ints(FieldPtr field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Element> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(field->prime(v));
  return Polynomial(std::move(field), std::move(c));
}

Polynomial Polynomial::monomial(FieldPtr field, Element c, std::size_t degree) {
  std::vector<Element> coeffs(degree + 1, Element{});
  coeffs[degree] = c;
  return Polynomial(std::move(field), std::move(coeffs));
}

Polynomial Polynomial::linear(FieldPtr field, Element root) {
  const Element minus_root = field->neg(root);
  const Element one = field->one();
  return Polynomial(std::move(field), {minus_root, one});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Element Polynomial::operator()(Element x) const {
  Element acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_->add(field_->mul(acc, x), *it);
  }
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  std::vector<Element> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Polynomial(a.field_ptr(), std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  std::vector<Element> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Polynomial(a.field_ptr(), std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_ptr());
  const Field& f = a.field();
  std::vector<Element> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Element ai = a.coeffs()[i];
    if (ai.is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(ai, b.coeffs()[j]));
    }
  }
  return Polynomial(a.field_ptr(), std::move(c));
}

Polynomial operator*(Element c, const Polynomial& a) {
  std::vector<Element> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field().mul(c, a.coeffs()[i]);
  return Polynomial(a.field_ptr(), std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "division by the zero polynomial");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Polynomial(a.field_ptr()), a};
  std::vector<Element> rem = a.coeffs();
  std::vector<Element> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Element lead_inv = f.inv(b.leading());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t top = rem.size(); top-- > db;) {
    const Element factor = f.mul(rem[top], lead_inv);
    if (factor.is_zero()) continue;
    const std::size_t shift = top - db;
    quot[shift] = factor;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, b.coeffs()[i]));
    }
  }
  rem.resize(db);
  return {Polynomial(a.field_ptr(), std::move(quot)), Polynomial(a.field_ptr(), std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

Polynomial monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f.field().inv(f.leading()) * f;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Polynomial powmod(Polynomial base, std::uint64_t k, const Polynomial& mod) {
  Polynomial result = Polynomial::monomial(mod.field_ptr(), mod.field().one(), 0) % mod;
  base = base % mod;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = (result * base) % mod;
    if (k > 1) base = (base * base) % mod;
  }
  return result;
}

Polynomial derivative(const Polynomial& f) {
  if (f.degree() < 1) return Polynomial(f.field_ptr());
  std::vector<Element> c(static_cast<std::size_t>(f.degree()));
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    c[i - 1] = f.field().scale(f.coeffs()[i], static_cast<std::int64_t>(i));
  }
  return Polynomial(f.field_ptr(), std::move(c));
}

Polynomial compose(const Polynomial& f, const Polynomial& g) {
  require_same_field(f, g);
  Polynomial acc(f.field_ptr());
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * g + Polynomial::monomial(f.field_ptr(), *it, 0);
  }
  return acc;
}

Polynomial reciprocal(const Polynomial& f) {
  std::vector<Element> c(f.coeffs().rbegin(), f.coeffs().rend());
  return Polynomial(f.field_ptr(), std::move(c));
}

bool is_separable(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "separability of the zero polynomial");
  return gcd(f, derivative(f)).degree() == 0;
}

bool is_irreducible(const Polynomial& f, std::uint64_t base_size) {
  const std::uint64_t q = resolve_subfield(f.field(), base_size);
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const Polynomial g = monic(f);
  const Polynomial x = x_poly(g.field_ptr());
  if (!(frobenius_power(g, q, d) == x % g)) return false;
  for (auto r : prime_factors(static_cast<std::uint64_t>(d))) {
    const Polynomial h = frobenius_power(g, q, d / static_cast<int>(r));
    if (gcd(h - x, g).degree() != 0) return false;
  }
  return true;
}

std::vector<Element> roots_in_field_serial(const Polynomial& f, std::uint64_t subfield_size) {
  const Field& field = f.field();
  const std::uint64_t s = resolve_subfield(field, subfield_size);
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Element> roots;
  if (f(field.zero()).is_zero()) roots.push_back(field.zero());
  for (std::uint64_t k = 0; k + 1 < s; ++k) {
    const Element y = field.from_subfield_log(static_cast<std::int64_t>(k), s);
    if (f(y).is_zero()) roots.push_back(y);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Element> roots_in_field(const Polynomial& f, std::uint64_t subfield_size) {
  const Field& field = f.field();
  const std::uint64_t s = resolve_subfield(field, subfield_size);
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  if (s > field_cap()) throw Error(ErrorCode::FieldTooLarge, "root search field exceeds the cap");

  std::vector<Element> roots;
  if (s <= kDirectScanLimit) {
    if (f(field.zero()).is_zero()) roots.push_back(field.zero());
    const std::int64_t count = static_cast<std::int64_t>(s) - 1;
#pragma omp parallel
    {
      std::vector<Element> local;
#pragma omp for schedule(static) nowait
      for (std::int64_t k = 0; k < count; ++k) {
        const Element y = field.from_subfield_log(k, s);
        if (f(y).is_zero()) local.push_back(y);
      }
#pragma omp critical
      roots.insert(roots.end(), local.begin(), local.end());
    }
  } else {
    // Reduce to the product of the distinct linear factors over GF(s).
    const Polynomial g = monic(f);
    const Polynomial x = x_poly(g.field_ptr());
    const Polynomial linear_part = gcd(g, powmod(x, s, g) - x);
    split_linear(linear_part, s, roots);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

int splitting_field_degree(const Polynomial& f, std::uint64_t base_size) {
  const std::uint64_t q = resolve_subfield(f.field(), base_size);
  if (!is_separable(f)) throw Error(ErrorCode::NotSeparable, "polynomial has repeated roots");
  // Distinct-degree factorization; the answer is the lcm of factor degrees.
  Polynomial rest = monic(f);
  const Polynomial x = x_poly(rest.field_ptr());
  Polynomial h = x % rest;
  std::uint64_t degree = 1;
  for (int i = 1; rest.degree() >= 2 * i; ++i) {
    h = powmod(h, q, rest);
    const Polynomial g = gcd(h - x, rest);
    if (g.degree() > 0) {
      degree = std::lcm(degree, static_cast<std::uint64_t>(i));
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) degree = std::lcm(degree, static_cast<std::uint64_t>(rest.degree()));
  return static_cast<int>(degree);
}

}  // namespace bchcert
