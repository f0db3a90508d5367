#include "bchcert/gf.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "bchcert/error.hpp"

namespace bchcert {

namespace {

// Dense polynomials over the prime field GF(p), constant term first. Only
// used while choosing the modulus and building the log tables.
using PrimePoly = std::vector<int>;

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  int result = 1;
  int base = a % p;
  for (int k = p - 2; k > 0; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

PrimePoly poly_mod(PrimePoly a, const PrimePoly& f, int p) {
  trim(a);
  const int df = static_cast<int>(f.size()) - 1;
  const int lead_inv = inv_mod(f.back(), p);
  while (static_cast<int>(a.size()) - 1 >= df) {
    const int shift = static_cast<int>(a.size()) - 1 - df;
    const int factor = a.back() * lead_inv % p;
    for (int i = 0; i <= df; ++i) {
      a[shift + i] = ((a[shift + i] - factor * f[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, int p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), f, p);
}

PrimePoly poly_powmod(PrimePoly base, std::uint64_t k, const PrimePoly& f, int p) {
  PrimePoly result{1};
  base = poly_mod(std::move(base), f, p);
  for (; k > 0; k >>= 1) {
    if (k & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
  }
  return result;
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PrimePoly poly_sub(PrimePoly a, const PrimePoly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  trim(a);
  return a;
}

// Rabin's test over GF(p).
bool prime_poly_irreducible(const PrimePoly& f, int p) {
  const int e = static_cast<int>(f.size()) - 1;
  if (e <= 1) return e == 1;
  const PrimePoly x{0, 1};
  std::vector<PrimePoly> frob{x};
  for (int i = 1; i <= e; ++i) frob.push_back(poly_powmod(frob.back(), p, f, p));
  if (poly_sub(frob[e], x, p).size() != 0) return false;
  for (auto r : prime_factors(static_cast<std::uint64_t>(e))) {
    const PrimePoly g = poly_gcd(poly_sub(frob[e / r], x, p), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// Arithmetic on polynomial-basis encodings (base-p digits).
struct EncodedArith {
  int p;
  int e;
  PrimePoly modulus;

  PrimePoly digits(std::uint32_t v) const {
    PrimePoly d(e, 0);
    for (int i = 0; i < e; ++i) {
      d[i] = static_cast<int>(v % p);
      v /= p;
    }
    trim(d);
    return d;
  }
  std::uint32_t encode(const PrimePoly& d) const {
    std::uint32_t v = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
    return v;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return encode(poly_mulmod(digits(a), digits(b), modulus, p));
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
    return encode(poly_powmod(digits(a), k, modulus, p));
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t v = 0, scale = 1;
    for (int i = 0; i < e; ++i) {
      v += scale * ((a % p + b % p) % p);
      a /= p;
      b /= p;
      scale *= p;
    }
    return v;
  }
};

}  // namespace

std::uint64_t field_cap() {
  if (const char* env = std::getenv("BCH_FIELD_CAP"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, std::string("BCH_FIELD_CAP is not an integer: ") + env);
    }
  }
  return kDefaultFieldCap;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<int>(p), e);
}

std::uint64_t checked_pow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, b, &r)) {
      throw Error(ErrorCode::FieldTooLarge, "integer power overflows 64 bits");
    }
  }
  return r;
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

FieldPtr Field::build(int p, int e, std::uint64_t cap) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::NotPrime, "field characteristic " + std::to_string(p) + " is not prime");
  }
  if (e < 1) throw Error(ErrorCode::FieldTooLarge, "field degree must be positive");
  std::uint64_t size = 0;
  try {
    size = checked_pow(static_cast<std::uint64_t>(p), e);
  } catch (const Error&) {
    size = UINT64_MAX;
  }
  if (size > cap || size > (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::FieldTooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(e) +
                                              ") exceeds the field cap " + std::to_string(cap));
  }

  auto field = std::shared_ptr<Field>(new Field());
  field->spec_ = FieldSpec{p, e, static_cast<std::uint32_t>(size)};

  // First monic irreducible of degree e, lower coefficients in ascending
  // base-p order with the constant term varying fastest.
  const std::uint64_t lower_count = size;
  PrimePoly modulus;
  for (std::uint64_t code = 0; code < lower_count; ++code) {
    PrimePoly f(e + 1, 0);
    std::uint64_t v = code;
    for (int i = 0; i < e; ++i) {
      f[i] = static_cast<int>(v % p);
      v /= p;
    }
    f[e] = 1;
    if (prime_poly_irreducible(f, p)) {
      modulus = std::move(f);
      break;
    }
  }
  if (modulus.empty()) throw Error(ErrorCode::Internal, "no irreducible modulus found");
  field->modulus_ = modulus;

  const EncodedArith arith{p, e, modulus};
  const std::uint64_t order = size - 1;
  const auto order_primes = prime_factors(order);

  // First primitive element in encoding order.
  std::uint32_t generator = 0;
  for (std::uint32_t g = 1; g < size; ++g) {
    bool primitive = true;
    for (auto r : order_primes) {
      if (arith.pow(g, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = g;
      break;
    }
  }
  if (generator == 0) throw Error(ErrorCode::Internal, "no primitive element found");

  field->exp_.assign(order, 0);
  field->log_.assign(size, Element::kZeroLog);
  std::uint32_t cur = 1;
  for (std::uint64_t k = 0; k < order; ++k) {
    if (field->log_[cur] != Element::kZeroLog) {
      throw Error(ErrorCode::Internal, "primitive element has short order");
    }
    field->exp_[k] = cur;
    field->log_[cur] = static_cast<std::int32_t>(k);
    cur = arith.mul(cur, generator);
  }
  if (cur != 1) throw Error(ErrorCode::Internal, "exp table does not close");

  field->zech_.assign(order, Element::kZeroLog);
  for (std::uint64_t k = 0; k < order; ++k) {
    field->zech_[k] = field->log_[arith.add(1, field->exp_[k])];
  }
  field->minus_one_log_ = (p == 2) ? 0 : static_cast<std::int32_t>(order / 2);
  return field;
}

Element Field::from_int(std::uint32_t encoding) const {
  if (encoding >= size()) {
    throw Error(ErrorCode::FieldMismatch, "encoding " + std::to_string(encoding) + " outside field");
  }
  const std::int32_t k = log_[encoding];
  return k < 0 ? Element{} : Element::from_log(k);
}

std::uint32_t Field::to_int(Element a) const {
  return a.is_zero() ? 0 : exp_[static_cast<std::size_t>(a.log())];
}

Element Field::prime(std::int64_t c) const {
  std::int64_t r = c % spec_.p;
  if (r < 0) r += spec_.p;
  return from_int(static_cast<std::uint32_t>(r));
}

Element Field::inv(Element a) const {
  if (a.is_zero()) throw Error(ErrorCode::Internal, "inverse of zero");
  return exp(-static_cast<std::int64_t>(a.log()));
}

Element Field::pow(Element a, std::int64_t k) const {
  if (a.is_zero()) {
    if (k < 0) throw Error(ErrorCode::Internal, "negative power of zero");
    return k == 0 ? one() : Element{};
  }
  const std::int64_t ord = order();
  std::int64_t r = k % ord;
  if (r < 0) r += ord;
  return exp(static_cast<std::int64_t>(a.log()) * r);
}

bool Field::has_subfield(std::uint64_t subfield_size) const {
  const auto pe = prime_power(subfield_size);
  return pe && pe->first == spec_.p && spec_.e % pe->second == 0;
}

bool Field::in_subfield(Element a, std::uint64_t subfield_size) const {
  if (!has_subfield(subfield_size)) {
    throw Error(ErrorCode::NotASubfield,
                "GF(" + std::to_string(subfield_size) + ") is not a subfield of GF(" +
                    std::to_string(size()) + ")");
  }
  if (a.is_zero()) return true;
  return a.log() % (order() / (subfield_size - 1)) == 0;
}

std::int64_t Field::subfield_log(Element a, std::uint64_t subfield_size) const {
  if (a.is_zero() || !in_subfield(a, subfield_size)) {
    throw Error(ErrorCode::NotASubfield, "element is not a nonzero member of the subfield");
  }
  return a.log() / (order() / (subfield_size - 1));
}

Element Field::from_subfield_log(std::int64_t k, std::uint64_t subfield_size) const {
  if (!has_subfield(subfield_size)) {
    throw Error(ErrorCode::NotASubfield, "not a subfield");
  }
  return exp(k * static_cast<std::int64_t>(order() / (subfield_size - 1)));
}

Element nth_root_of_unity(const Field& field, std::uint64_t n) {
  if (n == 0 || field.order() % n != 0) {
    throw Error(ErrorCode::NotADivisor, std::to_string(n) + " does not divide |F|-1 = " +
                                            std::to_string(field.order()));
  }
  return field.exp(static_cast<std::int64_t>(field.order() / n));
}

std::uint64_t element_order(const Field& field, Element a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroPoint, "zero has no multiplicative order");
  const std::uint64_t ord = field.order();
  return ord / std::gcd(static_cast<std::uint64_t>(a.log()), ord);
}

Element norm_to_subfield(const Field& field, Element x, std::uint64_t subfield_size) {
  if (!field.has_subfield(subfield_size)) {
    throw Error(ErrorCode::NotASubfield, "GF(" + std::to_string(subfield_size) +
                                             ") is not a subfield of GF(" +
                                             std::to_string(field.size()) + ")");
  }
  return field.pow(x, static_cast<std::int64_t>(field.order() / (subfield_size - 1)));
}

Element trace_to_prime_field(const Field& field, Element x) {
  Element sum = field.zero();
  Element term = x;
  for (int i = 0; i < field.degree(); ++i) {
    sum = field.add(sum, term);
    term = field.pow(term, field.characteristic());
  }
  return sum;
}

std::uint64_t embed_exponent(std::uint64_t i, std::uint64_t q, int h, int m) {
  if (h <= 0 || m <= 0 || m % h != 0) {
    throw Error(ErrorCode::NotADivisor,
                std::to_string(h) + " does not divide " + std::to_string(m));
  }
  const std::uint64_t big = checked_pow(q, m) - 1;
  const std::uint64_t small = checked_pow(q, h) - 1;
  return i * (big / small);
}

std::uint64_t embedding_twist(const Field& small, const Field& big) {
  if (small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0) {
    throw Error(ErrorCode::NotASubfield, "GF(" + std::to_string(small.size()) +
                                             ") does not embed in GF(" +
                                             std::to_string(big.size()) + ")");
  }
  const int p = small.characteristic();
  // Minimal polynomial of alpha_small over GF(p): prod (x - alpha^(p^k)).
  std::vector<Element> minpoly{small.one()};
  Element conj = small.alpha();
  for (int k = 0; k < small.degree(); ++k) {
    std::vector<Element> next(minpoly.size() + 1, small.zero());
    for (std::size_t i = 0; i < minpoly.size(); ++i) {
      next[i + 1] = small.add(next[i + 1], minpoly[i]);
      next[i] = small.sub(next[i], small.mul(conj, minpoly[i]));
    }
    minpoly = std::move(next);
    conj = small.pow(conj, p);
  }
  std::vector<Element> lifted;
  for (auto c : minpoly) {
    const std::uint32_t v = small.to_int(c);
    if (v >= static_cast<std::uint32_t>(p)) {
      throw Error(ErrorCode::Internal, "minimal polynomial left the prime field");
    }
    lifted.push_back(big.from_int(v));
  }
  const std::uint64_t step = big.order() / small.order();
  for (std::uint64_t s = 1; s <= small.order(); ++s) {
    const Element y = big.exp(static_cast<std::int64_t>(s * step));
    Element acc = big.zero();
    for (auto it = lifted.rbegin(); it != lifted.rend(); ++it) acc = big.add(big.mul(acc, y), *it);
    if (acc.is_zero()) return s;
  }
  throw Error(ErrorCode::Internal, "no embedding of the primitive element found");
}

}  // namespace bchcert
