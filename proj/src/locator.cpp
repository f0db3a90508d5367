#include "bchcert/locator.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "bchcert/error.hpp"
#include "bchcert/poly.hpp"

namespace bchcert {

namespace {

void check_points(std::span<const Element> points) {
  std::set<Element> seen;
  for (auto x : points) {
    if (x.is_zero()) throw Error(ErrorCode::ZeroPoint, "locator point is zero");
    if (!seen.insert(x).second) throw Error(ErrorCode::DuplicatePoint, "locator points repeat");
  }
}

// prod_{k != i} (x_i - x_k)
Element difference_product(const Field& f, std::span<const Element> points, std::size_t i) {
  Element acc = f.one();
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k != i) acc = f.mul(acc, f.sub(points[i], points[k]));
  }
  return acc;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

std::vector<Element> elementary_symmetric_excluding(const Field& field,
                                                    std::span<const Element> points,
                                                    std::size_t i) {
  // Coefficients of prod_{k != i} (1 + x_k z): e_0, e_1, ..., e_{r-1}.
  std::vector<Element> e{field.one()};
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k == i) continue;
    e.push_back(field.zero());
    for (std::size_t d = e.size() - 1; d > 0; --d) {
      e[d] = field.add(e[d], field.mul(points[k], e[d - 1]));
    }
  }
  return e;
}

Matrix vandermonde_inverse(const Field& field, std::span<const Element> points) {
  check_points(points);
  const std::size_t r = points.size();
  Matrix inv(r, std::vector<Element>(r));
  for (std::size_t i = 0; i < r; ++i) {
    const auto u = elementary_symmetric_excluding(field, points, i);
    const Element denom_inv = field.inv(difference_product(field, points, i));
    for (std::size_t j = 0; j < r; ++j) {
      // 0-based column j corresponds to (-1)^(r-1-j) U_{r-1-j,i}.
      const std::size_t k = r - 1 - j;
      Element entry = field.mul(u[k], denom_inv);
      if (k % 2 == 1) entry = field.neg(entry);
      inv[i][j] = entry;
    }
  }
  return inv;
}

Matrix modified_vandermonde_inverse(const Field& field, std::span<const Element> points) {
  Matrix inv = vandermonde_inverse(field, points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Element scale = field.inv(points[i]);
    for (auto& entry : inv[i]) entry = field.mul(entry, scale);
  }
  return inv;
}

std::vector<Element> s_values(const Field& field, std::span<const Element> points) {
  check_points(points);
  for (auto x : points) {
    if (x == field.one()) throw Error(ErrorCode::PointIsOne, "locator point equals 1");
  }
  const std::size_t r = points.size();
  std::vector<Element> out(r);
  for (std::size_t j = 0; j < r; ++j) {
    Element num = field.one();
    for (std::size_t k = 0; k < r; ++k) {
      if (k != j) num = field.mul(num, field.sub(field.one(), points[k]));
    }
    const Element den = field.mul(points[j], difference_product(field, points, j));
    out[j] = field.div(num, den);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, Element>> Certificate::support() const {
  std::vector<std::pair<std::uint64_t, Element>> out;
  out.reserve(coefficients.size());
  for (std::size_t j = 0; j < locator_exponents.size(); ++j) {
    out.emplace_back(locator_exponents[j], coefficients[j]);
  }
  out.emplace_back(0, anchor());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Codeword Certificate::word() const {
  const auto s = support();
  return word_from_support(*code, s);
}

Certificate certify(CodePtr code, std::vector<std::uint64_t> locator_exponents,
                    std::optional<Element> anchor) {
  if (code->b != 1) throw Error(ErrorCode::NotNarrowSense, "certificates need a narrow-sense code");
  const Field& f = *code->field;
  if (locator_exponents.size() + 1 != code->delta) {
    throw Error(ErrorCode::BadParameters, "expected " + std::to_string(code->delta - 1) +
                                              " locator exponents, got " +
                                              std::to_string(locator_exponents.size()));
  }
  std::set<std::uint64_t> seen;
  for (auto i : locator_exponents) {
    if (i == 0 || i >= code->n) {
      throw Error(ErrorCode::BadParameters, "locator exponent " + std::to_string(i) +
                                                " outside [1, " + std::to_string(code->n) + ")");
    }
    if (!seen.insert(i).second) {
      throw Error(ErrorCode::DuplicateLocator, "locator exponent " + std::to_string(i) + " repeats");
    }
  }
  const Element c0 = anchor.value_or(f.one());
  if (c0.is_zero() || !code->in_base_field(c0)) {
    throw Error(ErrorCode::BadParameters, "anchor coefficient must lie in GF(q)^*");
  }

  std::vector<Element> points;
  points.reserve(locator_exponents.size());
  for (auto i : locator_exponents) points.push_back(code->beta_pow(static_cast<std::int64_t>(i)));
  const auto s = s_values(f, points);
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j].is_zero() || !code->in_base_field(s[j])) {
      throw CriterionFailed(static_cast<int>(j + 1),
                            "S_" + std::to_string(j + 1) + " is not in GF(q)^* for locators {" +
                                join(locator_exponents) + "}");
    }
  }

  Certificate cert{code, std::move(locator_exponents), s, {}};
  for (auto sj : s) cert.coefficients.push_back(f.neg(f.mul(c0, sj)));
  cert.coefficients.push_back(c0);

  const Codeword w = cert.word();
  if (weight(w) != code->delta || !is_codeword(*code, w)) {
    throw Error(ErrorCode::Internal, "certificate word failed verification");
  }
  return cert;
}

Certificate construct_small_delta(std::uint64_t q, int m, std::uint64_t delta, std::uint64_t cap) {
  if (delta < 2 || delta + 1 > q) {
    throw Error(ErrorCode::DeltaOutOfRange, "need 2 <= delta <= q - 1");
  }
  if (m < 1) throw Error(ErrorCode::BadParameters, "m must be positive");
  const std::uint64_t n = checked_pow(q, m) - 1;
  auto code = build_code(q, n, delta, 1, cap);
  // gamma^s for s = 1..delta-1, gamma the generator of GF(q)^* inside GF(q^m).
  std::vector<std::uint64_t> exps;
  for (std::uint64_t s = 1; s < delta; ++s) exps.push_back(embed_exponent(s, q, 1, m));
  return certify(std::move(code), std::move(exps));
}

Certificate construct_qt_family(std::uint64_t q, int t, int m, std::uint64_t cap) {
  const auto pe = prime_power(q);
  if (!pe) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  const int p = pe->first;
  if (t < 1 || m < 1 || m % (p * t) != 0) {
    throw Error(ErrorCode::BadModulus, "m = " + std::to_string(m) + " is not a multiple of p*t = " +
                                           std::to_string(p * t));
  }
  const std::uint64_t big_q = checked_pow(q, t);
  const std::uint64_t n = checked_pow(q, m) - 1;
  auto code = build_code(q, n, big_q + 1, 1, cap);
  const FieldPtr& field = code->field;

  // L(x) = x^Q - x^(Q-1) + 1
  std::vector<std::int64_t> coeffs(big_q + 1, 0);
  coeffs[0] = 1;
  coeffs[big_q - 1] = -1;
  coeffs[big_q] = 1;
  const Polynomial L = Polynomial::from_ints(field, coeffs);

  const std::uint64_t splitting = checked_pow(q, p * t);
  const auto roots = roots_in_field(L, splitting);
  if (roots.size() != big_q) {
    throw Error(ErrorCode::Internal, "L(x) does not split in GF(q^(pt))");
  }
  std::vector<std::uint64_t> exps;
  for (auto y : roots) {
    const auto k = static_cast<std::uint64_t>(field->subfield_log(y, splitting));
    const std::uint64_t lifted = embed_exponent(k, q, p * t, m);
    if (lifted != static_cast<std::uint64_t>(y.log())) {
      throw Error(ErrorCode::Internal, "subfield exponent does not embed consistently");
    }
    exps.push_back(lifted);
  }
  auto cert = certify(std::move(code), std::move(exps), field->minus_one());
  for (auto s : cert.s_values) {
    if (s != field->one()) throw Error(ErrorCode::Internal, "L-family S_j != 1");
  }
  return cert;
}

Certificate construct_nonprimitive_family(int p, int e, std::uint64_t lambda, std::uint64_t cap) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::BadParameters, "p must be an odd prime");
  }
  if (e < 1 || e % p == 0) throw Error(ErrorCode::BadParameters, "need e >= 1 and p not dividing e");
  const std::uint64_t q = checked_pow(static_cast<std::uint64_t>(p), e);
  if (lambda < 1 || (q - 1) % lambda != 0) {
    throw Error(ErrorCode::BadParameters, "lambda must divide q - 1");
  }
  const std::uint64_t n = (checked_pow(q, p) - 1) / lambda;
  auto code = build_code(q, n, static_cast<std::uint64_t>(p) + 1, 1, cap);
  if (code->m != p || code->beta_exponent != lambda) {
    throw Error(ErrorCode::Internal, "unexpected ambient field for the non-primitive family");
  }
  const FieldPtr& field = code->field;

  // Q(x) = x^p + x^(p-1) + ... + x - 1
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(p) + 1, 1);
  coeffs[0] = -1;
  const Polynomial Q = Polynomial::from_ints(field, coeffs);
  const auto roots = roots_in_field(Q);
  if (roots.size() != static_cast<std::size_t>(p)) {
    throw Error(ErrorCode::Internal, "Q(x) does not split in GF(q^p)");
  }
  std::vector<std::uint64_t> exps;
  for (auto y : roots) {
    const auto i = static_cast<std::uint64_t>(y.log());
    if (norm_to_subfield(*field, y, q) != field->one() || i % (q - 1) != 0) {
      throw Error(ErrorCode::NormCheckFailed, "root of Q(x) has norm != 1");
    }
    exps.push_back(i / lambda);
  }
  auto cert = certify(std::move(code), std::move(exps), field->one());
  for (auto s : cert.s_values) {
    if (s != field->minus_one()) throw Error(ErrorCode::Internal, "Q-family S_j != -1");
  }
  return cert;
}

Certificate lift_certificate(const Certificate& base, int m, std::uint64_t cap) {
  const BchCode& small = *base.code;
  const int h = small.m;
  if (small.beta_exponent != 1) {
    throw Error(ErrorCode::BadParameters, "only primitive certificates can be lifted");
  }
  if (m < h || m % h != 0) {
    throw Error(ErrorCode::NotADivisor, std::to_string(h) + " does not divide " + std::to_string(m));
  }
  const std::uint64_t n = checked_pow(small.q, m) - 1;
  auto code = build_code(small.q, n, small.delta, 1, cap);
  const FieldPtr big = code->field;
  const std::uint64_t twist = embedding_twist(*small.field, *big);
  const std::uint64_t small_order = small.field->order();
  auto map_log = [&](std::int32_t k) {
    const auto twisted = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(twist) * static_cast<std::uint64_t>(k) % small_order);
    return embed_exponent(twisted, small.q, h, m);
  };
  auto map_element = [&](Element a) {
    return a.is_zero() ? a : big->exp(static_cast<std::int64_t>(map_log(a.log())));
  };

  std::vector<std::uint64_t> exps;
  for (auto i : base.locator_exponents) exps.push_back(map_log(static_cast<std::int32_t>(i)));
  auto cert = certify(std::move(code), std::move(exps), map_element(base.anchor()));
  for (std::size_t j = 0; j < base.s_values.size(); ++j) {
    if (cert.s_values[j] != map_element(base.s_values[j])) {
      throw Error(ErrorCode::Internal, "lifting changed an S_j value");
    }
  }
  return cert;
}

}  // namespace bchcert
