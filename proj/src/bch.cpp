#include "bchcert/bch.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bchcert/error.hpp"

namespace bchcert {

namespace {

void require_coprime(std::uint64_t n, std::uint64_t q) {
  if (n < 2 || std::gcd(n, q) != 1) {
    throw Error(ErrorCode::NotCoprime, "need n > 1 and gcd(n, q) = 1 (n = " + std::to_string(n) +
                                           ", q = " + std::to_string(q) + ")");
  }
}

}  // namespace

std::uint64_t ord(std::uint64_t n, std::uint64_t q) {
  require_coprime(n, q);
  const std::uint64_t base = q % n;
  std::uint64_t acc = base;
  std::uint64_t m = 1;
  while (acc != 1 % n) {
    acc = static_cast<std::uint64_t>(static_cast<unsigned __int128>(acc) * base % n);
    ++m;
  }
  return m;
}

CyclotomicCoset cyclotomic_coset(std::uint64_t i, std::uint64_t n, std::uint64_t q) {
  require_coprime(n, q);
  CyclotomicCoset coset;
  std::uint64_t j = i % n;
  do {
    coset.members.push_back(j);
    j = static_cast<std::uint64_t>(static_cast<unsigned __int128>(j) * q % n);
  } while (j != i % n);
  std::sort(coset.members.begin(), coset.members.end());
  coset.leader = coset.members.front();
  return coset;
}

std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint64_t n, std::uint64_t q) {
  require_coprime(n, q);
  std::vector<bool> seen(n, false);
  std::vector<CyclotomicCoset> out;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    auto c = cyclotomic_coset(i, n, q);
    for (auto j : c.members) seen[j] = true;
    out.push_back(std::move(c));
  }
  return out;
}

CodePtr build_code(std::uint64_t q, std::uint64_t n, std::uint64_t delta, std::uint64_t b,
                   std::uint64_t cap) {
  const auto pe = prime_power(q);
  if (!pe) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  require_coprime(n, q);
  if (delta < 2 || delta > n) {
    throw Error(ErrorCode::InvalidDelta, "designed distance must satisfy 2 <= delta <= n");
  }
  const auto m = static_cast<int>(ord(n, q));
  const std::uint64_t qm = checked_pow(q, m);
  if (qm > cap) {
    throw Error(ErrorCode::FieldTooLarge, "GF(" + std::to_string(q) + "^" + std::to_string(m) +
                                              ") exceeds the field cap " + std::to_string(cap));
  }

  auto code = std::make_shared<BchCode>(BchCode{
      .q = q,
      .p = pe->first,
      .e = pe->second,
      .n = n,
      .delta = delta,
      .b = b,
      .m = m,
      .dimension = 0,
      .beta_exponent = 0,
      .field = Field::build(pe->first, pe->second * m, cap),
      .defining_set = {},
      .in_defining_set = std::vector<bool>(n, false),
      .generator = Polynomial(nullptr),
  });
  code->beta_exponent = (qm - 1) / n;

  for (std::uint64_t i = 0; i + 2 <= delta; ++i) {
    const std::uint64_t start = (b + i) % n;
    if (code->in_defining_set[start]) continue;
    for (auto j : cyclotomic_coset(start, n, q).members) code->in_defining_set[j] = true;
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    if (code->in_defining_set[i]) code->defining_set.push_back(i);
  }

  const FieldPtr& field = code->field;
  Polynomial g = Polynomial::monomial(field, field->one(), 0);
  for (auto i : code->defining_set) {
    g = g * Polynomial::linear(field, code->beta_pow(static_cast<std::int64_t>(i)));
  }
  for (auto c : g.coeffs()) {
    if (!field->in_subfield(c, q)) {
      throw Error(ErrorCode::Internal, "generator coefficient outside GF(q)");
    }
  }
  code->generator = std::move(g);
  code->dimension = n - code->defining_set.size();
  return code;
}

Polynomial minimal_polynomial(const BchCode& code, std::uint64_t i) {
  Polynomial acc = Polynomial::monomial(code.field, code.field->one(), 0);
  for (auto j : cyclotomic_coset(i, code.n, code.q).members) {
    acc = acc * Polynomial::linear(code.field, code.beta_pow(static_cast<std::int64_t>(j)));
  }
  return acc;
}

std::uint64_t dimension_closed_form(std::uint64_t q, std::uint64_t n, std::uint64_t delta) {
  const std::uint64_t m = ord(n, q);
  const std::uint64_t qm = checked_pow(q, static_cast<int>(m));
  const std::uint64_t half = checked_pow(q, static_cast<int>((m + 1) / 2));
  const auto reach = static_cast<std::uint64_t>(static_cast<unsigned __int128>(n) * half / (qm - 1));
  if (!(half < n && n <= qm - 1) || delta < 2 || delta > n || delta - 1 > reach) {
    throw Error(ErrorCode::OutOfLemmaRange,
                "(q, n, delta) = (" + std::to_string(q) + ", " + std::to_string(n) + ", " +
                    std::to_string(delta) + ") is outside the closed-form range");
  }
  // ceil((delta - 1)(q - 1) / q)
  const std::uint64_t cosets = ((delta - 1) * (q - 1) + q - 1) / q;
  return n - m * cosets;
}

std::uint64_t bose_distance(const BchCode& code) {
  if (code.b != 1) throw Error(ErrorCode::NotNarrowSense, "Bose distance needs a narrow-sense code");
  std::uint64_t d = 1;
  while (d < code.n && code.in_defining_set[d]) ++d;
  return d;
}

std::uint64_t bch_bound(const BchCode& code) {
  const std::uint64_t n = code.n;
  if (code.defining_set.size() == n) return n + 1;
  std::uint64_t start = 0;
  while (code.in_defining_set[start]) ++start;
  std::uint64_t best = 0, run = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (code.in_defining_set[(start + k) % n]) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return best + 1;
}

std::size_t weight(std::span<const Element> word) {
  return static_cast<std::size_t>(
      std::count_if(word.begin(), word.end(), [](Element a) { return !a.is_zero(); }));
}

Codeword word_from_support(const BchCode& code,
                           std::span<const std::pair<std::uint64_t, Element>> support) {
  Codeword word(code.n);
  for (const auto& [pos, c] : support) {
    if (pos >= code.n) throw Error(ErrorCode::LengthMismatch, "support position outside [0, n)");
    word[pos] = code.field->add(word[pos], c);
  }
  return word;
}

bool is_codeword(const BchCode& code, std::span<const Element> word) {
  if (word.size() != code.n) {
    throw Error(ErrorCode::LengthMismatch, "word length " + std::to_string(word.size()) +
                                               " != n = " + std::to_string(code.n));
  }
  for (auto c : word) {
    if (!code.in_base_field(c)) return false;
  }
  const Field& f = *code.field;
  bool by_roots = true;
  for (auto i : code.defining_set) {
    const Element x = code.beta_pow(static_cast<std::int64_t>(i));
    Element acc{};
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    if (!acc.is_zero()) {
      by_roots = false;
      break;
    }
  }
  const Polynomial c(code.field, std::vector<Element>(word.begin(), word.end()));
  const bool by_division = (c % code.generator).is_zero();
  if (by_roots != by_division) {
    throw Error(ErrorCode::Internal, "root check and generator division disagree");
  }
  return by_roots;
}

}  // namespace bchcert
