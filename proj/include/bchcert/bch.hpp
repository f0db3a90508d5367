#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "bchcert/gf.hpp"
#include "bchcert/poly.hpp"

namespace bchcert {

struct CyclotomicCoset {
  std::uint64_t leader = 0;
  std::vector<std::uint64_t> members;  // sorted
};

/// Multiplicative order of q modulo n. Throws NotCoprime.
std::uint64_t ord(std::uint64_t n, std::uint64_t q);

/// The q-cyclotomic coset of i modulo n. Throws NotCoprime.
CyclotomicCoset cyclotomic_coset(std::uint64_t i, std::uint64_t n, std::uint64_t q);

/// All q-cyclotomic cosets modulo n, ordered by leader.
std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint64_t n, std::uint64_t q);

/// Narrow-sense (b = 1) or general BCH code C(q, n, delta, b) together with
/// the data derived from it. Roots live in the ambient field GF(q^m) with
/// beta = alpha^beta_exponent.
struct BchCode {
  std::uint64_t q = 0;
  int p = 0;
  int e = 0;
  std::uint64_t n = 0;
  std::uint64_t delta = 0;
  std::uint64_t b = 1;
  int m = 0;
  std::uint64_t dimension = 0;
  std::uint64_t beta_exponent = 0;
  FieldPtr field;
  std::vector<std::uint64_t> defining_set;  // sorted
  std::vector<bool> in_defining_set;        // size n
  Polynomial generator;

  Element beta() const { return field->exp(static_cast<std::int64_t>(beta_exponent)); }
  /// beta^i for any integer i.
  Element beta_pow(std::int64_t i) const {
    const std::int64_t r = ((i % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n)) %
                            static_cast<std::int64_t>(n);
    return field->exp(r * static_cast<std::int64_t>(beta_exponent));
  }
  bool in_base_field(Element a) const { return field->in_subfield(a, q); }
};

using CodePtr = std::shared_ptr<const BchCode>;

/// Builds C(q, n, delta, b). Throws NotPrimePower, NotCoprime, InvalidDelta,
/// FieldTooLarge.
CodePtr build_code(std::uint64_t q, std::uint64_t n, std::uint64_t delta, std::uint64_t b = 1,
                   std::uint64_t cap = field_cap());

/// M_i(x) = prod_{j in C_i} (x - beta^j), over the ambient field.
Polynomial minimal_polynomial(const BchCode& code, std::uint64_t i);

/// n - m * ceil((delta - 1)(1 - 1/q)), valid while every i in [1, delta-1]
/// is small enough that its coset is full-size (q^ceil(m/2) < n and
/// delta - 1 <= n q^ceil(m/2) / (q^m - 1)). Throws OutOfLemmaRange.
std::uint64_t dimension_closed_form(std::uint64_t q, std::uint64_t n, std::uint64_t delta);

/// Largest delta' with {1, ..., delta'-1} in T. Throws NotNarrowSense.
std::uint64_t bose_distance(const BchCode& code);

/// Longest cyclic run of consecutive residues in T, plus one.
std::uint64_t bch_bound(const BchCode& code);

using Codeword = std::vector<Element>;

std::size_t weight(std::span<const Element> word);

/// Dense word of length n from (position, symbol) pairs.
Codeword word_from_support(const BchCode& code,
                           std::span<const std::pair<std::uint64_t, Element>> support);

/// c(beta^i) = 0 for all i in T, cross-checked against g | c. Throws
/// LengthMismatch.
bool is_codeword(const BchCode& code, std::span<const Element> word);

}  // namespace bchcert
