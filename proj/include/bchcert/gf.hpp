#pragma once

// Finite fields GF(p^e) in exponent (log) representation.
//
// Elements are stored as their discrete logarithm with respect to a fixed
// primitive element alpha; zero is a distinguished marker. Multiplication,
// division and powers are integer arithmetic on exponents, addition goes
// through a Zech-logarithm table built once at construction.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace bchcert {

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 22;

/// Field size cap: BCH_FIELD_CAP from the environment when set, else 2^22.
std::uint64_t field_cap();

bool is_prime(std::uint64_t n);

/// Returns (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(std::uint64_t q);

/// b^e, throwing FieldTooLarge on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t b, int e);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

struct FieldSpec {
  int p = 0;
  int e = 0;
  std::uint32_t size = 0;
};

class Element {
 public:
  static constexpr std::int32_t kZeroLog = -1;

  constexpr Element() = default;
  static constexpr Element from_log(std::int32_t k) { return Element(k); }

  constexpr bool is_zero() const { return log_ < 0; }
  /// Exponent k with element = alpha^k. Only meaningful when nonzero.
  constexpr std::int32_t log() const { return log_; }

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  constexpr explicit Element(std::int32_t k) : log_(k) {}
  std::int32_t log_ = kZeroLog;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Builds GF(p^e). Throws NotPrime or FieldTooLarge.
  static FieldPtr build(int p, int e, std::uint64_t cap = field_cap());

  const FieldSpec& spec() const { return spec_; }
  int characteristic() const { return spec_.p; }
  int degree() const { return spec_.e; }
  std::uint32_t size() const { return spec_.size; }
  /// Multiplicative group order, size - 1.
  std::uint32_t order() const { return spec_.size - 1; }

  /// Monic irreducible modulus over GF(p), constant term first.
  const std::vector<int>& modulus() const { return modulus_; }
  /// Polynomial-basis encoding of the primitive element alpha.
  std::uint32_t primitive_encoding() const { return exp_[1 % order()]; }

  Element zero() const { return Element{}; }
  Element one() const { return Element::from_log(0); }
  Element alpha() const { return exp(1); }
  Element minus_one() const { return Element::from_log(minus_one_log_); }

  /// alpha^k for any integer k (reduced mod size-1).
  Element exp(std::int64_t k) const {
    const std::int64_t ord = order();
    std::int64_t r = k % ord;
    if (r < 0) r += ord;
    return Element::from_log(static_cast<std::int32_t>(r));
  }

  /// Element with the given polynomial-basis encoding (base-p digits).
  Element from_int(std::uint32_t encoding) const;
  std::uint32_t to_int(Element a) const;
  /// The prime-field element c mod p.
  Element prime(std::int64_t c) const;

  Element add(Element a, Element b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::int64_t k = static_cast<std::int64_t>(b.log()) - a.log();
    if (k < 0) k += order();
    const std::int32_t z = zech_[static_cast<std::size_t>(k)];
    if (z < 0) return Element{};
    return exp(static_cast<std::int64_t>(a.log()) + z);
  }
  Element neg(Element a) const {
    if (a.is_zero()) return a;
    return exp(static_cast<std::int64_t>(a.log()) + minus_one_log_);
  }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const {
    if (a.is_zero() || b.is_zero()) return Element{};
    return exp(static_cast<std::int64_t>(a.log()) + b.log());
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::int64_t k) const;
  /// k * a where k is an integer (repeated addition, i.e. (k mod p) * a).
  Element scale(Element a, std::int64_t k) const { return mul(prime(k), a); }

  /// Whether GF(subfield_size) is a subfield of this field.
  bool has_subfield(std::uint64_t subfield_size) const;
  /// Membership in the subfield GF(subfield_size) (the power subgroup plus 0).
  bool in_subfield(Element a, std::uint64_t subfield_size) const;
  /// Position of a nonzero subfield element relative to the subfield's own
  /// generator alpha^((size-1)/(s-1)). Throws NotASubfield for elements outside.
  std::int64_t subfield_log(Element a, std::uint64_t subfield_size) const;
  Element from_subfield_log(std::int64_t k, std::uint64_t subfield_size) const;

 private:
  Field() = default;

  FieldSpec spec_;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> exp_;  // log -> encoding
  std::vector<std::int32_t> log_;   // encoding -> log, -1 for 0
  std::vector<std::int32_t> zech_;  // k -> log(1 + alpha^k), -1 when zero
  std::int32_t minus_one_log_ = 0;
};

/// beta = alpha^((|F|-1)/n), a primitive n-th root of unity.
Element nth_root_of_unity(const Field& field, std::uint64_t n);

/// Multiplicative order of a nonzero element.
std::uint64_t element_order(const Field& field, Element a);

/// N(x) = x^((|F|-1)/(s-1)) onto the subfield GF(s).
Element norm_to_subfield(const Field& field, Element x, std::uint64_t subfield_size);

/// Absolute trace x + x^p + ... + x^(p^(e-1)).
Element trace_to_prime_field(const Field& field, Element x);

/// Maps an exponent relative to a primitive element of GF(q^h) to the
/// exponent of the same-order element relative to a primitive element of
/// GF(q^m): i * (q^m - 1) / (q^h - 1).
std::uint64_t embed_exponent(std::uint64_t i, std::uint64_t q, int h, int m);

/// Independently built fields need not have compatible primitive elements.
/// Returns s such that alpha_small^i -> alpha_big^(s * i * (|big|-1)/(|small|-1))
/// is a field embedding of `small` into `big`.
std::uint64_t embedding_twist(const Field& small, const Field& big);

}  // namespace bchcert
