#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bchcert/gf.hpp"

namespace bchcert {

/// Dense univariate polynomial over a Field, constant term first, trailing
/// zeros trimmed. The zero polynomial has degree -1.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field);
  Polynomial(FieldPtr field, std::vector<Element> coeffs);

  /// Polynomial with integer (prime-field) coefficients, constant first.
  static Polynomial from_ints(FieldPtr field, std::initializer_list<std::int64_t> coeffs);
  static Polynomial from_ints(FieldPtr field, const std::vector<std::int64_t>& coeffs);
  static Polynomial monomial(FieldPtr field, Element c, std::size_t degree);
  /// x - root
  static Polynomial linear(FieldPtr field, Element root);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Element{}; }
  Element leading() const { return coeffs_.empty() ? Element{} : coeffs_.back(); }

  Element operator()(Element x) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  FieldPtr field_;
  std::vector<Element> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Element c, const Polynomial& a);

/// (quotient, remainder) with deg(remainder) < deg(divisor).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);

Polynomial monic(const Polynomial& f);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial powmod(Polynomial base, std::uint64_t k, const Polynomial& mod);

Polynomial derivative(const Polynomial& f);
/// f(g(x))
Polynomial compose(const Polynomial& f, const Polynomial& g);
/// x^deg(f) * f(1/x)
Polynomial reciprocal(const Polynomial& f);

/// gcd(f, f') = 1. Throws ZeroPolynomial.
bool is_separable(const Polynomial& f);

/// Irreducibility over the subfield GF(base_size) holding f's coefficients
/// (base_size 0 means the whole coefficient field).
bool is_irreducible(const Polynomial& f, std::uint64_t base_size = 0);

/// Distinct roots of f lying in the subfield GF(subfield_size) of f's field
/// (0 means the whole field), sorted by exponent. Multiplicity is ignored.
std::vector<Element> roots_in_field(const Polynomial& f, std::uint64_t subfield_size = 0);
/// Single-threaded evaluation at every element; reference for roots_in_field.
std::vector<Element> roots_in_field_serial(const Polynomial& f, std::uint64_t subfield_size = 0);

/// Degree over GF(base_size) of the splitting field of a separable f.
int splitting_field_degree(const Polynomial& f, std::uint64_t base_size = 0);

}  // namespace bchcert
