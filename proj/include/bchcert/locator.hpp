#pragma once

// Minimum-weight codeword certificates for narrow-sense BCH codes.
//
// For locators x_1..x_{r} (r = delta - 1, x_j = beta^{i_j}) together with the
// implicit locator x_delta = 1, a weight-delta codeword supported on
// {i_1, ..., i_r, 0} exists iff every
//
//   S_j = prod_{k != j} (1 - x_k) / (x_j prod_{k != j} (x_j - x_k))
//
// lies in GF(q)^*. The S_j are the row sums of the inverse of the modified
// Vandermonde matrix V = (x_j^i), and the codeword coefficients are
// c_{i_j} = -c_0 * S_j.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bchcert/bch.hpp"
#include "bchcert/gf.hpp"

namespace bchcert {

using Matrix = std::vector<std::vector<Element>>;

/// U_{k,i} for k = 0..r-1: elementary symmetric polynomials of the points
/// with x_i removed.
std::vector<Element> elementary_symmetric_excluding(const Field& field,
                                                    std::span<const Element> points,
                                                    std::size_t i);

/// Inverse of M = (x_j^(i-1)) by the closed form
/// (M^-1)_{ij} = (-1)^(r-j) U_{r-j,i} / prod_{k != i} (x_i - x_k).
/// Throws DuplicatePoint or ZeroPoint.
Matrix vandermonde_inverse(const Field& field, std::span<const Element> points);

/// Inverse of V = (x_j^i), i.e. rows of M^-1 scaled by x_i^-1.
Matrix modified_vandermonde_inverse(const Field& field, std::span<const Element> points);

/// S_1..S_r by the product formula. Throws PointIsOne, DuplicatePoint, ZeroPoint.
std::vector<Element> s_values(const Field& field, std::span<const Element> points);

struct Certificate {
  CodePtr code;
  std::vector<std::uint64_t> locator_exponents;  // i_1..i_{delta-1}; i_delta = 0
  std::vector<Element> s_values;                 // S_1..S_{delta-1}
  std::vector<Element> coefficients;             // c_{i_1}..c_{i_{delta-1}}, c_0

  Element anchor() const { return coefficients.back(); }
  /// (position, symbol) pairs sorted by position.
  std::vector<std::pair<std::uint64_t, Element>> support() const;
  Codeword word() const;
};

/// Checks the S_j criterion for the given locator exponents and, on success,
/// materializes the weight-delta codeword with c_0 = anchor (default 1).
/// Throws CriterionFailed, DuplicateLocator, NotNarrowSense, BadParameters.
Certificate certify(CodePtr code, std::vector<std::uint64_t> locator_exponents,
                    std::optional<Element> anchor = std::nullopt);

/// C(q, q^m - 1, delta, 1) for 2 <= delta <= q - 1 from the first delta - 1
/// elements of GF(q)^* \ {1}.
Certificate construct_small_delta(std::uint64_t q, int m, std::uint64_t delta,
                                  std::uint64_t cap = field_cap());

/// C(q, q^m - 1, q^t + 1, 1) with m a multiple of p*t, from the roots of
/// L(x) = x^(q^t) - x^(q^t - 1) + 1. Every S_j = 1, c_0 = -1.
Certificate construct_qt_family(std::uint64_t q, int t, int m, std::uint64_t cap = field_cap());

/// C(q, (q^p - 1)/lambda, p + 1, 1) with q = p^e, p odd, p not dividing e
/// and lambda | q - 1, from the roots of Q(x) = x^p + ... + x - 1.
/// Every S_j = -1, c_0 = 1.
Certificate construct_nonprimitive_family(int p, int e, std::uint64_t lambda,
                                          std::uint64_t cap = field_cap());

/// Re-expresses a certificate for C(q, q^h - 1, delta, 1) in C(q, q^m - 1, delta, 1)
/// for h | m.
Certificate lift_certificate(const Certificate& base, int m, std::uint64_t cap = field_cap());

enum class SearchStatus { Found, NotFound, BudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Certificate> certificate;
  /// Number of (delta-1)-subsets covered, counted in lexicographic order.
  std::uint64_t examined = 0;
};

/// Scans (delta-1)-subsets of [1, n) in lexicographic order and returns the
/// first one meeting the criterion. Only the first `budget` subsets are
/// considered. NotFound means the space was exhausted, which proves d > delta.
/// The result does not depend on the number of worker threads.
SearchResult search_certificate(CodePtr code, std::uint64_t budget);

/// Single-threaded reference scan through the generic s_values path.
SearchResult search_certificate_serial(CodePtr code, std::uint64_t budget);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace bchcert
