#pragma once

// Sphere-packing (Hamming) bound and the optimality vocabulary built on it.
// Every classification here is relative to that bound only.

#include <cstdint>
#include <string_view>

namespace bchcert {

/// sum_{i <= floor((d-1)/2)} (q-1)^i C(n,i) <= q^(n-k), exact.
bool sphere_packing_holds(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q);

/// Same inequality in 128-bit arithmetic, for cross-checking the big-integer
/// path. Throws TooLarge when a term overflows.
bool sphere_packing_holds_u128(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q);

/// Left side equals right side.
bool sphere_packing_tight(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q);

enum class Optimality { SpherePackingOptimal, AlmostDistanceOptimal, NearDistanceOptimal, Inconclusive,
                        Excluded };

std::string_view to_string(Optimality o);

inline constexpr std::string_view kBoundLabel = "with respect to the sphere packing bound";

struct OptimalityReport {
  std::uint64_t n = 0, k = 0, d = 0, q = 0;
  std::uint64_t max_d_allowed = 0;
  Optimality classification = Optimality::Inconclusive;
  bool perfect = false;  // the bound holds with equality at d
};

/// max_d_allowed is the largest d' <= n the bound admits; the class follows
/// from max_d_allowed - d (0, 1, 2, more), and is Excluded when d itself
/// breaks the bound. Throws BadParameters outside 1 <= d <= n, k <= n.
OptimalityReport classify(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q);

}  // namespace bchcert
