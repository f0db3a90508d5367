#include "bchcert/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "bchcert/error.hpp"

namespace bchcert {

namespace {

using boost::multiprecision::cpp_int;

void check_args(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q) {
  if (q < 2 || d < 1 || d > n || k > n) {
    throw Error(ErrorCode::BadParameters, "sphere packing needs q >= 2, 1 <= d <= n, k <= n");
  }
}

std::pair<cpp_int, cpp_int> sides(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q) {
  check_args(n, k, d, q);
  cpp_int lhs = 0;
  cpp_int term = 1;  // (q-1)^i C(n,i)
  for (std::uint64_t i = 0; i <= (d - 1) / 2; ++i) {
    if (i > 0) term = term * (q - 1) * (n - i + 1) / i;
    lhs += term;
  }
  return {lhs, boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(n - k))};
}

}  // namespace

bool sphere_packing_holds(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q) {
  const auto [lhs, rhs] = sides(n, k, d, q);
  return lhs <= rhs;
}

bool sphere_packing_tight(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q) {
  const auto [lhs, rhs] = sides(n, k, d, q);
  return lhs == rhs;
}

bool sphere_packing_holds_u128(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q) {
  check_args(n, k, d, q);
  using u128 = unsigned __int128;
  auto mul = [](u128 a, u128 b) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::TooLarge, "128-bit overflow");
    return r;
  };
  u128 lhs = 0;
  u128 term = 1;
  for (std::uint64_t i = 0; i <= (d - 1) / 2; ++i) {
    if (i > 0) term = mul(mul(term, q - 1), n - i + 1) / i;
    if (__builtin_add_overflow(lhs, term, &lhs)) throw Error(ErrorCode::TooLarge, "128-bit overflow");
  }
  u128 rhs = 1;
  for (std::uint64_t i = 0; i < n - k; ++i) rhs = mul(rhs, q);
  return lhs <= rhs;
}

std::string_view to_string(Optimality o) {
  switch (o) {
    case Optimality::SpherePackingOptimal: return "sphere-packing-optimal";
    case Optimality::AlmostDistanceOptimal: return "almost-distance-optimal";
    case Optimality::NearDistanceOptimal: return "near-distance-optimal";
    case Optimality::Inconclusive: return "inconclusive";
    case Optimality::Excluded: return "excluded";
  }
  return "inconclusive";
}

OptimalityReport classify(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q) {
  check_args(n, k, d, q);
  OptimalityReport r{n, k, d, q};
  // The left side only grows with d and d' = 1 always passes, so the
  // admissible d' form a prefix [1, max_d_allowed].
  std::uint64_t lo = 1, hi = n;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (sphere_packing_holds(n, k, mid, q)) lo = mid;
    else hi = mid - 1;
  }
  r.max_d_allowed = lo;
  if (d > lo) {
    r.classification = Optimality::Excluded;
  } else {
    switch (lo - d) {
      case 0: r.classification = Optimality::SpherePackingOptimal; break;
      case 1: r.classification = Optimality::AlmostDistanceOptimal; break;
      case 2: r.classification = Optimality::NearDistanceOptimal; break;
      default: r.classification = Optimality::Inconclusive; break;
    }
  }
  r.perfect = sphere_packing_tight(n, k, d, q);
  return r;
}

}  // namespace bchcert
