#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bchcert/bounds.hpp"
#include "bchcert/error.hpp"

using namespace bchcert;

TEST_CASE("sphere packing examples") {
  CHECK(sphere_packing_holds(15, 11, 3, 2));
  CHECK(sphere_packing_tight(15, 11, 3, 2));
  CHECK_FALSE(sphere_packing_holds(26, 17, 7, 3));
  CHECK_FALSE(sphere_packing_holds(15, 8, 9, 4));
  CHECK(sphere_packing_tight(23, 12, 7, 2));  // binary Golay
  CHECK(sphere_packing_tight(11, 6, 5, 3));   // ternary Golay
  CHECK_THROWS_AS(sphere_packing_holds(10, 5, 0, 2), Error);
  CHECK_THROWS_AS(sphere_packing_holds(10, 11, 3, 2), Error);
}

TEST_CASE("classification") {
  CHECK(classify(26, 17, 5, 3).classification == Optimality::AlmostDistanceOptimal);
  CHECK(classify(15, 8, 6, 4).classification == Optimality::NearDistanceOptimal);
  const auto h = classify(15, 11, 3, 2);
  CHECK(h.max_d_allowed == 4);
  CHECK(h.perfect);
  CHECK(h.classification == Optimality::AlmostDistanceOptimal);
  CHECK(classify(23, 12, 8, 2).classification == Optimality::SpherePackingOptimal);
  const auto ex = classify(15, 9, 7, 4);
  CHECK(ex.classification == Optimality::Excluded);
  CHECK(ex.max_d_allowed < 7);
  CHECK(classify(3124, 3104, 6, 5).max_d_allowed >= 6);
}

TEST_CASE("max_d_allowed is the end of the admissible prefix") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (std::uint64_t n = 2; n <= 30; ++n) {
      for (std::uint64_t k = 0; k <= n; k += 3) {
        const auto r = classify(n, k, 1, q);
        for (std::uint64_t d = 1; d <= n; ++d) {
          REQUIRE(sphere_packing_holds(n, k, d, q) == (d <= r.max_d_allowed));
        }
      }
    }
  }
}

TEST_CASE("big-integer path agrees with 128-bit arithmetic") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
    for (std::uint64_t n = 1; n <= 36; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        for (std::uint64_t d = 1; d <= n; ++d) {
          bool small;
          try {
            small = sphere_packing_holds_u128(n, k, d, q);
          } catch (const Error&) {
            continue;
          }
          REQUIRE(small == sphere_packing_holds(n, k, d, q));
        }
      }
    }
  }
  CHECK_THROWS_AS(sphere_packing_holds_u128(728, 600, 7, 3), Error);  // 3^128 > 2^128
}

TEST_CASE("quadratic reductions agree with the full evaluation") {
  for (int m : {3, 4, 6}) {
    std::int64_t n = 1;
    for (int i = 0; i < m; ++i) n *= 3;
    n -= 1;
    const bool quadratic = n * n - 15 * n - 1 <= 0;
    CHECK(quadratic == sphere_packing_holds(n, n - 3 * m, 7, 3));
    CHECK_FALSE(quadratic);
  }
  for (int m : {2, 3, 4}) {
    std::int64_t n = 1;
    for (int i = 0; i < m; ++i) n *= 4;
    n -= 1;
    const bool quadratic = 7 * n * n - 24 * n + 9 <= 0;
    CHECK(quadratic == sphere_packing_holds(n, n - 3 * m, 7, 4));
    CHECK_FALSE(quadratic);
  }
}
