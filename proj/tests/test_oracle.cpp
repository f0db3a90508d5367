#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include "bchcert/error.hpp"
#include "bchcert/locator.hpp"
#include "bchcert/oracle.hpp"

using namespace bchcert;

namespace {

void check_witness(const BchCode& code, const OracleResult& r) {
  CHECK(weight(r.witness) == r.d);
  CHECK(is_codeword(code, r.witness));
}

}  // namespace

TEST_CASE("full enumeration on reference codes") {
  auto a = build_code(3, 13, 4);
  const auto ra = min_distance_full(*a);
  CHECK(ra.d == 4);
  CHECK(ra.enumerated == 2186);
  check_witness(*a, ra);
  auto b = build_code(2, 15, 5);
  CHECK(min_distance_full(*b).d == 5);
  CHECK_THROWS_AS(min_distance_full(*build_code(3, 80, 5)), Error);
}

TEST_CASE("degenerate code") {
  try {
    min_distance_full(*build_code(2, 7, 7, 0));
    FAIL("expected DegenerateCode");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateCode);
  }
}

TEST_CASE("Gray-code enumeration equals the encode-every-message reference") {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {2, 15}, {2, 21}, {3, 8}, {3, 13}, {4, 15}, {4, 5}, {9, 10}, {8, 7}, {5, 6}}) {
    for (std::uint64_t delta = 2; delta < n; ++delta) {
      auto code = build_code(q, n, delta);
      if (code->dimension == 0) continue;
      std::uint64_t words = 1;
      for (std::uint64_t i = 0; i < code->dimension && words <= (1u << 14); ++i) words *= q;
      if (words > (1u << 14)) continue;
      const auto fast = min_distance_full(*code);
      const auto slow = min_distance_full_serial(*code);
      CAPTURE(q);
      CAPTURE(n);
      CAPTURE(delta);
      REQUIRE(fast.d == slow.d);
      REQUIRE(fast.witness == slow.witness);
      REQUIRE(fast.enumerated == slow.enumerated);
      CHECK(fast.d >= bch_bound(*code));
      check_witness(*code, fast);
    }
  }
}

TEST_CASE("support enumeration agrees with full enumeration") {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {2, 15}, {2, 17}, {3, 13}, {3, 8}, {4, 15}, {2, 21}}) {
    for (std::uint64_t delta = 2; delta < n; ++delta) {
      auto code = build_code(q, n, delta);
      if (code->dimension == 0) continue;
      std::uint64_t words = 1;
      for (std::uint64_t i = 0; i < code->dimension && words <= (1u << 16); ++i) words *= q;
      if (words > (1u << 16)) continue;
      const auto full = min_distance_full(*code);
      std::uint64_t supports = 0;
      for (std::uint64_t w = 1; w <= full.d; ++w) supports += binomial(n - 1, w - 1);
      if (supports > (1u << 15)) continue;
      const auto out = min_distance_support(*code, full.d, 1u << 24);
      const auto serial = min_distance_support(*code, full.d, 1u << 24, false);
      CAPTURE(q);
      CAPTURE(n);
      CAPTURE(delta);
      REQUIRE(std::holds_alternative<OracleResult>(out));
      const auto& r = std::get<OracleResult>(out);
      REQUIRE(r.d == full.d);
      CHECK(r.witness == std::get<OracleResult>(serial).witness);
      CHECK(r.witness[0] == code->field->one());
      check_witness(*code, r);
    }
  }
}

TEST_CASE("support oracle on the reference rows") {
  auto a = build_code(3, 26, 5);
  auto ra = min_distance_support(*a, 5);
  REQUIRE(std::holds_alternative<OracleResult>(ra));
  CHECK(std::get<OracleResult>(ra).d == 5);
  auto b = build_code(4, 15, 6);
  auto rb = min_distance_support(*b, 6);
  REQUIRE(std::holds_alternative<OracleResult>(rb));
  CHECK(std::get<OracleResult>(rb).d == 6);
}

TEST_CASE("lower bounds and budgets") {
  auto code = build_code(3, 26, 5);
  auto early = min_distance_support(*code, 3);
  REQUIRE(std::holds_alternative<LowerBoundOnly>(early));
  CHECK(std::get<LowerBoundOnly>(early).lower_bound == 5);
  CHECK(std::get<LowerBoundOnly>(early).enumerated == 0);
  auto c13 = build_code(3, 13, 3);
  auto lb = min_distance_support(*c13, 3);
  REQUIRE(std::holds_alternative<LowerBoundOnly>(lb));
  CHECK(std::get<LowerBoundOnly>(lb).lower_bound == 4);
  try {
    min_distance_support(*code, 5, 100);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("oracle output does not depend on the thread count") {
  auto code = build_code(4, 15, 5);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = min_distance_full(*code);
  omp_set_num_threads(3);
  const auto three = min_distance_full(*code);
  omp_set_num_threads(saved);
  CHECK(one.witness == three.witness);
}

TEST_CASE("certificates agree with the oracle") {
  for (const auto& cert : {construct_qt_family(2, 1, 4), construct_qt_family(2, 2, 4),
                           construct_qt_family(4, 1, 2), construct_nonprimitive_family(3, 1, 2),
                           construct_small_delta(4, 2, 3), construct_small_delta(3, 2, 2)}) {
    CHECK(min_distance_full(*cert.code).d == cert.coefficients.size());
  }
}
