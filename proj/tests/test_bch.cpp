#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bchcert/bch.hpp"
#include "bchcert/error.hpp"
#include "oracles.hpp"

using namespace bchcert;

TEST_CASE("ord and cyclotomic cosets") {
  CHECK(ord(26, 3) == 3);
  CHECK(ord(13, 3) == 3);
  CHECK(ord(91, 9) == 3);
  CHECK_THROWS_AS(ord(12, 3), Error);
  CHECK(cyclotomic_coset(1, 15, 2).members == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(cyclotomic_coset(5, 15, 2).members == std::vector<std::uint64_t>{5, 10});
  std::size_t total = 0;
  for (const auto& c : cyclotomic_cosets(26, 3)) total += c.members.size();
  CHECK(total == 26);
}

TEST_CASE("defining set and dimension against the naive construction") {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {2, 15}, {2, 31}, {2, 21}, {3, 8}, {3, 13}, {3, 26}, {4, 15}, {4, 21}, {5, 24}, {9, 91}}) {
    for (std::uint64_t delta = 2; delta <= std::min<std::uint64_t>(n, 12); ++delta) {
      for (std::uint64_t b : {std::uint64_t{1}, std::uint64_t{0}, std::uint64_t{3}}) {
        auto code = build_code(q, n, delta, b);
        const auto naive = ref::defining_set_naive(q, n, delta, b);
        CHECK(std::vector<std::uint64_t>(naive.begin(), naive.end()) == code->defining_set);
        CHECK(code->dimension == n - naive.size());
        CHECK(code->generator.degree() == static_cast<int>(naive.size()));
        for (auto c : code->generator.coeffs()) CHECK(code->in_base_field(c));
      }
    }
  }
}

TEST_CASE("reference codes") {
  auto c = build_code(2, 15, 5);
  CHECK(c->dimension == 7);
  CHECK(c->m == 4);
  CHECK(build_code(3, 26, 5)->dimension == 17);
  CHECK(build_code(3, 13, 4)->dimension == 7);
  CHECK(build_code(4, 15, 6)->dimension == 8);
  CHECK(build_code(9, 91, 4)->dimension == 82);
  auto rep = build_code(3, 26, 26);
  CHECK(rep->dimension == 1);
}

TEST_CASE("build_code errors") {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code_of([] { build_code(6, 5, 3); }) == ErrorCode::NotPrimePower);
  CHECK(code_of([] { build_code(3, 12, 3); }) == ErrorCode::NotCoprime);
  CHECK(code_of([] { build_code(3, 26, 1); }) == ErrorCode::InvalidDelta);
  CHECK(code_of([] { build_code(3, 26, 27); }) == ErrorCode::InvalidDelta);
  CHECK(code_of([] { build_code(2, 1023, 5, 1, 1000); }) == ErrorCode::FieldTooLarge);
}

TEST_CASE("closed-form dimension matches the exact dimension wherever it applies") {
  int applied = 0;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int m = 2; m <= 6; ++m) {
      const std::uint64_t n = checked_pow(q, m) - 1;
      if (n > 4096) continue;
      for (std::uint64_t delta = 2; delta <= std::min<std::uint64_t>(n, 60); ++delta) {
        std::uint64_t closed;
        try {
          closed = dimension_closed_form(q, n, delta);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::OutOfLemmaRange);
          continue;
        }
        ++applied;
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(delta);
        REQUIRE(closed == build_code(q, n, delta)->dimension);
      }
    }
  }
  CHECK(applied > 200);
  CHECK(dimension_closed_form(2, 15, 5) == 7);
  CHECK(dimension_closed_form(2, 255, 17) == 191);
  CHECK(dimension_closed_form(4, 255, 17) == 207);
  CHECK_THROWS_AS(dimension_closed_form(3, 26, 26), Error);
}

TEST_CASE("Bose distance and BCH bound") {
  auto c = build_code(2, 15, 4);
  CHECK(bose_distance(*c) == 5);
  CHECK(bch_bound(*c) == 5);
  CHECK(bose_distance(*build_code(3, 26, 5)) == 5);
  CHECK_THROWS_AS(bose_distance(*build_code(2, 15, 3, 0)), Error);
  // b = 0 widens the run of consecutive roots
  CHECK(bch_bound(*build_code(2, 15, 3, 0)) >= 3);
}

TEST_CASE("Bose distance formula for delta = q^t + 1 with pt | m") {
  for (auto [q, t, m] : std::vector<std::tuple<std::uint64_t, int, int>>{
           {2, 1, 2}, {2, 1, 4}, {2, 1, 6}, {2, 1, 8}, {2, 2, 4}, {2, 2, 8}, {2, 3, 6}, {2, 4, 8},
           {3, 1, 3}, {3, 1, 6}, {3, 2, 6}, {4, 1, 2}, {4, 1, 4}, {4, 2, 4}, {5, 1, 5}}) {
    const std::uint64_t n = checked_pow(q, m) - 1;
    const std::uint64_t delta = checked_pow(q, t) + 1;
    const std::uint64_t expected = (checked_pow(q, m) - 2) / (checked_pow(q, m - t) - 1) + 1;
    CAPTURE(q);
    CAPTURE(t);
    CAPTURE(m);
    CHECK(bose_distance(*build_code(q, n, delta)) == expected);
  }
}

TEST_CASE("is_codeword") {
  auto c = build_code(2, 15, 5);
  const auto& F = c->field;
  Codeword g(c->n);
  for (std::size_t i = 0; i < c->generator.coeffs().size(); ++i) g[i] = c->generator.coeffs()[i];
  CHECK(is_codeword(*c, g));
  // cyclic shift
  Codeword s(c->n);
  for (std::size_t i = 0; i < c->n; ++i) s[(i + 4) % c->n] = g[i];
  CHECK(is_codeword(*c, s));
  s[0] = F->add(s[0], F->one());
  CHECK_FALSE(is_codeword(*c, s));
  CHECK_THROWS_AS(is_codeword(*c, Codeword(3)), Error);
  // symbols outside GF(q) are rejected
  Codeword bad(c->n);
  bad[0] = F->alpha();
  CHECK_FALSE(is_codeword(*c, bad));
  CHECK(weight(g) == 5);
}
