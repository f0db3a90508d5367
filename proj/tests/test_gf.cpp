#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "bchcert/error.hpp"
#include "bchcert/gf.hpp"
#include "bchcert/poly.hpp"
#include "oracles.hpp"

using namespace bchcert;

namespace {

const std::pair<int, int> kSmallFields[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2},
                                            {3, 3}, {5, 1}, {5, 2}, {7, 1}, {2, 6}, {3, 4}};

}  // namespace

TEST_CASE("prime powers") {
  CHECK(prime_power(9) == std::pair{3, 2});
  CHECK(prime_power(1024) == std::pair{2, 10});
  CHECK(prime_power(3125) == std::pair{5, 5});
  CHECK_FALSE(prime_power(6).has_value());
  CHECK_FALSE(prime_power(1).has_value());
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(checked_pow(10, 30), Error);
}

TEST_CASE("construction errors") {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code_of([] { Field::build(4, 1); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { Field::build(2, 23, 1u << 22); }) == ErrorCode::FieldTooLarge);
  CHECK(code_of([] { Field::build(3, 4, 80); }) == ErrorCode::FieldTooLarge);
}

TEST_CASE("field cap from the environment") {
  ::setenv("BCH_FIELD_CAP", "100", 1);
  CHECK(field_cap() == 100);
  ::setenv("BCH_FIELD_CAP", "lots", 1);
  CHECK_THROWS_AS(field_cap(), Error);
  ::unsetenv("BCH_FIELD_CAP");
  CHECK(field_cap() == kDefaultFieldCap);
}

TEST_CASE("log/Zech arithmetic agrees with schoolbook polynomial arithmetic") {
  for (auto [p, e] : kSmallFields) {
    auto F = Field::build(p, e);
    const ref::EncodedField R(*F);
    CAPTURE(p);
    CAPTURE(e);
    for (std::uint32_t a = 0; a < F->size(); ++a) {
      CHECK(F->to_int(F->from_int(a)) == a);
      for (std::uint32_t b = 0; b < F->size(); b += (F->size() > 100 ? 7 : 1)) {
        const Element x = F->from_int(a), y = F->from_int(b);
        REQUIRE(F->to_int(F->add(x, y)) == R.add(a, b));
        REQUIRE(F->to_int(F->mul(x, y)) == R.mul(a, b));
      }
    }
  }
}

TEST_CASE("modulus is irreducible and alpha is primitive") {
  for (auto [p, e] : kSmallFields) {
    auto F = Field::build(p, e);
    auto P = Field::build(p, 1);
    std::vector<std::int64_t> m(F->modulus().begin(), F->modulus().end());
    const Polynomial mod = Polynomial::from_ints(P, m);
    CHECK(mod.degree() == e);
    CHECK(mod.leading() == P->one());
    if (e > 1) CHECK(ref::irreducible_by_trial(mod, static_cast<std::uint64_t>(p)));
    CHECK(element_order(*F, F->alpha()) == F->order());
  }
}

TEST_CASE("deterministic choices") {
  auto F = Field::build(2, 4);
  CHECK(F->modulus() == std::vector<int>{1, 1, 0, 0, 1});  // x^4 + x + 1
  CHECK(F->primitive_encoding() == 2);
  auto G = Field::build(3, 3);
  CHECK(G->modulus() == Field::build(3, 3)->modulus());
  CHECK(Field::build(5, 1)->primitive_encoding() == 2);
}

TEST_CASE("field axioms on samples") {
  auto F = Field::build(3, 4);
  for (std::int64_t i = 0; i < 80; i += 3) {
    const Element a = F->exp(i), b = F->exp(5 * i + 1), c = F->exp(7 * i + 2);
    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
    CHECK(F->add(a, F->neg(a)).is_zero());
    CHECK(F->mul(a, F->inv(a)) == F->one());
    CHECK(F->sub(F->add(a, b), b) == a);
  }
  CHECK(F->add(F->one(), F->minus_one()).is_zero());
  CHECK(F->pow(F->zero(), 0) == F->one());
}

TEST_CASE("Frobenius is additive on fields up to 3^5") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 5}, {3, 3}, {3, 5}, {5, 2}}) {
    auto F = Field::build(p, e);
    for (std::uint32_t a = 0; a < F->size(); a += 1) {
      for (std::uint32_t b = 0; b < F->size(); b += (F->size() > 100 ? 11 : 1)) {
        const Element x = F->from_int(a), y = F->from_int(b);
        REQUIRE(F->pow(F->add(x, y), p) == F->add(F->pow(x, p), F->pow(y, p)));
      }
    }
  }
}

TEST_CASE("subfields") {
  auto F = Field::build(2, 6);
  CHECK(F->has_subfield(2));
  CHECK(F->has_subfield(4));
  CHECK(F->has_subfield(8));
  CHECK_FALSE(F->has_subfield(16));
  std::size_t count = 0;
  for (std::uint32_t a = 0; a < F->size(); ++a) {
    const Element x = F->from_int(a);
    const bool in = F->in_subfield(x, 4);
    CHECK(in == (F->pow(x, 4) == x));
    count += in;
  }
  CHECK(count == 4);
  for (std::int64_t k = 0; k < 7; ++k) CHECK(F->subfield_log(F->from_subfield_log(k, 8), 8) == k);
  CHECK_THROWS_AS(F->subfield_log(F->alpha(), 4), Error);
}

TEST_CASE("roots of unity, norm and trace") {
  auto F = Field::build(3, 3);
  const Element beta = nth_root_of_unity(*F, 13);
  CHECK(element_order(*F, beta) == 13);
  CHECK_THROWS_AS(nth_root_of_unity(*F, 7), Error);
  for (std::int64_t i = 0; i < 26; ++i) {
    const Element x = F->exp(i);
    const Element norm = norm_to_subfield(*F, x, 3);
    CHECK(F->in_subfield(norm, 3));
    CHECK(norm == F->mul(x, F->mul(F->pow(x, 3), F->pow(x, 9))));
    const Element tr = trace_to_prime_field(*F, x);
    CHECK(tr == F->add(x, F->add(F->pow(x, 3), F->pow(x, 9))));
  }
}

TEST_CASE("embed_exponent") {
  CHECK(embed_exponent(1, 3, 1, 3) == 13);
  CHECK(embed_exponent(5, 2, 2, 4) == 25);
  CHECK_THROWS_AS(embed_exponent(1, 2, 3, 4), Error);
}

TEST_CASE("embedding_twist gives a field homomorphism") {
  for (auto [p, h, m] : std::vector<std::tuple<int, int, int>>{{2, 2, 4}, {3, 2, 4}, {3, 3, 6}, {2, 3, 6}, {2, 4, 8}}) {
    auto small = Field::build(p, h);
    auto big = Field::build(p, m);
    const std::uint64_t s = embedding_twist(*small, *big);
    const std::uint64_t step = big->order() / small->order();
    auto phi = [&](Element a) {
      return a.is_zero() ? a : big->exp(static_cast<std::int64_t>(s * static_cast<std::uint64_t>(a.log()) % small->order() * step));
    };
    for (std::uint32_t a = 0; a < small->size(); ++a) {
      for (std::uint32_t b = 0; b < small->size(); ++b) {
        const Element x = small->from_int(a), y = small->from_int(b);
        REQUIRE(phi(small->add(x, y)) == big->add(phi(x), phi(y)));
        REQUIRE(phi(small->mul(x, y)) == big->mul(phi(x), phi(y)));
      }
    }
  }
}
