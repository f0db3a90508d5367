#include "bchcert/json_io.hpp"

#include <cstdio>

#include "bchcert/error.hpp"

namespace bchcert {

std::int64_t symbol_to_json(const BchCode& code, Element a) {
  return a.is_zero() ? -1 : code.field->subfield_log(a, code.q);
}

Element symbol_from_json(const BchCode& code, std::int64_t v) {
  if (v < -1 || v >= static_cast<std::int64_t>(code.q) - 1) {
    throw Error(ErrorCode::ParseError, "symbol exponent " + std::to_string(v) + " out of range");
  }
  return v < 0 ? Element{} : code.field->from_subfield_log(v, code.q);
}

Json field_to_json(const Field& field) {
  return Json{{"p", field.characteristic()},
              {"e", field.degree()},
              {"modulus", field.modulus()},
              {"primitive", field.primitive_encoding()}};
}

Json code_to_json(const BchCode& code) {
  Json gen = Json::array();
  for (auto c : code.generator.coeffs()) gen.push_back(symbol_to_json(code, c));
  return Json{{"q", code.q},
              {"n", code.n},
              {"delta", code.delta},
              {"b", code.b},
              {"m", code.m},
              {"k", code.dimension},
              {"defining_set_size", code.defining_set.size()},
              {"field", field_to_json(*code.field)},
              {"generator", gen}};
}

Json certificate_to_json(const Certificate& cert) {
  const BchCode& code = *cert.code;
  Json s = Json::array();
  for (auto v : cert.s_values) s.push_back(symbol_to_json(code, v));
  Json c = Json::array();
  for (auto v : cert.coefficients) c.push_back(symbol_to_json(code, v));
  Json support = Json::array();
  for (const auto& [i, v] : cert.support()) support.push_back(Json::array({i, symbol_to_json(code, v)}));
  return Json{{"code", code_to_json(code)},
              {"locator_exponents", cert.locator_exponents},
              {"s_values", s},
              {"coefficients", c},
              {"codeword_support", support},
              {"weight", cert.coefficients.size()}};
}

Json oracle_to_json(const OracleResult& r) {
  std::vector<std::uint64_t> support;
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    if (!r.witness[i].is_zero()) support.push_back(i);
  }
  return Json{{"d", r.d},
              {"witness_support", support},
              {"method", std::string(to_string(r.method))},
              {"enumerated", r.enumerated}};
}

Json lower_bound_to_json(const LowerBoundOnly& r) {
  return Json{{"lower_bound", r.lower_bound},
              {"method", "support-enumeration"},
              {"enumerated", r.enumerated}};
}

Json bound_to_json(const OptimalityReport& r) {
  return Json{{"n", r.n},
              {"k", r.k},
              {"d", r.d},
              {"q", r.q},
              {"max_d_allowed", r.max_d_allowed},
              {"class", std::string(to_string(r.classification))},
              {"perfect", r.perfect},
              {"relative_to", std::string(kBoundLabel)}};
}

Certificate certificate_from_json(const Json& j, std::uint64_t cap) {
  Certificate cert;
  try {
    const Json& cj = j.at("code");
    auto code = build_code(cj.at("q").get<std::uint64_t>(), cj.at("n").get<std::uint64_t>(),
                           cj.at("delta").get<std::uint64_t>(), cj.at("b").get<std::uint64_t>(), cap);
    const auto coeffs = j.at("coefficients").get<std::vector<std::int64_t>>();
    if (coeffs.empty()) throw Error(ErrorCode::ParseError, "certificate has no coefficients");
    const Element anchor = symbol_from_json(*code, coeffs.back());
    cert = certify(code, j.at("locator_exponents").get<std::vector<std::uint64_t>>(), anchor);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("malformed certificate JSON: ") + ex.what());
  }
  if (certificate_to_json(cert) != j) {
    throw Error(ErrorCode::ParseError, "certificate JSON disagrees with its re-derivation");
  }
  return cert;
}

std::string digest(const Json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : j.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace bchcert
