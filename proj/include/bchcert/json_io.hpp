#pragma once

// JSON forms of codes, certificates, oracle results and bound reports.
//
// Symbols of GF(q) are written as exponents of gamma = alpha^((|F|-1)/(q-1)),
// the canonical generator of GF(q)^* inside the ambient field, with -1 for 0.
// For prime q this still depends on the ambient primitive element, which is
// fixed by the deterministic field construction.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "bchcert/bch.hpp"
#include "bchcert/bounds.hpp"
#include "bchcert/locator.hpp"
#include "bchcert/oracle.hpp"

namespace bchcert {

using Json = nlohmann::ordered_json;

std::int64_t symbol_to_json(const BchCode& code, Element a);
/// Throws ParseError for exponents outside [-1, q-2].
Element symbol_from_json(const BchCode& code, std::int64_t v);

Json field_to_json(const Field& field);
Json code_to_json(const BchCode& code);
Json certificate_to_json(const Certificate& cert);
Json oracle_to_json(const OracleResult& r);
Json lower_bound_to_json(const LowerBoundOnly& r);
Json bound_to_json(const OptimalityReport& r);

/// Rebuilds the code and re-runs the criterion from the locators and anchor,
/// then checks that the stored S_j, coefficients, support and weight agree.
/// Throws ParseError on malformed input and CriterionFailed if the locators
/// do not certify.
Certificate certificate_from_json(const Json& j, std::uint64_t cap = field_cap());

/// FNV-1a (64-bit) over the compact dump, as 16 hex digits.
std::string digest(const Json& j);

}  // namespace bchcert
