#pragma once

// Brute-force minimum distance for small codes, independent of the
// certificate machinery. Results are deterministic under any thread count:
// ties between minimum-weight words are broken by the lexicographically
// smallest witness.

#include <cstdint>
#include <string_view>
#include <variant>

#include "bchcert/bch.hpp"

namespace bchcert {

enum class OracleMethod { FullEnumeration, SupportEnumeration };

std::string_view to_string(OracleMethod method);

struct OracleResult {
  std::uint64_t d = 0;
  Codeword witness;
  OracleMethod method = OracleMethod::FullEnumeration;
  std::uint64_t enumerated = 0;
};

/// No codeword of weight below `lower_bound` exists.
struct LowerBoundOnly {
  std::uint64_t lower_bound = 0;
  std::uint64_t enumerated = 0;
};

using SupportOracleOutcome = std::variant<OracleResult, LowerBoundOnly>;

inline constexpr std::uint64_t kMaxMessages = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultSupportBudget = std::uint64_t{1} << 26;

/// Walks all q^k - 1 nonzero codewords in a p-ary Gray order, adding one
/// scaled generator shift per step. Throws TooLarge (q^k > 2^24) or
/// DegenerateCode (k = 0).
OracleResult min_distance_full(const BchCode& code);

/// Reference: encodes every message by polynomial multiplication.
OracleResult min_distance_full_serial(const BchCode& code);

/// For w = 1..w_max, checks every support {0} + (w-1)-subset of [1, n) (cyclic
/// shifts cover the rest) for a nonzero GF(q) kernel vector of the parity
/// rows beta^(s i), s in T. Throws BudgetExceeded when the next round would
/// push the support count past `budget`.
SupportOracleOutcome min_distance_support(const BchCode& code, std::uint64_t w_max,
                                          std::uint64_t budget = kDefaultSupportBudget,
                                          bool parallel = true);

}  // namespace bchcert
