#pragma once

// Row definitions and regeneration for the published families of BCH codes
// with d = delta. Each regenerated row carries a fresh certificate plus the
// independent checks that are cheap enough to run at that size.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bchcert/json_io.hpp"

namespace bchcert {

enum class Family { Ternary, Quaternary, SmallDelta, QtFamily, Nonprimitive };

inline constexpr Family kAllFamilies[] = {Family::Ternary, Family::Quaternary, Family::SmallDelta,
                                          Family::QtFamily, Family::Nonprimitive};

std::string_view to_string(Family f);
/// Accepts the names produced by to_string plus "qt". Throws BadParameters.
Family family_from_string(std::string_view s);

struct RowSpec {
  Family family = Family::Ternary;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::uint64_t n = 0, k = 0, d = 0;  // reference parameters
  std::optional<std::uint64_t> d_best;

  std::int64_t param(std::string_view name) const;
};

std::vector<RowSpec> table_rows(Family f);

/// Subset budget for base-case searches while regenerating tables.
inline constexpr std::uint64_t kTableSearchBudget = std::uint64_t{1} << 34;

/// Builds the certificate for one row and runs the side checks. A row whose
/// field exceeds the cap comes back as {"skipped": "cap"}; other failures
/// propagate.
Json regenerate_row(const RowSpec& row, std::uint64_t cap = field_cap());

/// Rows in table order; rows are computed in parallel.
Json regenerate_table(Family f, std::uint64_t cap = field_cap());

/// Divergent cells between a regenerated table and a stored one, as
/// "row i: key: got X, expected Y" lines. Empty when identical.
std::vector<std::string> diff_tables(const Json& got, const Json& golden);

}  // namespace bchcert
