#include "bchcert/tables.hpp"

#include <exception>
#include <string>

#include "bchcert/bch.hpp"
#include "bchcert/bounds.hpp"
#include "bchcert/error.hpp"
#include "bchcert/locator.hpp"
#include "bchcert/oracle.hpp"

namespace bchcert {

namespace {

constexpr std::uint64_t kOracleFullWords = std::uint64_t{1} << 16;
constexpr std::uint64_t kOracleSupports = std::uint64_t{1} << 19;

RowSpec row(Family f, std::vector<std::pair<std::string, std::int64_t>> params, std::uint64_t n,
            std::uint64_t k, std::uint64_t d, std::optional<std::uint64_t> d_best) {
  return RowSpec{f, std::move(params), n, k, d, d_best};
}

constexpr std::optional<std::uint64_t> none = std::nullopt;

Certificate searched(std::uint64_t q, int h, std::uint64_t delta, std::uint64_t cap) {
  auto code = build_code(q, checked_pow(q, h) - 1, delta, 1, cap);
  auto result = search_certificate(code, kTableSearchBudget);
  if (result.status != SearchStatus::Found) {
    throw Error(ErrorCode::CriterionFailed, "no base certificate for C(" + std::to_string(q) + ", " +
                                                std::to_string(code->n) + ", " +
                                                std::to_string(delta) + ", 1)");
  }
  return *std::move(result.certificate);
}

Certificate build_certificate(const RowSpec& r, std::uint64_t cap) {
  switch (r.family) {
    case Family::Ternary:
    case Family::Quaternary: {
      const std::uint64_t q = r.family == Family::Ternary ? 3 : 4;
      const auto delta = static_cast<std::uint64_t>(r.param("delta"));
      const auto m = static_cast<int>(r.param("m"));
      const auto h = static_cast<int>(r.param("base_m"));
      auto base = searched(q, h, delta, cap);
      return m == h ? base : lift_certificate(base, m, cap);
    }
    case Family::SmallDelta:
      return construct_small_delta(static_cast<std::uint64_t>(r.param("q")),
                                   static_cast<int>(r.param("m")),
                                   static_cast<std::uint64_t>(r.param("delta")), cap);
    case Family::QtFamily:
      return construct_qt_family(static_cast<std::uint64_t>(r.param("q")),
                                 static_cast<int>(r.param("t")), static_cast<int>(r.param("m")),
                                 cap);
    case Family::Nonprimitive:
      return construct_nonprimitive_family(static_cast<int>(r.param("p")),
                                           static_cast<int>(r.param("e")),
                                           static_cast<std::uint64_t>(r.param("lambda")), cap);
  }
  throw Error(ErrorCode::Internal, "unknown family");
}

Json oracle_check(const BchCode& code) {
  std::uint64_t words = 1;
  for (std::uint64_t i = 0; i < code.dimension && words <= kOracleFullWords; ++i) words *= code.q;
  if (words <= kOracleFullWords) return oracle_to_json(min_distance_full(code));
  if (binomial(code.n - 1, code.delta - 1) <= kOracleSupports) {
    auto out = min_distance_support(code, code.delta);
    if (auto* r = std::get_if<OracleResult>(&out)) return oracle_to_json(*r);
    return lower_bound_to_json(std::get<LowerBoundOnly>(out));
  }
  return nullptr;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Ternary: return "ternary";
    case Family::Quaternary: return "quaternary";
    case Family::SmallDelta: return "small-delta";
    case Family::QtFamily: return "qt-family";
    case Family::Nonprimitive: return "nonprimitive";
  }
  return "?";
}

Family family_from_string(std::string_view s) {
  for (auto f : kAllFamilies) {
    if (s == to_string(f)) return f;
  }
  if (s == "qt") return Family::QtFamily;
  throw Error(ErrorCode::BadParameters, "unknown table family '" + std::string(s) + "'");
}

std::int64_t RowSpec::param(std::string_view name) const {
  for (const auto& [k, v] : params) {
    if (k == name) return v;
  }
  throw Error(ErrorCode::Internal, "row has no parameter " + std::string(name));
}

std::vector<RowSpec> table_rows(Family f) {
  using F = Family;
  switch (f) {
    case F::Ternary:
      return {
          row(f, {{"delta", 5}, {"m", 3}, {"base_m", 3}}, 26, 17, 5, 6),
          row(f, {{"delta", 5}, {"m", 4}, {"base_m", 2}}, 80, 68, 5, 6),
          row(f, {{"delta", 5}, {"m", 6}, {"base_m", 3}}, 728, 710, 5, none),
          row(f, {{"delta", 7}, {"m", 3}, {"base_m", 3}}, 26, 14, 7, 7),
          row(f, {{"delta", 7}, {"m", 4}, {"base_m", 4}}, 80, 64, 7, 8),
          row(f, {{"delta", 7}, {"m", 6}, {"base_m", 3}}, 728, 704, 7, none),
          row(f, {{"delta", 8}, {"m", 3}, {"base_m", 3}}, 26, 11, 8, 9),
          row(f, {{"delta", 8}, {"m", 6}, {"base_m", 3}}, 728, 698, 8, none),
      };
    case F::Quaternary:
      return {
          row(f, {{"delta", 5}, {"m", 2}, {"base_m", 2}}, 15, 9, 5, 5),
          row(f, {{"delta", 5}, {"m", 3}, {"base_m", 3}}, 63, 54, 5, 5),
          row(f, {{"delta", 5}, {"m", 4}, {"base_m", 2}}, 255, 243, 5, 5),
          row(f, {{"delta", 6}, {"m", 2}, {"base_m", 2}}, 15, 8, 6, 6),
          row(f, {{"delta", 6}, {"m", 3}, {"base_m", 3}}, 63, 51, 6, 6),
          row(f, {{"delta", 6}, {"m", 4}, {"base_m", 2}}, 255, 239, 6, 6),
          row(f, {{"delta", 7}, {"m", 2}, {"base_m", 2}}, 15, 6, 7, 8),
          row(f, {{"delta", 7}, {"m", 3}, {"base_m", 3}}, 63, 48, 7, 8),
          row(f, {{"delta", 7}, {"m", 4}, {"base_m", 2}}, 255, 235, 7, 8),
      };
    case F::SmallDelta:
      return {
          row(f, {{"q", 3}, {"m", 2}, {"delta", 2}}, 8, 6, 2, 2),
          row(f, {{"q", 3}, {"m", 3}, {"delta", 2}}, 26, 23, 2, 2),
          row(f, {{"q", 4}, {"m", 2}, {"delta", 3}}, 15, 11, 3, 4),
          row(f, {{"q", 4}, {"m", 3}, {"delta", 3}}, 63, 57, 3, 4),
      };
    case F::QtFamily:
      return {
          row(f, {{"q", 2}, {"t", 1}, {"m", 4}}, 15, 11, 3, 3),
          row(f, {{"q", 2}, {"t", 1}, {"m", 6}}, 63, 57, 3, 3),
          row(f, {{"q", 2}, {"t", 1}, {"m", 8}}, 255, 247, 3, 3),
          row(f, {{"q", 2}, {"t", 2}, {"m", 4}}, 15, 7, 5, 5),
          row(f, {{"q", 2}, {"t", 2}, {"m", 8}}, 255, 239, 5, 5),
          row(f, {{"q", 2}, {"t", 3}, {"m", 6}}, 63, 39, 9, 9),
          row(f, {{"q", 2}, {"t", 4}, {"m", 8}}, 255, 191, 17, 17),
          row(f, {{"q", 3}, {"t", 1}, {"m", 3}}, 26, 20, 4, 4),
          row(f, {{"q", 3}, {"t", 1}, {"m", 6}}, 728, 716, 4, none),
          row(f, {{"q", 3}, {"t", 2}, {"m", 6}}, 728, 692, 10, none),
          row(f, {{"q", 4}, {"t", 1}, {"m", 2}}, 15, 9, 5, 5),
          row(f, {{"q", 4}, {"t", 1}, {"m", 4}}, 255, 243, 5, 5),
          row(f, {{"q", 4}, {"t", 2}, {"m", 4}}, 255, 207, 17, 17),
          row(f, {{"q", 5}, {"t", 1}, {"m", 5}}, 3124, 3104, 6, none),
      };
    case F::Nonprimitive:
      return {
          row(f, {{"p", 3}, {"e", 1}, {"lambda", 2}}, 13, 7, 4, 5),
          row(f, {{"p", 5}, {"e", 1}, {"lambda", 4}}, 781, 761, 6, none),
          row(f, {{"p", 5}, {"e", 1}, {"lambda", 2}}, 1562, 1542, 6, none),
          row(f, {{"p", 3}, {"e", 2}, {"lambda", 8}}, 91, 82, 4, 5),
          row(f, {{"p", 3}, {"e", 2}, {"lambda", 4}}, 182, 173, 4, none),
          row(f, {{"p", 3}, {"e", 2}, {"lambda", 2}}, 364, 355, 4, none),
      };
  }
  return {};
}

Json regenerate_row(const RowSpec& r, std::uint64_t cap) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json out{{"family", std::string(to_string(r.family))}, {"params", params}};

  std::optional<Certificate> cert;
  try {
    cert = build_certificate(r, cap);
  } catch (const Error& ex) {
    if (ex.code() != ErrorCode::FieldTooLarge) throw;
    out["skipped"] = "cap";
    return out;
  }
  const BchCode& code = *cert->code;
  const std::uint64_t d = cert->coefficients.size();
  out["n"] = code.n;
  out["k"] = code.dimension;
  out["d"] = d;
  out["d_best"] = r.d_best ? Json(*r.d_best) : Json(nullptr);
  out["matches_reference"] = code.n == r.n && code.dimension == r.k && d == r.d;

  Json checks = Json::object();
  try {
    checks["dimension_closed_form"] = dimension_closed_form(code.q, code.n, code.delta);
  } catch (const Error&) {
    checks["dimension_closed_form"] = nullptr;
  }
  checks["bose_distance"] = bose_distance(code);
  checks["bch_bound"] = bch_bound(code);
  checks["oracle"] = oracle_check(code);
  checks["sphere_packing"] = std::string(to_string(classify(code.n, code.dimension, d, code.q).classification));
  out["checks"] = checks;

  const Json cj = certificate_to_json(*cert);
  out["certificate_digest"] = digest(cj);
  out["certificate"] = cj;
  return out;
}

Json regenerate_table(Family f, std::uint64_t cap) {
  const auto rows = table_rows(f);
  std::vector<Json> out(rows.size());
  std::vector<std::exception_ptr> errors(rows.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      out[i] = regenerate_row(rows[i], cap);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Json arr = Json::array();
  for (auto& j : out) arr.push_back(std::move(j));
  return arr;
}

std::vector<std::string> diff_tables(const Json& got, const Json& golden) {
  std::vector<std::string> out;
  if (got.size() != golden.size()) {
    out.push_back("row count: got " + std::to_string(got.size()) + ", expected " +
                  std::to_string(golden.size()));
  }
  const std::size_t rows = std::min(got.size(), golden.size());
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& a = got[i];
    const Json& b = golden[i];
    for (const auto& [key, value] : b.items()) {
      if (!a.contains(key)) {
        out.push_back("row " + std::to_string(i) + ": " + key + ": missing");
      } else if (a.at(key) != value) {
        out.push_back("row " + std::to_string(i) + ": " + key + ": got " + a.at(key).dump() +
                      ", expected " + value.dump());
      }
    }
    for (const auto& [key, value] : a.items()) {
      if (!b.contains(key)) out.push_back("row " + std::to_string(i) + ": " + key + ": unexpected");
    }
  }
  return out;
}

}  // namespace bchcert
