// bchcert: construct BCH codes, emit d = delta certificates, run the
// brute-force oracles and the sphere-packing classification.
//
// Exit codes: 0 success, 2 criterion/validation failure, 3 resource cap,
// 4 bad arguments. Errors go to stderr as a JSON object.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bchcert/bch.hpp"
#include "bchcert/bounds.hpp"
#include "bchcert/error.hpp"
#include "bchcert/json_io.hpp"
#include "bchcert/locator.hpp"
#include "bchcert/oracle.hpp"
#include "bchcert/tables.hpp"

using namespace bchcert;

namespace {

enum Exit { kOk = 0, kValidation = 2, kResource = 3, kBadArgs = 4 };

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CriterionFailed:
    case ErrorCode::NormCheckFailed:
    case ErrorCode::BoundViolated:
    case ErrorCode::RowMismatch:
    case ErrorCode::Internal:
      return kValidation;
    case ErrorCode::FieldTooLarge:
    case ErrorCode::TooLarge:
    case ErrorCode::BudgetExceeded:
      return kResource;
    default:
      return kBadArgs;
  }
}

int report_error(std::string_view code, const std::string& message, int exit_code) {
  Json j{{"error", std::string(code)}, {"message", message}};
  std::cerr << j.dump() << "\n";
  return exit_code;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string symbols(const BchCode& code, const std::vector<Element>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(symbol_to_json(code, x));
  return s;
}

std::string params_name(const Json& row) {
  std::string s;
  for (const auto& [k, v] : row.at("params").items()) {
    s += (s.empty() ? "" : " ") + k + "=" + v.dump();
  }
  return s;
}

void print_certificate(const Certificate& cert) {
  const BchCode& code = *cert.code;
  std::cout << "[" << code.n << "," << code.dimension << "," << code.delta << "]_" << code.q
            << " weight-" << code.delta << " codeword\n";
  std::cout << "locators:";
  for (auto i : cert.locator_exponents) std::cout << " " << i;
  std::cout << " (plus 0)\n";
  std::cout << "S_j (gamma exponents): " << symbols(code, cert.s_values) << "\n";
  std::cout << "coefficients:          " << symbols(code, cert.coefficients) << "\n";
  std::cout << "digest: " << digest(certificate_to_json(cert)) << "\n";
}

void print_table(const Json& rows) {
  std::cout << std::left << std::setw(28) << "params" << std::setw(22) << "[n,k,d]_q"
            << std::setw(8) << "d_best" << std::setw(10) << "oracle" << std::setw(26)
            << "sphere packing" << "digest\n";
  for (const auto& r : rows) {
    if (r.contains("skipped")) {
      std::cout << std::setw(28) << params_name(r) << "skipped: cap\n";
      continue;
    }
    const auto& code = r.at("certificate").at("code");
    std::ostringstream nkd;
    nkd << "[" << r.at("n") << "," << r.at("k") << "," << r.at("d") << "]_" << code.at("q");
    const Json& oracle = r.at("checks").at("oracle");
    std::string oracle_s = "-";
    if (oracle.contains("d")) oracle_s = "d=" + oracle.at("d").dump();
    else if (oracle.contains("lower_bound")) oracle_s = ">=" + oracle.at("lower_bound").dump();
    std::cout << std::setw(28) << params_name(r) << std::setw(22) << nkd.str() << std::setw(8)
              << (r.at("d_best").is_null() ? "/" : r.at("d_best").dump()) << std::setw(10)
              << oracle_s << std::setw(26) << r.at("checks").at("sphere_packing").get<std::string>()
              << r.at("certificate_digest").get<std::string>()
              << (r.at("matches_reference").get<bool>() ? "" : "  MISMATCH") << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BCH codes with d = delta: certificates, oracles and bounds"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::uint64_t q = 0, n = 0, delta = 0, b = 1, k = 0, d = 0, lambda = 0;
  std::uint64_t budget = 0;
  std::optional<std::uint64_t> w_max;
  int m = 0, t = 0, p = 0, e = 0;

  auto* info = app.add_subcommand("info", "describe C(q, n, delta, b)");
  info->add_option("--q", q)->required();
  info->add_option("--n", n)->required();
  info->add_option("--delta", delta)->required();
  info->add_option("--b", b);

  auto* certify_cmd = app.add_subcommand("certify", "emit a weight-delta certificate");
  certify_cmd->require_subcommand(1);
  auto* c_small = certify_cmd->add_subcommand("small-delta", "2 <= delta <= q - 1");
  c_small->add_option("--q", q)->required();
  c_small->add_option("--m", m)->required();
  c_small->add_option("--delta", delta)->required();
  auto* c_qt = certify_cmd->add_subcommand("qt", "delta = q^t + 1, pt | m");
  c_qt->add_option("--q", q)->required();
  c_qt->add_option("--t", t)->required();
  c_qt->add_option("--m", m)->required();
  auto* c_np = certify_cmd->add_subcommand("nonprimitive", "n = (q^p - 1)/lambda, delta = p + 1");
  c_np->add_option("--p", p)->required();
  c_np->add_option("--e", e)->required();
  c_np->add_option("--lambda", lambda)->required();
  auto* c_search = certify_cmd->add_subcommand("search", "lexicographic locator search");
  c_search->add_option("--q", q)->required();
  c_search->add_option("--n", n)->required();
  c_search->add_option("--delta", delta)->required();
  budget = std::uint64_t{1} << 32;
  c_search->add_option("--budget", budget, "maximum number of subsets");

  auto* verify = app.add_subcommand("verify", "re-validate a certificate JSON file");
  std::string cert_file;
  verify->add_option("file", cert_file)->required();

  auto* table = app.add_subcommand("table", "regenerate a family table");
  std::string family_name, seed_dir, out_dir;
  table->add_option("family", family_name, "ternary|quaternary|small-delta|qt|nonprimitive")->required();
  table->add_option("--seed-dir", seed_dir, "diff against <dir>/<family>.json");
  table->add_option("--write-dir", out_dir, "store the regenerated table as <dir>/<family>.json");

  auto* oracle = app.add_subcommand("oracle", "brute-force minimum distance");
  oracle->add_option("--q", q)->required();
  oracle->add_option("--n", n)->required();
  oracle->add_option("--delta", delta)->required();
  oracle->add_option("--b", b);
  oracle->add_option("--w-max", w_max, "use support enumeration up to this weight");
  std::uint64_t oracle_budget = kDefaultSupportBudget;
  oracle->add_option("--budget", oracle_budget, "support budget");

  auto* bound = app.add_subcommand("bound", "sphere-packing classification of [n,k,d]_q");
  bound->add_option("--n", n)->required();
  bound->add_option("--k", k)->required();
  bound->add_option("--d", d)->required();
  bound->add_option("--q", q)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    return report_error("BadArguments", ex.what(), kBadArgs);
  }

  try {
    if (*info) {
      auto code = build_code(q, n, delta, b);
      Json j = code_to_json(*code);
      j.erase("generator");
      try {
        j["k_closed_form"] = dimension_closed_form(q, n, delta);
      } catch (const Error&) {
        j["k_closed_form"] = nullptr;
      }
      j["bose_distance"] = b == 1 ? Json(bose_distance(*code)) : Json(nullptr);
      j["bch_bound"] = bch_bound(*code);
      j["degenerate"] = code->dimension <= 1;
      if (json) {
        emit(j);
      } else {
        std::cout << "C(" << q << ", " << n << ", " << delta << ", " << b << ")\n"
                  << "n = " << n << ", m = " << code->m << ", k = " << code->dimension
                  << " (closed form: " << (j["k_closed_form"].is_null() ? "out of range" : j["k_closed_form"].dump())
                  << ")\n"
                  << "Bose distance = " << j["bose_distance"].dump() << ", BCH bound = " << j["bch_bound"]
                  << ", |T| = " << code->defining_set.size() << "\n";
        if (code->dimension <= 1) std::cout << "degenerate: repetition-like code\n";
      }
      return kOk;
    }

    if (*certify_cmd) {
      std::optional<Certificate> cert;
      if (*c_small) cert = construct_small_delta(q, m, delta);
      if (*c_qt) cert = construct_qt_family(q, t, m);
      if (*c_np) cert = construct_nonprimitive_family(p, e, lambda);
      if (*c_search) {
        auto result = search_certificate(build_code(q, n, delta), budget);
        if (result.status != SearchStatus::Found) {
          const bool exhausted = result.status == SearchStatus::NotFound;
          Json j{{"status", exhausted ? "not-found" : "budget-exceeded"}, {"examined", result.examined}};
          if (json) emit(j);
          else std::cout << j["status"].get<std::string>() << " after " << result.examined << " subsets\n";
          return exhausted ? kValidation : kResource;
        }
        cert = std::move(result.certificate);
      }
      if (json) emit(certificate_to_json(*cert));
      else print_certificate(*cert);
      return kOk;
    }

    if (*verify) {
      std::ifstream in(cert_file);
      if (!in) return report_error("ParseError", "cannot read " + cert_file, kBadArgs);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const nlohmann::json::exception& ex) {
        return report_error("ParseError", ex.what(), kBadArgs);
      }
      const Certificate cert = certificate_from_json(j);
      if (json) emit(Json{{"valid", true}, {"digest", digest(j)}});
      else std::cout << "valid certificate, digest " << digest(j) << "\n";
      (void)cert;
      return kOk;
    }

    if (*table) {
      const Family family = family_from_string(family_name);
      const Json rows = regenerate_table(family);
      const std::string file = std::string(to_string(family)) + ".json";
      if (json) emit(rows);
      else print_table(rows);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream(std::filesystem::path(out_dir) / file) << rows.dump(2) << "\n";
      }
      for (const auto& r : rows) {
        if (r.contains("matches_reference") && !r["matches_reference"].get<bool>()) {
          return report_error("RowMismatch", "regenerated parameters differ from the reference", kValidation);
        }
      }
      if (!seed_dir.empty()) {
        std::ifstream in(std::filesystem::path(seed_dir) / file);
        if (!in) return report_error("ParseError", "no golden file " + file + " in " + seed_dir, kBadArgs);
        const auto cells = diff_tables(rows, Json::parse(in));
        if (!cells.empty()) {
          Json j{{"error", "RowMismatch"}, {"cells", cells}};
          std::cerr << j.dump() << "\n";
          return kValidation;
        }
        if (!json) std::cout << "matches " << (std::filesystem::path(seed_dir) / file).string() << "\n";
      }
      return kOk;
    }

    if (*oracle) {
      auto code = build_code(q, n, delta, b);
      Json j;
      if (w_max) {
        auto out = min_distance_support(*code, *w_max, oracle_budget);
        if (auto* r = std::get_if<OracleResult>(&out)) j = oracle_to_json(*r);
        else j = lower_bound_to_json(std::get<LowerBoundOnly>(out));
      } else {
        j = oracle_to_json(min_distance_full(*code));
      }
      if (json) {
        emit(j);
      } else if (j.contains("d")) {
        std::cout << "d = " << j["d"] << " (" << j["method"].get<std::string>() << ", "
                  << j["enumerated"] << " enumerated)\n";
      } else {
        std::cout << "d >= " << j["lower_bound"] << " (" << j["enumerated"] << " supports enumerated)\n";
      }
      return kOk;
    }

    if (*bound) {
      const auto r = classify(n, k, d, q);
      if (json) {
        emit(bound_to_json(r));
      } else {
        std::cout << "[" << n << "," << k << "," << d << "]_" << q << ": " << to_string(r.classification)
                  << " " << kBoundLabel << " (max d allowed " << r.max_d_allowed
                  << (r.perfect ? ", perfect" : "") << ")\n";
      }
      return kOk;
    }
  } catch (const Error& ex) {
    return report_error(to_string(ex.code()), ex.what(), exit_code_for(ex.code()));
  } catch (const std::exception& ex) {
    return report_error("Internal", ex.what(), kValidation);
  }
  return kBadArgs;
}
