#include "bchcert/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bchcert/error.hpp"
#include "bchcert/locator.hpp"

namespace bchcert {

namespace {

// GF(q) symbols as small integers: 0 for zero, t + 1 for gamma^t, with an
// addition table. Keeps the enumeration loops away from the ambient field.
class CompactSymbols {
 public:
  explicit CompactSymbols(const BchCode& code) : code_(code), q_(code.q), add_(q_ * q_, 0) {
    for (std::uint64_t a = 0; a < q_; ++a) {
      for (std::uint64_t b = 0; b < q_; ++b) {
        add_[a * q_ + b] = encode(code.field->add(decode(a), decode(b)));
      }
    }
  }

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[a * q_ + b]; }

  std::uint16_t encode(Element a) const {
    return a.is_zero() ? 0 : static_cast<std::uint16_t>(code_.field->subfield_log(a, q_) + 1);
  }
  Element decode(std::uint64_t v) const {
    return v == 0 ? Element{} : code_.field->from_subfield_log(static_cast<std::int64_t>(v - 1), q_);
  }
  Codeword decode_word(const std::vector<std::uint16_t>& w) const {
    Codeword out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = decode(w[i]);
    return out;
  }

 private:
  const BchCode& code_;
  std::uint64_t q_;
  std::vector<std::uint16_t> add_;
};

struct Best {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint16_t> word;

  void offer(std::size_t w, const std::vector<std::uint16_t>& candidate) {
    if (w < weight || (w == weight && candidate < word)) {
      weight = w;
      word = candidate;
    }
  }
};

std::uint64_t message_count(const BchCode& code) {
  if (code.dimension == 0) throw Error(ErrorCode::DegenerateCode, "code has dimension 0");
  if (code.q > 1024) throw Error(ErrorCode::TooLarge, "alphabet too large for enumeration");
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < code.dimension; ++i) {
    total *= code.q;
    if (total > kMaxMessages) {
      throw Error(ErrorCode::TooLarge, "q^k exceeds the 2^24 message limit");
    }
  }
  return total;
}

// RREF kernel vector of the parity rows restricted to `support`, normalized
// so the entry at position support[0] is 1. Empty when the kernel is trivial.
std::vector<Element> support_kernel(const BchCode& code, const std::vector<std::uint64_t>& support,
                                    std::vector<std::vector<Element>>& mat) {
  const Field& f = *code.field;
  const std::size_t w = support.size();
  const std::size_t rows = code.defining_set.size();
  mat.assign(rows, std::vector<Element>(w));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto s = static_cast<std::int64_t>(code.defining_set[r]);
    for (std::size_t c = 0; c < w; ++c) {
      mat[r][c] = code.beta_pow(s * static_cast<std::int64_t>(support[c]) % static_cast<std::int64_t>(code.n));
    }
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < w && row < rows; ++col) {
    std::size_t pr = row;
    while (pr < rows && mat[pr][col].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(mat[pr], mat[row]);
    const Element inv = f.inv(mat[row][col]);
    for (auto& v : mat[row]) v = f.mul(v, inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || mat[r][col].is_zero()) continue;
      const Element factor = mat[r][col];
      for (std::size_t c = col; c < w; ++c) mat[r][c] = f.sub(mat[r][c], f.mul(factor, mat[row][c]));
    }
    pivot_cols.push_back(col);
    ++row;
  }
  if (pivot_cols.size() == w) return {};

  std::size_t free_col = 0;
  for (std::size_t k = 0; free_col < w && k < pivot_cols.size() && pivot_cols[k] == free_col; ++k) ++free_col;
  std::vector<Element> v(w);
  v[free_col] = f.one();
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = f.neg(mat[r][free_col]);
  if (v[0].is_zero()) {
    throw Error(ErrorCode::Internal, "kernel vector misses position 0 in a minimal round");
  }
  const Element scale = f.inv(v[0]);
  for (auto& x : v) {
    x = f.mul(x, scale);
    if (x.is_zero() || !code.in_base_field(x)) {
      throw Error(ErrorCode::Internal, "kernel vector is not a full-support GF(q) vector");
    }
  }
  return v;
}

}  // namespace

std::string_view to_string(OracleMethod method) {
  return method == OracleMethod::FullEnumeration ? "full-enumeration" : "support-enumeration";
}

OracleResult min_distance_full(const BchCode& code) {
  const std::uint64_t total = message_count(code);
  const CompactSymbols sym(code);
  const Field& f = *code.field;
  const int p = code.p;
  const int e = code.e;
  const std::size_t n = code.n;
  const auto digits = static_cast<std::size_t>(code.dimension) * static_cast<std::size_t>(e);

  // Row (i, l) = gamma^l * x^i * g(x); {1, gamma, ..., gamma^(e-1)} is a
  // GF(p)-basis of GF(q), so p-ary digits over these rows span the code.
  const Element gamma = f.from_subfield_log(1, code.q);
  std::vector<std::vector<std::uint16_t>> row_symbols(static_cast<std::size_t>(e));
  for (int l = 0; l < e; ++l) {
    const Element scale = f.pow(gamma, l);
    for (auto c : code.generator.coeffs()) row_symbols[l].push_back(sym.encode(f.mul(scale, c)));
  }
  auto add_row = [&](std::vector<std::uint16_t>& w, std::size_t& wt, std::size_t digit) {
    const std::size_t shift = digit / static_cast<std::size_t>(e);
    const auto& rs = row_symbols[digit % static_cast<std::size_t>(e)];
    for (std::size_t t = 0; t < rs.size(); ++t) {
      const std::uint16_t old = w[shift + t];
      const std::uint16_t now = sym.add(old, rs[t]);
      w[shift + t] = now;
      wt += (now != 0);
      wt -= (old != 0);
    }
  };

  constexpr std::uint64_t kChunk = 1 << 14;
  const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
  Best best;

#pragma omp parallel
  {
    Best local;
    std::vector<std::uint16_t> w(n);
    std::vector<int> a(digits + 1);
#pragma omp for schedule(dynamic)
    for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
      const std::uint64_t c0 = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(chunk) * kChunk);
      const std::uint64_t c1 = std::min(total, static_cast<std::uint64_t>(chunk + 1) * kChunk);
      if (c0 >= c1) continue;
      // Gray state at c0: digit j carries (a_j - a_{j+1}) mod p.
      std::uint64_t v = c0;
      for (std::size_t j = 0; j < digits; ++j) {
        a[j] = static_cast<int>(v % static_cast<std::uint64_t>(p));
        v /= static_cast<std::uint64_t>(p);
      }
      a[digits] = 0;
      std::fill(w.begin(), w.end(), 0);
      std::size_t wt = 0;
      for (std::size_t j = 0; j < digits; ++j) {
        const int g = ((a[j] - a[j + 1]) % p + p) % p;
        for (int rep = 0; rep < g; ++rep) add_row(w, wt, j);
      }
      local.offer(wt, w);
      for (std::uint64_t c = c0 + 1; c < c1; ++c) {
        std::size_t j = 0;
        for (std::uint64_t t = c; t % static_cast<std::uint64_t>(p) == 0; t /= static_cast<std::uint64_t>(p)) ++j;
        add_row(w, wt, j);
        if (wt <= local.weight) local.offer(wt, w);
      }
    }
#pragma omp critical
    best.offer(local.weight, local.word);
  }

  return OracleResult{best.weight, sym.decode_word(best.word), OracleMethod::FullEnumeration,
                      total - 1};
}

OracleResult min_distance_full_serial(const BchCode& code) {
  const std::uint64_t total = message_count(code);
  const CompactSymbols sym(code);
  const std::size_t k = code.dimension;
  Best best;
  std::vector<std::uint16_t> w(code.n);
  for (std::uint64_t c = 1; c < total; ++c) {
    std::vector<Element> msg(k);
    std::uint64_t v = c;
    for (std::size_t i = 0; i < k; ++i) {
      msg[i] = sym.decode(v % code.q);
      v /= code.q;
    }
    const Polynomial word = Polynomial(code.field, std::move(msg)) * code.generator;
    for (std::size_t i = 0; i < code.n; ++i) w[i] = sym.encode(word.coeff(i));
    best.offer(weight(word.coeffs()), w);
  }
  return OracleResult{best.weight, sym.decode_word(best.word), OracleMethod::FullEnumeration,
                      total - 1};
}

SupportOracleOutcome min_distance_support(const BchCode& code, std::uint64_t w_max,
                                          std::uint64_t budget, bool parallel) {
  const std::uint64_t bound = bch_bound(code);
  if (w_max + 1 < bound) return LowerBoundOnly{bound, 0};

  const std::uint64_t n = code.n;
  std::uint64_t enumerated = 0;
  for (std::uint64_t w = 1; w <= std::min(w_max, n); ++w) {
    const std::uint64_t round = binomial(n - 1, w - 1);
    if (round > budget || enumerated > budget - round) {
      throw Error(ErrorCode::BudgetExceeded, "support enumeration at weight " + std::to_string(w) +
                                                 " exceeds the budget of " + std::to_string(budget));
    }
    enumerated += round;

    // Branch on the smallest nonzero position; the first hit in each branch
    // is that branch's lexicographic minimum.
    const std::uint64_t free = w - 1;
    const auto branches = static_cast<std::int64_t>(free == 0 ? 1 : n - free);
    std::vector<std::optional<std::pair<std::vector<std::uint64_t>, std::vector<Element>>>> hits(
        static_cast<std::size_t>(branches) + 1);

#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (std::int64_t a = 1; a <= branches; ++a) {
      std::vector<std::vector<Element>> scratch;
      std::vector<std::uint64_t> support(w);
      support[0] = 0;
      for (std::uint64_t k = 1; k < w; ++k) support[k] = static_cast<std::uint64_t>(a) + k - 1;
      while (true) {
        auto kernel = support_kernel(code, support, scratch);
        if (!kernel.empty()) {
          hits[a].emplace(support, std::move(kernel));
          break;
        }
        // next subset of positions 2..w-1 with the branch element fixed
        std::size_t i = w;
        bool advanced = false;
        while (i > 2) {
          --i;
          if (support[i] < n - 1 - (w - 1 - i)) {
            ++support[i];
            for (std::size_t k = i + 1; k < w; ++k) support[k] = support[k - 1] + 1;
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
    }

    for (std::int64_t a = 1; a <= branches; ++a) {
      if (!hits[a]) continue;
      const auto& [support, coeffs] = *hits[a];
      std::vector<std::pair<std::uint64_t, Element>> pairs;
      for (std::size_t j = 0; j < support.size(); ++j) pairs.emplace_back(support[j], coeffs[j]);
      Codeword witness = word_from_support(code, pairs);
      if (!is_codeword(code, witness)) throw Error(ErrorCode::Internal, "support witness is not a codeword");
      return OracleResult{w, std::move(witness), OracleMethod::SupportEnumeration, enumerated};
    }
  }
  return LowerBoundOnly{std::max(w_max + 1, std::uint64_t{1}), enumerated};
}

}  // namespace bchcert
