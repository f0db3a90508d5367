#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <vector>

#include "bchcert/error.hpp"
#include "bchcert/locator.hpp"

namespace bchcert {

namespace {

// Advances c[from..] to the next combination in lexicographic order with
// values bounded by `max_value`. Returns false when exhausted.
bool next_combination(std::vector<std::uint64_t>& c, std::size_t from, std::uint64_t max_value) {
  const std::size_t r = c.size();
  std::size_t i = r;
  while (i > from) {
    --i;
    if (c[i] < max_value - (r - 1 - i)) {
      ++c[i];
      for (std::size_t k = i + 1; k < r; ++k) c[k] = c[k - 1] + 1;
      return true;
    }
  }
  return false;
}

// The S_j criterion evaluated on exponents only. With x = beta^c,
//   log(1 - x_k)     = log(-1) + D[c_k]
//   log(x_j - x_k)   = c_k * be + D[(c_j - c_k) mod n]
// where D[d] = log(beta^d - 1). S_j lies in GF(q)^* iff its log is a
// multiple of (|F| - 1)/(q - 1), so everything is reduced modulo that step.
class LogCriterion {
 public:
  explicit LogCriterion(const BchCode& code)
      : n_(static_cast<std::int64_t>(code.n)),
        step_(static_cast<std::int64_t>(code.field->order() / (code.q - 1))),
        be_(static_cast<std::int64_t>(code.beta_exponent) % step_),
        minus_one_(code.field->minus_one().log() % step_),
        diff_(code.n, 0) {
    const Field& f = *code.field;
    for (std::uint64_t d = 1; d < code.n; ++d) {
      const Element v = f.sub(code.beta_pow(static_cast<std::int64_t>(d)), f.one());
      diff_[d] = v.log() % step_;
    }
  }

  bool holds(const std::vector<std::uint64_t>& c) const {
    const std::size_t r = c.size();
    // sum over k of log(1 - x_k) - c_k * be, the second half belonging to the
    // beta^{c_k} factor of x_j - x_k
    std::int64_t total = 0;
    for (auto ck : c) total += minus_one_ + diff_[ck] - static_cast<std::int64_t>(ck) * be_ % step_;
    for (std::size_t j = 0; j < r; ++j) {
      const auto cj = static_cast<std::int64_t>(c[j]);
      std::int64_t acc = total - (minus_one_ + diff_[c[j]] - cj * be_ % step_) - cj * be_ % step_;
      for (std::size_t k = 0; k < r; ++k) {
        if (k == j) continue;
        const auto ck = static_cast<std::int64_t>(c[k]);
        acc -= diff_[static_cast<std::size_t>(((cj - ck) % n_ + n_) % n_)];
      }
      if (acc % step_ != 0) return false;
    }
    return true;
  }

 private:
  std::int64_t n_;
  std::int64_t step_;
  std::int64_t be_;
  std::int64_t minus_one_;
  std::vector<std::int64_t> diff_;
};

void require_narrow(const BchCode& code) {
  if (code.b != 1) throw Error(ErrorCode::NotNarrowSense, "search needs a narrow-sense code");
}

SearchResult finish(CodePtr code, std::uint64_t total, std::uint64_t budget,
                    const std::vector<std::uint64_t>* hit, std::uint64_t hit_rank) {
  SearchResult out;
  if (hit != nullptr) {
    out.status = SearchStatus::Found;
    out.examined = hit_rank + 1;
    out.certificate = certify(std::move(code), *hit);
    return out;
  }
  out.examined = std::min(total, budget);
  out.status = budget >= total ? SearchStatus::NotFound : SearchStatus::BudgetExceeded;
  return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

SearchResult search_certificate_serial(CodePtr code, std::uint64_t budget) {
  require_narrow(*code);
  const std::uint64_t r = code->delta - 1;
  const std::uint64_t total = binomial(code->n - 1, r);
  if (total == 0 || budget == 0) return finish(std::move(code), total, budget, nullptr, 0);

  const Field& f = *code->field;
  std::vector<std::uint64_t> c(r);
  for (std::uint64_t k = 0; k < r; ++k) c[k] = k + 1;
  std::vector<Element> points(r);
  std::uint64_t rank = 0;
  do {
    if (rank >= budget) break;
    for (std::uint64_t k = 0; k < r; ++k) points[k] = code->beta_pow(static_cast<std::int64_t>(c[k]));
    const auto s = s_values(f, points);
    const bool ok = std::all_of(s.begin(), s.end(), [&](Element v) {
      return !v.is_zero() && code->in_base_field(v);
    });
    if (ok) return finish(std::move(code), total, budget, &c, rank);
    ++rank;
  } while (next_combination(c, 0, code->n - 1));
  return finish(std::move(code), total, budget, nullptr, 0);
}

SearchResult search_certificate(CodePtr code, std::uint64_t budget) {
  require_narrow(*code);
  const std::uint64_t n = code->n;
  const std::uint64_t r = code->delta - 1;
  const std::uint64_t total = binomial(n - 1, r);
  if (total == 0 || budget == 0) return finish(std::move(code), total, budget, nullptr, 0);

  // Subsets are split into branches by their smallest element a; branch a
  // starts at lexicographic rank offset[a].
  const auto branches = static_cast<std::int64_t>(n - r);
  std::vector<std::uint64_t> offset(static_cast<std::size_t>(branches) + 2, 0);
  for (std::int64_t a = 1; a <= branches; ++a) {
    offset[a + 1] = saturating_add(offset[a], binomial(n - 1 - static_cast<std::uint64_t>(a), r - 1));
  }

  const LogCriterion criterion(*code);
  std::vector<std::vector<std::uint64_t>> hits(static_cast<std::size_t>(branches) + 1);
  std::vector<std::uint64_t> hit_rank(static_cast<std::size_t>(branches) + 1, 0);
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t a = 1; a <= branches; ++a) {
    if (a > best.load(std::memory_order_relaxed)) continue;
    std::uint64_t rank = offset[a];
    if (rank >= budget) continue;
    std::vector<std::uint64_t> c(r);
    for (std::uint64_t k = 0; k < r; ++k) c[k] = static_cast<std::uint64_t>(a) + k;
    do {
      if (rank >= budget) break;
      if (criterion.holds(c)) {
        hits[a] = c;
        hit_rank[a] = rank;
        std::int64_t cur = best.load();
        while (a < cur && !best.compare_exchange_weak(cur, a)) {
        }
        break;
      }
      ++rank;
      if ((rank & 0x3ff) == 0 && a > best.load(std::memory_order_relaxed)) break;
    } while (next_combination(c, 1, n - 1));
  }

  for (std::int64_t a = 1; a <= branches; ++a) {
    if (!hits[a].empty()) return finish(std::move(code), total, budget, &hits[a], hit_rank[a]);
  }
  return finish(std::move(code), total, budget, nullptr, 0);
}

}  // namespace bchcert
