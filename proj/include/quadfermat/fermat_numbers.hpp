#pragma once

// Divisor searches for Fermat numbers F_n = 2^(2^n) + 1.
//
// Every divisor of F_n has the form 2^(n+2) s + 1. For a proper split
// (2^(n+2) s + 1)(2^(n+2) r + 1) the Fermat center is 2^(2n+3) lambda + 1 with
// 2^(n+2) lambda = r + s, which gives two searches: over s (a cheap modular
// congruence per candidate) and over lambda (Fermat's square test on a sparse
// progression of centers).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadfermat/arith.hpp"
#include "quadfermat/center_scan.hpp"

namespace quadfermat {

/// Largest index make_fermat builds unless told otherwise (F_30 is already 128 MiB).
inline constexpr unsigned default_max_fermat_index = 30;

struct FermatTarget {
  unsigned index_n = 0;
  Natural value;
  Natural divisor_step;  // 2^(n+2)
  Natural center_step;   // 2^(2n+3)
};

inline FermatTarget make_fermat(unsigned index_n, unsigned max_index = default_max_fermat_index) {
  if (index_n >= 64) throw std::invalid_argument("make_fermat: index must be below 64");
  if (index_n > max_index)
    throw std::invalid_argument("make_fermat: index " + std::to_string(index_n) + " exceeds the size budget " +
                                std::to_string(max_index));
  FermatTarget t;
  t.index_n = index_n;
  t.value = (Natural(1) << (std::uint64_t{1} << index_n)) + 1;
  t.divisor_step = Natural(1) << (index_n + 2);
  t.center_step = Natural(1) << (2 * index_n + 3);
  return t;
}

namespace detail {

inline void require_index(const FermatTarget& t, unsigned minimum, const char* what) {
  if (t.index_n < minimum)
    throw std::invalid_argument(std::string(what) + " requires n >= " + std::to_string(minimum) + ", got n = " +
                                std::to_string(t.index_n));
}

/// 2^n - 2(n + 2), non-negative for n >= 4.
inline std::uint64_t lucas_exponent(const FermatTarget& t) {
  require_index(t, 4, "the Lucas-form congruence");
  return (std::uint64_t{1} << t.index_n) - 2 * (t.index_n + 2);
}

/// 2^n - (3n + 5), positive for n >= 5.
inline std::uint64_t lambda_sup_exponent(const FermatTarget& t) {
  require_index(t, 5, "the lambda interval");
  return (std::uint64_t{1} << t.index_n) - (3 * t.index_n + 5);
}

}  // namespace detail

struct LucasDivisorCandidate {
  Natural s;
  Natural divisor;  // 2^(n+2) s + 1
  Natural residue;  // (2^(2^n - 2(n+2)) + s^2) mod divisor

  bool divides() const { return residue == 0; }
};

/// Evaluates the congruence 2^(2^n - 2(n+2)) + s^2 = 0 (mod 2^(n+2) s + 1),
/// which holds exactly when the divisor divides F_n.
inline LucasDivisorCandidate lemma31_check(const FermatTarget& t, const Natural& s) {
  const std::uint64_t e = detail::lucas_exponent(t);
  if (s < 1) throw std::invalid_argument("lemma31_check: s must be at least 1");
  LucasDivisorCandidate c;
  c.s = s;
  c.divisor = t.divisor_step * s + 1;
  c.residue = (Natural(boost::multiprecision::powm(Natural(2), Natural(e), c.divisor)) + s * s) % c.divisor;
  return c;
}

/// Largest s with 2^(n+2) s + 1 < sqrt(F_n): 2^(2^(n-1) - n - 2) - 1.
inline Natural lucas_s_bound(const FermatTarget& t) {
  detail::require_index(t, 4, "lucas_s_bound");
  return (Natural(1) << ((std::uint64_t{1} << (t.index_n - 1)) - t.index_n - 2)) - 1;
}

/// All s in [1, min(s_max, lucas_s_bound)] whose divisor divides F_n, ascending.
inline std::vector<LucasDivisorCandidate> lucas_search(const FermatTarget& t, const Natural& s_max) {
  const Natural cap = lucas_s_bound(t);
  const Natural last = s_max < cap ? s_max : cap;
  std::vector<LucasDivisorCandidate> hits;
  for (Natural s = 1; s <= last; ++s) {
    LucasDivisorCandidate c = lemma31_check(t, s);
    if (c.divides()) {
      if (t.value % c.divisor != 0) throw internal_error("lucas_search: congruence holds but divisor does not divide F_n");
      hits.push_back(std::move(c));
    }
  }
  return hits;
}

/// lambda_min <= lambda < lambda_sup.
struct LambdaInterval {
  Natural lambda_min;
  Natural lambda_sup;

  bool contains(const Natural& lambda) const { return lambda >= lambda_min && lambda < lambda_sup; }
};

inline LambdaInterval lambda_interval(const FermatTarget& t) {
  const std::uint64_t sup_exp = detail::lambda_sup_exponent(t);
  const Natural lift = ceil_sqrt(t.value) - 1;
  Natural lo = lift / t.center_step;
  if (lo * t.center_step != lift) ++lo;
  return LambdaInterval{lo, Natural(1) << sup_exp};
}

struct LambdaCandidate {
  Natural lambda;
  Natural center;  // 2^(2n+3) lambda + 1
  Integer disc;
  std::optional<Natural> root;

  Natural small_factor() const { return center - *root; }
  Natural large_factor() const { return center + *root; }
};

/// Congruence skips on lambda. Each is a pruning heuristic, not a proven
/// property of every witness.
struct LambdaFilters {
  bool mod3 = false;                           // keep only lambda = 1 (mod 3)
  bool mod4 = false;                           // drop lambda = 2 (mod 4)
  std::vector<std::uint64_t> primes_3mod4;     // drop lambda = 0 (mod p)

  static LambdaFilters none() { return {}; }
  static LambdaFilters all(std::uint64_t prime_bound = 97) {
    LambdaFilters f{true, true, {}};
    for (std::uint64_t p : primes_up_to(prime_bound))
      if (p % 4 == 3) f.primes_3mod4.push_back(p);
    return f;
  }
};

struct LambdaSearchResult {
  std::vector<LambdaCandidate> hits;
  bool budget_exhausted = false;
  std::uint64_t examined = 0;
  std::uint64_t skipped_mod3 = 0;
  std::uint64_t skipped_mod4 = 0;
  std::uint64_t skipped_primes = 0;
};

/// Scans lambda upward from lambda_min, stopping at lambda_sup or after
/// lambda_budget values, and returns every lambda whose center gives a
/// perfect-square discriminant (each one a validated proper split of F_n).
inline LambdaSearchResult lambda_search(const FermatTarget& t, std::uint64_t lambda_budget, const LambdaFilters& filters) {
  const LambdaInterval range = lambda_interval(t);
  LambdaSearchResult result;
  const Natural span = range.lambda_sup - range.lambda_min;
  std::uint64_t steps = lambda_budget;
  if (span <= lambda_budget) {
    steps = static_cast<std::uint64_t>(span);
  } else {
    result.budget_exhausted = true;
  }

  std::vector<std::uint64_t> prime_res;
  for (std::uint64_t p : filters.primes_3mod4) prime_res.push_back(detail::mod_u64(range.lambda_min, p));
  std::uint64_t res3 = detail::mod_u64(range.lambda_min, 3);
  std::uint64_t res4 = detail::mod_u64(range.lambda_min, 4);

  CenterScan scan(t.center_step * range.lambda_min + 1, t.center_step, t.value);
  for (std::uint64_t k = 0; k < steps; ++k, scan.advance()) {
    bool skip = false;
    if (filters.mod3 && res3 != 1) {
      ++result.skipped_mod3;
      skip = true;
    } else if (filters.mod4 && res4 == 2) {
      ++result.skipped_mod4;
      skip = true;
    } else {
      for (std::size_t i = 0; i < prime_res.size(); ++i) {
        if (prime_res[i] == 0) {
          ++result.skipped_primes;
          skip = true;
          break;
        }
      }
    }
    res3 = (res3 + 1) % 3;
    res4 = (res4 + 1) % 4;
    for (std::size_t i = 0; i < prime_res.size(); ++i)
      if (++prime_res[i] == filters.primes_3mod4[i]) prime_res[i] = 0;
    if (skip) continue;

    ++result.examined;
    std::optional<Natural> root = scan.root();
    if (!root) continue;
    LambdaCandidate c{range.lambda_min + k, scan.center(), scan.disc(), std::move(root)};
    if (c.center <= *c.root + 1 || c.small_factor() * c.large_factor() != t.value)
      throw internal_error("lambda_search: square discriminant at lambda " + c.lambda.str() + " is not a proper split");
    result.hits.push_back(std::move(c));
  }
  return result;
}

/// lambda for a proper split F_n = p * q: ((p + q)/2 - 1) / 2^(2n+3). Cross-checked
/// against (2^(2^n - 2(n+2)) + s^2) / (2^(n+2) s + 1) with s = (p - 1)/2^(n+2).
inline Natural lambda_of_pair(const FermatTarget& t, const Natural& p, const Natural& q) {
  const std::uint64_t e = detail::lucas_exponent(t);
  if (p <= 1 || p > q) throw std::invalid_argument("lambda_of_pair: need 1 < p <= q");
  if (p * q != t.value) throw std::invalid_argument("lambda_of_pair: p * q != F_n");
  const Natural center = (p + q) / 2;
  if ((p + q) % 2 != 0 || (center - 1) % t.center_step != 0)
    throw internal_error("lambda_of_pair: center " + center.str() + " is not 2^(2n+3) lambda + 1");
  Natural lambda = (center - 1) / t.center_step;

  if ((p - 1) % t.divisor_step != 0) throw internal_error("lambda_of_pair: factor not of the form 2^(n+2) s + 1");
  const Natural s = (p - 1) / t.divisor_step;
  const Natural num = (Natural(1) << e) + s * s;
  if (num % p != 0 || num / p != lambda)
    throw internal_error("lambda_of_pair: Lucas-form value disagrees with center value");
  return lambda;
}

}  // namespace quadfermat
