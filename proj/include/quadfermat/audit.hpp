#pragma once

// Brute-force claim audit.
//
// Ground truth comes only from trial division; the sieve in quadform.hpp is
// never used to produce it. Each claim is evaluated on every proper factor
// pair of every composite target in range, and every failure is recorded
// with enough data to replay it on its own.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "quadfermat/arith.hpp"
#include "quadfermat/fermat_numbers.hpp"
#include "quadfermat/quadform.hpp"

namespace quadfermat {

/// Prime factors of n >= 2 in ascending order (with multiplicity), by trial
/// division over a 2-3-5 wheel up to isqrt(n).
template <class Int>
std::vector<Int> trial_factor(Int n) {
  if (n < 2) throw std::invalid_argument("trial_factor: n must be at least 2");
  std::vector<Int> factors;
  for (unsigned small : {2U, 3U, 5U}) {
    while (n % small == 0) {
      factors.emplace_back(small);
      n /= small;
    }
  }
  static constexpr unsigned gaps[8] = {4, 2, 4, 2, 4, 6, 2, 6};  // 7, 11, 13, 17, 19, 23, 29, 31, 37, ...
  Int d = 7;
  for (unsigned i = 0; d * d <= n; d += gaps[i], i = (i + 1) % 8) {
    while (n % d == 0) {
      factors.push_back(d);
      n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

inline std::vector<Natural> oracle_factorize(const Natural& N) {
  if (N < 2) throw std::invalid_argument("oracle_factorize: N must be at least 2");
  if (N <= std::numeric_limits<std::uint64_t>::max()) {
    std::vector<Natural> out;
    for (std::uint64_t f : trial_factor(static_cast<std::uint64_t>(N))) out.emplace_back(f);
    return out;
  }
  return trial_factor(N);
}

/// All divisors from an ascending prime multiset, ascending.
inline std::vector<Natural> divisors_from_factors(const std::vector<Natural>& primes) {
  std::vector<Natural> divisors{1};
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    const std::size_t base = divisors.size();
    Natural power = 1;
    for (std::size_t e = i; e < j; ++e) {
      power *= primes[i];
      for (std::size_t k = 0; k < base; ++k) divisors.push_back(divisors[k] * power);
    }
    i = j;
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

/// Unordered proper splits a * b = N with 1 < a <= b, ascending in a.
inline std::vector<std::pair<Natural, Natural>> pairs_from_factors(const Natural& N, const std::vector<Natural>& primes) {
  std::vector<std::pair<Natural, Natural>> out;
  for (const Natural& a : divisors_from_factors(primes)) {
    if (a <= 1) continue;
    Natural b = N / a;
    if (a > b) break;
    out.emplace_back(a, std::move(b));
  }
  return out;
}

inline std::vector<std::pair<Natural, Natural>> proper_factor_pairs(const Natural& N) {
  if (N < 4) return {};
  return pairs_from_factors(N, oracle_factorize(N));
}

// ---------------------------------------------------------------------------
// Claim catalogue

enum class ClaimId {
  E1,     // even n: (8u+1)^2 - N is a perfect square
  E2,     // even n: u in [(-1+sqrt N)/8, (N-5)/40)
  E3,     // even n: u != 0 (mod p) for primes p = 3 (mod 4)
  E4,     // even n: u in the admissible residue set mod p, p odd, p !| N
  E5a_n,  // if n even then u = 2 (mod 4)
  E5a_m,  // if m even then u = 2 (mod 4)
  E5b_n,  // if n even then u != 2 (mod 4)
  E5b_m,  // if m even then u != 2 (mod 4)
  E6_n,   // if 3 !| n then u = 1 (mod 3)
  E6_m,   // if 3 !| m then u = 1 (mod 3)
  O1,     // odd n: (8u+3)^2 - N is a perfect square
  O2,     // odd n: u in [(-3+sqrt N)/8, (N-15)/40)
  O3,     // odd n: 4u + 1 != 0 (mod p) for primes p = 3 (mod 4)
  O4,     // odd n: u in the admissible residue set mod p
  L1,     // even n: the small factor 4b+1 <= sqrt N satisfies m^2 + b^2 = 0 (mod 4b+1)
  CE,     // even n: witness in the interval <=> N composite
  CO,     // odd n: witness in the interval <=> N composite
  F1,     // (2^(2n+3) lambda + 1)^2 - F_n is a perfect square
  F2,     // lambda in [(-1+sqrt F_n)/2^(2n+3), 2^(2^n-(3n+5)))
  F3,     // lambda != 0 (mod p) for primes p = 3 (mod 4)
  F4,     // lambda != 2 (mod 4)
  F5,     // lambda = 1 (mod 3)
  L2,     // s = (p-1)/2^(n+2) satisfies the Lucas-form congruence below the bound
};

inline constexpr ClaimId all_claims[] = {
    ClaimId::E1,    ClaimId::E2,    ClaimId::E3, ClaimId::E4, ClaimId::E5a_n, ClaimId::E5a_m,
    ClaimId::E5b_n, ClaimId::E5b_m, ClaimId::E6_n, ClaimId::E6_m, ClaimId::O1, ClaimId::O2,
    ClaimId::O3,    ClaimId::O4,    ClaimId::L1, ClaimId::CE, ClaimId::CO,    ClaimId::F1,
    ClaimId::F2,    ClaimId::F3,    ClaimId::F4, ClaimId::F5, ClaimId::L2,
};

/// Claims that follow from the factorization identity and interval algebra
/// alone; any violation of these is a bug.
inline constexpr ClaimId structural_claims[] = {ClaimId::E1, ClaimId::E2, ClaimId::O1, ClaimId::O2,
                                                ClaimId::L1, ClaimId::CE, ClaimId::CO};

inline std::string to_string(ClaimId id) {
  switch (id) {
    case ClaimId::E1: return "E1";
    case ClaimId::E2: return "E2";
    case ClaimId::E3: return "E3";
    case ClaimId::E4: return "E4";
    case ClaimId::E5a_n: return "E5a.n";
    case ClaimId::E5a_m: return "E5a.m";
    case ClaimId::E5b_n: return "E5b.n";
    case ClaimId::E5b_m: return "E5b.m";
    case ClaimId::E6_n: return "E6.n";
    case ClaimId::E6_m: return "E6.m";
    case ClaimId::O1: return "O1";
    case ClaimId::O2: return "O2";
    case ClaimId::O3: return "O3";
    case ClaimId::O4: return "O4";
    case ClaimId::L1: return "L1";
    case ClaimId::CE: return "CE";
    case ClaimId::CO: return "CO";
    case ClaimId::F1: return "F1";
    case ClaimId::F2: return "F2";
    case ClaimId::F3: return "F3";
    case ClaimId::F4: return "F4";
    case ClaimId::F5: return "F5";
    case ClaimId::L2: return "L2";
  }
  return "?";
}

inline bool is_fermat_claim(ClaimId id) {
  return id == ClaimId::F1 || id == ClaimId::F2 || id == ClaimId::F3 || id == ClaimId::F4 || id == ClaimId::F5 ||
         id == ClaimId::L2;
}

/// Parses a comma-separated claim list. Besides the exact ids, "all",
/// "E5a", "E5b", "E5" and "E6" expand to their reading variants.
inline std::vector<ClaimId> parse_claims(const std::string& text) {
  std::set<ClaimId> chosen;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    start = comma == std::string::npos ? text.size() + 1 : comma + 1;
    if (token.empty()) continue;
    if (token == "all") {
      chosen.insert(std::begin(all_claims), std::end(all_claims));
    } else if (token == "structural") {
      chosen.insert(std::begin(structural_claims), std::end(structural_claims));
    } else if (token == "E5a") {
      chosen.insert({ClaimId::E5a_n, ClaimId::E5a_m});
    } else if (token == "E5b") {
      chosen.insert({ClaimId::E5b_n, ClaimId::E5b_m});
    } else if (token == "E5") {
      chosen.insert({ClaimId::E5a_n, ClaimId::E5a_m, ClaimId::E5b_n, ClaimId::E5b_m});
    } else if (token == "E6") {
      chosen.insert({ClaimId::E6_n, ClaimId::E6_m});
    } else {
      auto it = std::find_if(std::begin(all_claims), std::end(all_claims),
                             [&](ClaimId id) { return to_string(id) == token; });
      if (it == std::end(all_claims)) throw std::invalid_argument("unknown claim id '" + token + "'");
      chosen.insert(*it);
    }
  }
  if (chosen.empty()) throw std::invalid_argument("no claims selected");
  return {chosen.begin(), chosen.end()};
}

struct Violation {
  ClaimId claim{};
  /// Generator n for 4n^2 + 1 targets, Fermat index for F-claims.
  Natural n;
  Natural N;
  std::optional<std::pair<Natural, Natural>> pair;
  /// u for 4n^2 + 1 targets, lambda for F-claims.
  std::optional<Natural> u;
  std::optional<std::uint64_t> modulus;
  std::string detail;
};

struct ClaimReport {
  ClaimId claim{};
  std::string range;
  std::uint64_t instances = 0;
  std::vector<Violation> violations;
  std::string note;
};

namespace detail {

inline bool admissible(const QuadTarget& t, const Natural& u, std::uint64_t p) {
  const auto set = admissible_residues_parametric(t, p);
  return std::binary_search(set.begin(), set.end(), mod_u64(u, p));
}

inline std::uint64_t mod_small(const Natural& x, std::uint64_t m) { return mod_u64(x, m); }

/// Whether a claim that is evaluated per (pair, optional modulus) holds.
/// Returns nothing when the claim's condition does not apply (vacuous).
/// `residues` may carry the precomputed admissible set for E4/O4.
inline std::optional<bool> pair_claim_holds(ClaimId id, const QuadTarget& t, const Natural& a, const Natural& b,
                                            const Natural& u, std::optional<std::uint64_t> p,
                                            const std::vector<bool>* residues = nullptr) {
  const bool even = t.parity == Parity::Even;
  switch (id) {
    case ClaimId::E1:
    case ClaimId::O1: {
      if (even != (id == ClaimId::E1)) return std::nullopt;
      Candidate c = try_candidate(t, u);
      return c.root && c.center - *c.root == a && c.center + *c.root == b;
    }
    case ClaimId::E2:
    case ClaimId::O2:
      if (even != (id == ClaimId::E2)) return std::nullopt;
      return u_interval(t).contains(u);
    case ClaimId::E3:
      if (!even || !p || *p % 4 != 3) return std::nullopt;
      return mod_small(u, *p) != 0;
    case ClaimId::O3:
      if (even || !p || *p % 4 != 3) return std::nullopt;
      return mod_small(4 * u + 1, *p) != 0;
    case ClaimId::E4:
    case ClaimId::O4: {
      if (even != (id == ClaimId::E4) || !p || *p < 3 || mod_small(t.N, *p) == 0) return std::nullopt;
      if (residues) return (*residues)[mod_small(u, *p)];
      return admissible(t, u, *p);
    }
    case ClaimId::E5a_n:
    case ClaimId::E5b_n:
    case ClaimId::E5a_m:
    case ClaimId::E5b_m: {
      if (!even) return std::nullopt;
      const Natural& cond = (id == ClaimId::E5a_n || id == ClaimId::E5b_n) ? t.n : t.m;
      if (mod_small(cond, 2) != 0) return std::nullopt;
      const bool is_two = mod_small(u, 4) == 2;
      return (id == ClaimId::E5a_n || id == ClaimId::E5a_m) ? is_two : !is_two;
    }
    case ClaimId::E6_n:
    case ClaimId::E6_m: {
      if (!even) return std::nullopt;
      const Natural& cond = id == ClaimId::E6_n ? t.n : t.m;
      if (mod_small(cond, 3) == 0) return std::nullopt;
      return mod_small(u, 3) == 1;
    }
    case ClaimId::L1: {
      if (!even) return std::nullopt;
      if (mod_small(a, 4) != 1) return false;
      const Natural bb = (a - 1) / 4;
      return (t.m * t.m + bb * bb) % a == 0 && a * a <= t.N && a < t.N;
    }
    default: return std::nullopt;
  }
}

inline bool uses_modulus(ClaimId id) {
  return id == ClaimId::E3 || id == ClaimId::O3 || id == ClaimId::E4 || id == ClaimId::O4 || id == ClaimId::F3;
}

inline std::string describe(ClaimId id, const Natural& u, std::optional<std::uint64_t> p) {
  const std::string us = u.str();
  const std::string ps = p ? std::to_string(*p) : "";
  switch (id) {
    case ClaimId::E1: return "(8u+1)^2 - N is not the square of the factor gap at u = " + us;
    case ClaimId::O1: return "(8u+3)^2 - N is not the square of the factor gap at u = " + us;
    case ClaimId::E2:
    case ClaimId::O2: return "u = " + us + " lies outside the candidate interval";
    case ClaimId::E3: return "u = " + us + " = 0 (mod " + ps + ")";
    case ClaimId::O3: return "4u + 1 = " + Natural(4 * u + 1).str() + " = 0 (mod " + ps + ")";
    case ClaimId::E4:
    case ClaimId::O4: return "u mod " + ps + " is not an admissible residue";
    case ClaimId::E5a_n:
    case ClaimId::E5a_m: return "u = " + us + " = " + std::to_string(mod_small(u, 4)) + " (mod 4), expected 2";
    case ClaimId::E5b_n:
    case ClaimId::E5b_m: return "u = " + us + " = 2 (mod 4)";
    case ClaimId::E6_n:
    case ClaimId::E6_m: return "u = " + us + " = " + std::to_string(mod_small(u, 3)) + " (mod 3), expected 1";
    case ClaimId::L1: return "small factor fails m^2 + b^2 = 0 (mod 4b + 1) or exceeds sqrt N";
    default: return "";
  }
}

inline std::string range_text(ClaimId id, const Natural& n_min, const Natural& n_max, std::uint64_t prime_bound) {
  std::string text = "n in [" + n_min.str() + ", " + n_max.str() + "]";
  if (uses_modulus(id)) text += ", primes <= " + std::to_string(prime_bound);
  return text;
}

// Evaluates all selected non-Fermat claims on one generator n, appending to
// the per-claim accumulators (same order as `claims`).
inline void audit_one(const Natural& n, const std::vector<ClaimId>& claims, const std::vector<std::uint64_t>& primes,
                      std::vector<ClaimReport>& acc) {
  const QuadTarget t = make_target(n);
  const std::vector<Natural> factors = oracle_factorize(t.N);
  const bool composite = factors.size() > 1;
  const bool even = t.parity == Parity::Even;

  for (std::size_t i = 0; i < claims.size(); ++i) {
    const ClaimId id = claims[i];
    if (id != ClaimId::CE && id != ClaimId::CO) continue;
    if (even != (id == ClaimId::CE)) continue;
    ++acc[i].instances;
    std::optional<Candidate> w = compositeness_witness(t);
    if (w.has_value() == composite) continue;
    Violation v{id, n, t.N, std::nullopt, std::nullopt, std::nullopt, ""};
    if (w) {
      v.u = w->u;
      v.pair = std::make_pair(Natural(w->center - *w->root), Natural(w->center + *w->root));
      v.detail = "square discriminant in the interval but N is prime";
    } else {
      auto pairs = pairs_from_factors(t.N, factors);
      v.pair = pairs.front();
      v.detail = "N is composite but no u in the interval has a square discriminant";
    }
    acc[i].violations.push_back(std::move(v));
  }
  if (!composite) return;

  // Admissible residue tables, built lazily per modulus.
  std::map<std::uint64_t, std::vector<bool>> residue_tables;
  auto table_for = [&](std::uint64_t p) -> const std::vector<bool>& {
    auto it = residue_tables.find(p);
    if (it != residue_tables.end()) return it->second;
    std::vector<bool> table(p, false);
    for (std::uint64_t r : admissible_residues_parametric(t, p)) table[r] = true;
    return residue_tables.emplace(p, std::move(table)).first->second;
  };

  for (const auto& [a, b] : pairs_from_factors(t.N, factors)) {
    std::optional<Natural> u;
    try {
      u = derive_u(t, a, b);
    } catch (const internal_error& e) {
      // Center off the 8u + offset progression: the form claims fail outright.
      for (std::size_t i = 0; i < claims.size(); ++i) {
        if (claims[i] != (even ? ClaimId::E1 : ClaimId::O1)) continue;
        ++acc[i].instances;
        acc[i].violations.push_back({claims[i], n, t.N, std::make_pair(a, b), std::nullopt, std::nullopt, e.what()});
      }
      continue;
    }
    for (std::size_t i = 0; i < claims.size(); ++i) {
      const ClaimId id = claims[i];
      if (id == ClaimId::CE || id == ClaimId::CO || is_fermat_claim(id)) continue;
      if (!uses_modulus(id)) {
        std::optional<bool> ok = pair_claim_holds(id, t, a, b, *u, std::nullopt);
        if (!ok) continue;
        ++acc[i].instances;
        if (!*ok) acc[i].violations.push_back({id, n, t.N, std::make_pair(a, b), *u, std::nullopt, describe(id, *u, std::nullopt)});
        continue;
      }
      for (std::uint64_t p : primes) {
        const bool needs_table = (id == ClaimId::E4 || id == ClaimId::O4) && t.N % p != 0;
        const std::vector<bool>* table = needs_table ? &table_for(p) : nullptr;
        std::optional<bool> ok = pair_claim_holds(id, t, a, b, *u, p, table);
        if (!ok) continue;
        ++acc[i].instances;
        if (!*ok) acc[i].violations.push_back({id, n, t.N, std::make_pair(a, b), *u, p, describe(id, *u, p)});
      }
    }
  }
}

}  // namespace detail

/// Audits every selected claim about 4n^2 + 1 over n in [n_min, n_max], with
/// congruence claims checked for every odd prime <= prime_bound. Fermat-number
/// claims in `claims` are ignored here (see audit_fermat). Output is ordered by
/// claim id and, within a report, by ascending n; it does not depend on
/// `workers`.
inline std::vector<ClaimReport> audit_claims(const Natural& n_min, const Natural& n_max, const std::vector<ClaimId>& claims,
                                             std::uint64_t prime_bound, unsigned workers = 1) {
  if (n_min < 1) throw std::invalid_argument("audit_claims: n_min must be at least 1");
  if (n_min > n_max) throw std::invalid_argument("audit_claims: empty range");
  std::vector<ClaimId> selected;
  for (ClaimId id : claims)
    if (!is_fermat_claim(id)) selected.push_back(id);
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  const std::vector<std::uint64_t> primes = default_filter_primes(prime_bound);
  auto fresh = [&] {
    std::vector<ClaimReport> reports;
    for (ClaimId id : selected) reports.push_back({id, detail::range_text(id, n_min, n_max, prime_bound), 0, {}, ""});
    return reports;
  };

  const Natural total = n_max - n_min + 1;
  if (workers < 1) workers = 1;
  if (total < workers) workers = static_cast<unsigned>(total);
  std::vector<std::vector<ClaimReport>> parts(workers, fresh());
  auto run_block = [&](unsigned w) {
    const Natural lo = n_min + total * w / workers;
    const Natural hi = n_min + total * (w + 1) / workers;  // exclusive
    for (Natural n = lo; n < hi; ++n) detail::audit_one(n, selected, primes, parts[w]);
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_block, w);
    for (auto& th : threads) th.join();
  }

  std::vector<ClaimReport> merged = fresh();
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < merged.size(); ++i) {
      merged[i].instances += part[i].instances;
      merged[i].violations.insert(merged[i].violations.end(), part[i].violations.begin(), part[i].violations.end());
    }
  }
  return merged;
}

// ---------------------------------------------------------------------------
// Fermat numbers

/// Smallest prime factor of F_n for indices whose complete factorization is
/// two primes (the cofactor is recomputed and primality-checked on use).
inline std::optional<Natural> known_fermat_factor(unsigned index_n) {
  switch (index_n) {
    case 5: return Natural("641");
    case 6: return Natural("274177");
    case 7: return Natural("59649589127497217");
    case 8: return Natural("1238926361552897");
    default: return std::nullopt;
  }
}

struct FermatFactorization {
  std::vector<Natural> primes;  // ascending, with multiplicity
  bool complete = false;
  std::string source;
};

/// Complete factorization of F_n when it is known or cheaply found: F_0..F_4
/// are prime, F_5..F_8 come from the table, and other indices try a Lucas-form
/// search over s <= s_budget whose cofactor must come out prime.
inline FermatFactorization factor_fermat(unsigned index_n, std::uint64_t s_budget = 10000) {
  FermatFactorization out;
  const FermatTarget t = make_fermat(index_n);
  if (index_n <= 4) {
    if (!is_prime(t.value)) throw internal_error("F_" + std::to_string(index_n) + " expected prime");
    out.primes = {t.value};
    out.complete = true;
    out.source = "prime";
    return out;
  }
  std::vector<Natural> found;
  if (std::optional<Natural> p = known_fermat_factor(index_n)) {
    found.push_back(*p);
    out.source = "known factor table";
  } else {
    for (const auto& c : lucas_search(t, Natural(s_budget)))
      if (is_prime(c.divisor)) found.push_back(c.divisor);
    out.source = "Lucas-form search, s <= " + std::to_string(s_budget);
  }
  Natural rest = t.value;
  for (const Natural& p : found) {
    if (!is_prime(p) || rest % p != 0) throw internal_error("bad Fermat factor " + p.str());
    while (rest % p == 0) {
      out.primes.push_back(p);
      rest /= p;
    }
  }
  if (rest > 1) {
    if (!is_prime(rest)) return out;  // incomplete
    out.primes.push_back(rest);
  }
  std::sort(out.primes.begin(), out.primes.end());
  out.complete = !found.empty();
  return out;
}

namespace detail {

inline std::optional<bool> fermat_claim_holds(ClaimId id, const FermatTarget& t, const Natural& p, const Natural& q,
                                              const Natural& lambda, std::optional<std::uint64_t> modulus) {
  switch (id) {
    case ClaimId::F1: {
      const Natural center = t.center_step * lambda + 1;
      std::optional<Natural> root = is_perfect_square(Integer(center * center) - t.value);
      return root && center - *root == p && center + *root == q;
    }
    case ClaimId::F2:
      if (t.index_n < 5) return std::nullopt;
      return lambda_interval(t).contains(lambda);
    case ClaimId::F3:
      if (!modulus || *modulus % 4 != 3) return std::nullopt;
      return mod_u64(lambda, *modulus) != 0;
    case ClaimId::F4: return mod_u64(lambda, 4) != 2;
    case ClaimId::F5: return mod_u64(lambda, 3) == 1;
    case ClaimId::L2: {
      if ((p - 1) % t.divisor_step != 0) return false;
      const Natural s = (p - 1) / t.divisor_step;
      return s >= 1 && s <= lucas_s_bound(t) && lemma31_check(t, s).divides();
    }
    default: return std::nullopt;
  }
}

inline std::string describe_fermat(ClaimId id, const Natural& lambda, std::optional<std::uint64_t> modulus) {
  const std::string ls = lambda.str();
  switch (id) {
    case ClaimId::F1: return "center at lambda = " + ls + " does not give a square discriminant";
    case ClaimId::F2: return "lambda = " + ls + " lies outside the lambda interval";
    case ClaimId::F3: return "lambda = " + ls + " = 0 (mod " + std::to_string(modulus.value_or(0)) + ")";
    case ClaimId::F4: return "lambda = " + ls + " = 2 (mod 4)";
    case ClaimId::F5: return "lambda = " + ls + " = " + std::to_string(mod_u64(lambda, 3)) + " (mod 3), expected 1";
    case ClaimId::L2: return "small factor is not 2^(n+2) s + 1 with s below the bound satisfying the congruence";
    default: return "";
  }
}

}  // namespace detail

/// Audits the Fermat-number claims (F1-F5, L2) on each index whose complete
/// factorization is available. Indices below 5 are evaluated as labelled
/// out-of-precondition probes; unavailable factorizations are skipped with a
/// note.
inline std::vector<ClaimReport> audit_fermat(const std::vector<unsigned>& indices, const std::vector<ClaimId>& claims,
                                             std::uint64_t prime_bound) {
  std::vector<ClaimId> selected;
  for (ClaimId id : claims)
    if (is_fermat_claim(id)) selected.push_back(id);
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  std::string range;
  for (unsigned idx : indices) range += (range.empty() ? "F_" : ", F_") + std::to_string(idx);
  std::vector<ClaimReport> reports;
  for (ClaimId id : selected)
    reports.push_back({id, range + (detail::uses_modulus(id) ? ", primes <= " + std::to_string(prime_bound) : ""), 0, {}, ""});

  std::vector<std::uint64_t> primes = primes_up_to(prime_bound);
  std::vector<std::string> notes;
  for (unsigned idx : indices) {
    if (idx < 4) {
      notes.push_back("F_" + std::to_string(idx) + ": below every precondition, skipped");
      continue;
    }
    const FermatTarget t = make_fermat(idx);
    const FermatFactorization fac = factor_fermat(idx);
    if (!fac.complete) {
      notes.push_back("F_" + std::to_string(idx) + ": factorization unavailable, skipped");
      continue;
    }
    auto pairs = pairs_from_factors(t.value, fac.primes);
    if (idx < 5)
      notes.push_back("F_" + std::to_string(idx) + ": out-of-precondition probe (lambda claims require n >= 5); " +
                      std::to_string(pairs.size()) + " proper pairs");
    for (const auto& [p, q] : pairs) {
      const Natural lambda = lambda_of_pair(t, p, q);
      for (auto& report : reports) {
        const ClaimId id = report.claim;
        std::vector<std::optional<std::uint64_t>> moduli{std::nullopt};
        if (id == ClaimId::F3) moduli.assign(primes.begin(), primes.end());
        for (auto modulus : moduli) {
          std::optional<bool> ok = detail::fermat_claim_holds(id, t, p, q, lambda, modulus);
          if (!ok) continue;
          ++report.instances;
          if (!*ok)
            report.violations.push_back({id, Natural(idx), t.value, std::make_pair(p, q), lambda, modulus,
                                         detail::describe_fermat(id, lambda, modulus)});
        }
      }
    }
  }
  std::string joined;
  for (const auto& note : notes) joined += (joined.empty() ? "" : "; ") + note;
  for (auto& report : reports) report.note = joined;
  return reports;
}

/// Replays a recorded violation from its own fields and confirms that the
/// claim genuinely fails there. False means the ledger is inconsistent.
inline bool reverify(const Violation& v) {
  try {
    if (is_fermat_claim(v.claim)) {
      if (v.n > 63) return false;
      const FermatTarget t = make_fermat(static_cast<unsigned>(v.n));
      if (t.value != v.N || !v.pair || !v.u) return false;
      const auto& [p, q] = *v.pair;
      if (p * q != t.value || lambda_of_pair(t, p, q) != *v.u) return false;
      std::optional<bool> ok = detail::fermat_claim_holds(v.claim, t, p, q, *v.u, v.modulus);
      return ok.has_value() && !*ok;
    }

    const QuadTarget t = make_target(v.n);
    if (t.N != v.N) return false;
    if (v.claim == ClaimId::CE || v.claim == ClaimId::CO) {
      if ((t.parity == Parity::Even) != (v.claim == ClaimId::CE)) return false;
      const bool composite = !is_prime(t.N);
      return compositeness_witness(t).has_value() != composite;
    }
    if (!v.pair) return false;
    const auto& [a, b] = *v.pair;
    if (a <= 1 || a > b || a * b != t.N) return false;
    if (!v.u) {
      // Recorded because the center is off the 8u + offset progression.
      try {
        derive_u(t, a, b);
        return false;
      } catch (const internal_error&) {
        return true;
      }
    }
    if (derive_u(t, a, b) != *v.u) return false;
    if (detail::uses_modulus(v.claim) && (!v.modulus || !is_prime(*v.modulus))) return false;
    std::optional<bool> ok = detail::pair_claim_holds(v.claim, t, a, b, *v.u, v.modulus);
    return ok.has_value() && !*ok;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace quadfermat
