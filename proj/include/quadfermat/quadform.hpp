#pragma once

// Fermat factorization specialised to N = 4n^2 + 1.
//
// Every proper factor pair (a, b) of such an N has a, b = 1 (mod 4), so the
// Fermat center (a + b)/2 lies on one of two arithmetic progressions:
//   n even:  center = 8u + 1
//   n odd:   center = 8u + 3
// and only u in [ (ceil_sqrt(N) - offset)/8, (N - 5)/40 ) resp.
// [ ..., (N - 15)/40 ) need to be tried. For each odd prime p not dividing N
// a true witness u must make x^2 - 2(8u+offset)x + N split mod p, which gives
// an admissible residue set for u mod p; that is the residue sieve here.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "quadfermat/arith.hpp"
#include "quadfermat/center_scan.hpp"

namespace quadfermat {

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// Center progression c(u) = 8u + offset.
struct CenterForm {
  static constexpr unsigned step = 8;
  unsigned offset = 1;

  Natural center(const Natural& u) const { return u * step + offset; }
};

struct QuadTarget {
  Natural n;
  Natural N;
  Parity parity = Parity::Even;
  /// n = 2m (even) or n = 2m + 1 (odd).
  Natural m;

  CenterForm form() const { return CenterForm{parity == Parity::Even ? 1U : 3U}; }
  unsigned offset() const { return form().offset; }
};

inline QuadTarget make_target(const Natural& n) {
  if (n < 1) throw std::invalid_argument("make_target: n must be at least 1 (N = 1 has no proper factors)");
  QuadTarget t;
  t.n = n;
  t.N = 4 * n * n + 1;
  t.parity = boost::multiprecision::bit_test(n, 0) ? Parity::Odd : Parity::Even;
  t.m = n >> 1;
  return t;
}

/// Recovers n from N when N = 4n^2 + 1, and nothing otherwise.
inline std::optional<QuadTarget> target_from_value(const Natural& N) {
  if (N < 5 || (N - 1) % 4 != 0) return std::nullopt;
  Natural n = isqrt(Natural((N - 1) / 4));
  if (4 * n * n + 1 != N) return std::nullopt;
  return make_target(n);
}

struct Candidate {
  Natural u;
  Natural center;
  Integer disc;
  std::optional<Natural> root;
};

/// A validated proper split N = a * b with a <= b.
struct FactorPair {
  Natural a;
  Natural b;
  Natural witness_u;
  Natural d;

  friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

/// Integers u with u_min <= u < u_sup.
struct UInterval {
  Natural u_min;
  Fraction u_sup;

  /// Largest admissible u, or u_min - 1 when the range is empty.
  Integer u_last() const { return u_sup.ceil() - 1; }
  bool empty() const { return u_min > u_last(); }
  Natural size() const { return empty() ? Natural(0) : Natural(u_last() - u_min + 1); }
  bool contains(const Natural& u) const { return u >= u_min && u < u_sup; }
};

inline UInterval u_interval(const QuadTarget& t) {
  const unsigned offset = t.offset();
  Natural lo = Fraction(Integer(ceil_sqrt(t.N)) - offset, 8).ceil();
  if (lo < 1) lo = 1;
  Integer upper_num = Integer(t.N) - (t.parity == Parity::Even ? 5 : 15);
  return UInterval{lo, Fraction(upper_num, 40)};
}

inline Candidate try_candidate(const QuadTarget& t, const Natural& u) {
  Candidate c;
  c.u = u;
  c.center = t.form().center(u);
  c.disc = Integer(c.center * c.center) - t.N;
  c.root = is_perfect_square(c.disc);
  return c;
}

inline FactorPair pair_from_candidate(const QuadTarget& t, const Candidate& c) {
  if (!c.root) throw std::invalid_argument("pair_from_candidate: discriminant is not a perfect square");
  if (c.center != t.form().center(c.u)) throw std::invalid_argument("pair_from_candidate: center does not match u");
  const Natural& d = *c.root;
  if (d * d != c.disc) throw std::invalid_argument("pair_from_candidate: root does not square to the discriminant");
  if (c.center <= d + 1)
    throw std::invalid_argument("pair_from_candidate: trivial split (center - root = 1), no proper factor");
  FactorPair pair{c.center - d, c.center + d, c.u, d};
  if (pair.a * pair.b != t.N) throw std::invalid_argument("pair_from_candidate: factors do not multiply to N");
  if (pair.a % 4 != 1 || pair.b % 4 != 1) throw internal_error("pair_from_candidate: factor not congruent to 1 mod 4");
  return pair;
}

namespace detail {

inline std::uint64_t clamp_steps(const Natural& span) {
  constexpr std::uint64_t most = std::numeric_limits<std::uint64_t>::max();
  return span > most ? most : static_cast<std::uint64_t>(span);
}

inline void check_filter_prime(const QuadTarget& t, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("filter modulus must be an odd prime, got " + std::to_string(p));
  if (t.N % p == 0) throw std::invalid_argument("filter prime " + std::to_string(p) + " divides N");
}

}  // namespace detail

/// { (x^-1 N + x - 2*offset) / 16 mod p : x in 1..p-1 }, ascending.
inline std::vector<std::uint64_t> admissible_residues_parametric(const QuadTarget& t, std::uint64_t p) {
  detail::check_filter_prime(t, p);
  const std::uint64_t n_mod = detail::mod_u64(t.N, p);
  const std::uint64_t inv16 = mod_inv(16, p);
  const std::uint64_t twice_offset = 2 * t.offset() % p;
  std::vector<bool> hit(p, false);
  for (std::uint64_t x = 1; x < p; ++x) {
    std::uint64_t value = (detail::mul_mod(mod_inv(x, p), n_mod, p) + x + p - twice_offset) % p;
    hit[detail::mul_mod(value, inv16, p)] = true;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < p; ++r)
    if (hit[r]) out.push_back(r);
  return out;
}

/// { r in 0..p-1 : ((8r + offset)^2 - N / p) != -1 }, ascending.
inline std::vector<std::uint64_t> admissible_residues_qr(const QuadTarget& t, std::uint64_t p) {
  detail::check_filter_prime(t, p);
  const std::uint64_t n_mod = detail::mod_u64(t.N, p);
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < p; ++r) {
    std::uint64_t c = (8 * r + t.offset()) % p;
    Integer disc = Integer(detail::mul_mod(c, c, p)) - n_mod;
    if (legendre(disc, p) != -1) out.push_back(r);
  }
  return out;
}

/// Odd primes <= bound; the default sieve moduli.
inline std::vector<std::uint64_t> default_filter_primes(std::uint64_t bound = 97) {
  std::vector<std::uint64_t> primes = primes_up_to(bound);
  if (!primes.empty() && primes.front() == 2) primes.erase(primes.begin());
  return primes;
}

struct SieveOptions {
  std::vector<std::uint64_t> filter_primes;
  /// Also skip u = 0 (mod p) (even n) or 4u + 1 = 0 (mod p) (odd n) for
  /// filter primes p = 3 (mod 4). Not known to be sound.
  bool use_paper_filters = false;
  bool want_all = false;
  /// In first-hit mode, answer with (p, N/p) for the first filter prime
  /// dividing N before enumerating. Filter primes that divide N are always
  /// dropped from the residue sieve.
  bool trial_divide_first = true;
  /// Stop after this many u values have been visited (0 = no limit).
  std::uint64_t max_steps = 0;
};

struct SieveResult {
  std::vector<FactorPair> pairs;
  /// u values that reached the perfect-square test.
  std::uint64_t candidates_examined = 0;
  std::uint64_t skipped_qr = 0;
  std::uint64_t skipped_paper = 0;
  /// Set when the answer came from trial division by a filter prime.
  std::optional<std::uint64_t> trial_divisor;
  bool budget_exhausted = false;

  /// No pair and the interval was fully covered.
  bool prime_verdict() const { return pairs.empty() && !budget_exhausted; }
};

/// u from a + b: center = (a + b)/2 = 8u + offset.
inline Natural derive_u(const QuadTarget& t, const Natural& a, const Natural& b);

namespace detail {

inline FactorPair pair_from_divisor(const QuadTarget& t, const Natural& p) {
  Natural a = p, b = t.N / p;
  if (a > b) std::swap(a, b);
  Natural u = derive_u(t, a, b);
  return FactorPair{a, b, u, (b - a) / 2};
}

// Per-prime sieve state: the verdict for each residue of u mod p, and the
// running residue of the current u.
struct ResidueFilter {
  enum Verdict : std::uint8_t { keep, qr_reject, paper_reject };
  std::uint64_t p = 0;
  std::vector<Verdict> table;
  std::uint64_t current = 0;
};

inline ResidueFilter make_residue_filter(const QuadTarget& t, std::uint64_t p, bool paper, const Natural& u_start) {
  ResidueFilter f;
  f.p = p;
  f.table.assign(p, ResidueFilter::qr_reject);
  for (std::uint64_t r : admissible_residues_qr(t, p)) f.table[r] = ResidueFilter::keep;
  if (paper && p % 4 == 3) {
    // even: u = 0; odd: 4u + 1 = 0, i.e. u = -1/4.
    std::uint64_t banned = t.parity == Parity::Even ? 0 : (p - mod_inv(4, p)) % p;
    if (f.table[banned] == ResidueFilter::keep) f.table[banned] = ResidueFilter::paper_reject;
  }
  f.current = mod_u64(u_start, p);
  return f;
}

}  // namespace detail

/// Enumerates u over the interval in ascending order and returns validated
/// factor pairs (the first, or all with want_all). An empty pair list with
/// prime_verdict() means no witness exists in the interval, i.e. N is prime,
/// provided only the residue sieve (not use_paper_filters) pruned.
inline SieveResult sieve_enumerate(const QuadTarget& t, const SieveOptions& options) {
  SieveResult result;
  const UInterval range = u_interval(t);

  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : options.filter_primes) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("filter primes must be odd primes, got " + std::to_string(p));
    if (t.N % p != 0) {
      primes.push_back(p);
      continue;
    }
    if (options.trial_divide_first && !options.want_all && p < t.N && !result.trial_divisor) {
      result.trial_divisor = p;
      result.pairs.push_back(detail::pair_from_divisor(t, Natural(p)));
      return result;
    }
  }
  if (range.empty()) return result;

  std::vector<detail::ResidueFilter> filters;
  filters.reserve(primes.size());
  for (std::uint64_t p : primes) filters.push_back(detail::make_residue_filter(t, p, options.use_paper_filters, range.u_min));

  std::uint64_t steps = detail::clamp_steps(range.size());
  if (options.max_steps != 0 && options.max_steps < steps) {
    steps = options.max_steps;
    result.budget_exhausted = true;
  }

  const CenterForm form = t.form();
  CenterScan scan(form.center(range.u_min), Natural(CenterForm::step), t.N);
  for (std::uint64_t k = 0; k < steps; ++k, scan.advance()) {
    auto verdict = detail::ResidueFilter::keep;
    for (auto& f : filters) {
      auto v = f.table[f.current];
      if (v != detail::ResidueFilter::keep && verdict == detail::ResidueFilter::keep) verdict = v;
      if (++f.current == f.p) f.current = 0;
    }
    if (verdict == detail::ResidueFilter::qr_reject) {
      ++result.skipped_qr;
      continue;
    }
    if (verdict == detail::ResidueFilter::paper_reject) {
      ++result.skipped_paper;
      continue;
    }
    ++result.candidates_examined;
    std::optional<Natural> root = scan.root();
    if (!root) continue;
    Candidate c{range.u_min + k, scan.center(), scan.disc(), std::move(root)};
    try {
      result.pairs.push_back(pair_from_candidate(t, c));
    } catch (const std::invalid_argument& e) {
      throw internal_error(std::string("witness inside the interval failed validation: ") + e.what());
    }
    if (!options.want_all) {
      result.budget_exhausted = false;
      return result;
    }
  }
  return result;
}

/// First u in the interval whose discriminant is a perfect square, scanning
/// without any filter. Its existence certifies that N is composite.
inline std::optional<Candidate> compositeness_witness(const QuadTarget& t) {
  const UInterval range = u_interval(t);
  if (range.empty()) return std::nullopt;
  const std::uint64_t steps = detail::clamp_steps(range.size());
  const CenterForm form = t.form();
  CenterScan scan(form.center(range.u_min), Natural(CenterForm::step), t.N);
  for (std::uint64_t k = 0; k < steps; ++k, scan.advance()) {
    if (std::optional<Natural> root = scan.root()) return Candidate{range.u_min + k, scan.center(), scan.disc(), root};
  }
  return std::nullopt;
}

/// u from the factor parameters rather than the center: with a = 4a' + 1,
/// b = 4b' + 1, even n gives u = (m^2 + a'^2)/(4a' + 1) and odd n gives
/// u = m^2 + m - a'b'. Empty when the value is not an integer.
inline std::optional<Natural> u_from_factor_form(const QuadTarget& t, const Natural& a, const Natural& b) {
  if (a % 4 != 1 || b % 4 != 1) return std::nullopt;
  const Natural ap = (a - 1) / 4, bp = (b - 1) / 4;
  if (t.parity == Parity::Even) {
    Natural num = t.m * t.m + ap * ap;
    if (num % a != 0) return std::nullopt;
    return Natural(num / a);
  }
  Integer u = Integer(t.m * t.m + t.m) - Integer(ap * bp);
  if (u < 0 || ap + bp != 4 * u + 1) return std::nullopt;
  return Natural(u);
}

inline Natural derive_u(const QuadTarget& t, const Natural& a, const Natural& b) {
  if (a <= 1 || a > b) throw std::invalid_argument("derive_u: need 1 < a <= b");
  if (a * b != t.N) throw std::invalid_argument("derive_u: a * b != N");
  const Natural sum = a + b;
  if (sum % 2 != 0) throw internal_error("derive_u: a + b is odd for odd N");
  const Natural center = sum / 2;
  if (center < t.offset() || (center - t.offset()) % 8 != 0)
    throw internal_error("derive_u: center " + center.str() + " is not 8u + " + std::to_string(t.offset()));
  Natural u = (center - t.offset()) / 8;
  std::optional<Natural> alt = u_from_factor_form(t, a, b);
  if (!alt || *alt != u) throw internal_error("derive_u: factor-form value disagrees with center value");
  return u;
}

}  // namespace quadfermat
