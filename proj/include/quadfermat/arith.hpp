#pragma once

// Integer utilities shared by the whole toolkit: exact square roots,
// perfect-square detection, small-prime modular arithmetic, primality,
// and exact fractions.

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quadfermat {

/// Unbounded integer. Used as a natural number everywhere except where a
/// signed quantity (a discriminant, a fraction numerator) is called for.
using Natural = boost::multiprecision::cpp_int;
using Integer = boost::multiprecision::cpp_int;

/// Raised when an internal identity that the mathematics guarantees fails.
/// Seeing one means a bug, never bad input.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const Integer& x) { return x.str(); }

/// Parses a non-negative decimal integer of any length.
inline Natural parse_natural(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw std::invalid_argument("not a non-negative decimal integer: '" + std::string(text) + "'");
  return Natural(std::string(text));
}

namespace detail {

inline std::size_t bit_length(std::uint64_t x) { return static_cast<std::size_t>(std::bit_width(x)); }

inline std::size_t bit_length(const Natural& x) {
  return x.is_zero() ? 0 : static_cast<std::size_t>(boost::multiprecision::msb(x)) + 1;
}

/// Floor of x mod m for possibly negative x.
inline std::uint64_t mod_u64(const Integer& x, std::uint64_t m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Quadratic-residue tables for the perfect-square pre-screen. A square is a
// square modulo every modulus, so a miss in any table is a proof of
// non-squareness. The product 64*63*65*11 lets a caller carry a single
// residue and still consult all four tables.
inline constexpr std::uint64_t screen_modulus = 64ULL * 63ULL * 65ULL * 11ULL;

template <std::size_t M>
constexpr std::array<bool, M> square_table() {
  std::array<bool, M> table{};
  for (std::size_t i = 0; i < M; ++i) table[(i * i) % M] = true;
  return table;
}

inline constexpr auto squares_mod_64 = square_table<64>();
inline constexpr auto squares_mod_63 = square_table<63>();
inline constexpr auto squares_mod_65 = square_table<65>();
inline constexpr auto squares_mod_11 = square_table<11>();

/// False only when x (given as x mod screen_modulus) cannot be a square.
inline bool may_be_square(std::uint64_t residue) {
  return squares_mod_64[residue % 64] && squares_mod_63[residue % 63] && squares_mod_65[residue % 65] &&
         squares_mod_11[residue % 11];
}

}  // namespace detail

/// Floor square root by integer Newton iteration.
template <class Int>
Int isqrt(const Int& x) {
  if (x < 2) return x;
  // 2^ceil(bits/2) is always >= sqrt(x), so the iteration decreases monotonically.
  Int r = Int(1) << ((detail::bit_length(x) + 1) / 2);
  while (true) {
    Int next = (r + x / r) >> 1;
    if (next >= r) break;
    r = next;
  }
  assert(r * r <= x && (r + 1) * (r + 1) > x);
  return r;
}

/// Smallest r with r*r >= x.
template <class Int>
Int ceil_sqrt(const Int& x) {
  Int r = isqrt(x);
  return r * r == x ? r : r + 1;
}

/// Returns sqrt(x) when x is a perfect square. Negative inputs are never squares.
inline std::optional<Natural> is_perfect_square(const Integer& x, bool prescreen = true) {
  if (x < 0) return std::nullopt;
  if (prescreen && !detail::may_be_square(detail::mod_u64(x, detail::screen_modulus))) return std::nullopt;
  Natural r = isqrt(x);
  if (r * r != x) return std::nullopt;
  return r;
}

/// Inverse of a modulo an odd prime p.
inline std::uint64_t mod_inv(const Integer& a, std::uint64_t p) {
  std::uint64_t reduced = detail::mod_u64(a, p);
  if (reduced == 0) throw std::domain_error("mod_inv: argument is divisible by the modulus " + std::to_string(p));
  // Extended Euclid on signed 128-bit to stay clear of overflow for any 64-bit p.
  __int128 old_r = reduced, r = p, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("mod_inv: argument not invertible modulo " + std::to_string(p));
  __int128 inv = old_s % static_cast<__int128>(p);
  if (inv < 0) inv += p;
  return static_cast<std::uint64_t>(inv);
}

/// Legendre symbol (a/p) for an odd prime p, via the Jacobi reciprocity algorithm.
inline int legendre(const Integer& a, std::uint64_t p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("legendre: modulus must be an odd prime");
  std::uint64_t x = detail::mod_u64(a, p);
  std::uint64_t m = p;
  int sign = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      std::uint64_t r = m % 8;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(x, m);
    if (x % 4 == 3 && m % 4 == 3) sign = -sign;
    x %= m;
  }
  return m == 1 ? sign : 0;
}

/// Sieve of Eratosthenes.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

namespace detail {

inline bool strong_probable_prime(std::uint64_t n, std::uint64_t base) {
  base %= n;
  if (base == 0) return true;
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  std::uint64_t x = pow_mod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

inline bool strong_probable_prime(const Natural& n, const Natural& base) {
  Natural d = n - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  Natural x = boost::multiprecision::powm(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

// The first twelve primes are a deterministic witness set for n < 3.3e24,
// in particular for every 64-bit input.
inline constexpr std::array<std::uint64_t, 12> fixed_witnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace detail

/// Exact for 64-bit inputs.
inline bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t p : detail::fixed_witnesses) {
    if (x == p) return true;
    if (x % p == 0) return false;
  }
  return std::all_of(detail::fixed_witnesses.begin(), detail::fixed_witnesses.end(),
                     [x](std::uint64_t base) { return detail::strong_probable_prime(x, base); });
}

/// Exact below 2^64. Above, a strong-probable-prime test with the twelve
/// fixed witnesses followed by `extra_rounds` bases drawn from an mt19937_64
/// seeded with the low 64 bits of x, so the verdict is reproducible.
inline bool is_prime(const Natural& x, unsigned extra_rounds = 16) {
  if (x <= std::numeric_limits<std::uint64_t>::max()) return is_prime(static_cast<std::uint64_t>(x));
  for (std::uint64_t p : detail::fixed_witnesses)
    if (x % p == 0) return false;
  for (std::uint64_t base : detail::fixed_witnesses)
    if (!detail::strong_probable_prime(x, Natural(base))) return false;
  std::mt19937_64 rng(static_cast<std::uint64_t>(x & std::numeric_limits<std::uint64_t>::max()));
  for (unsigned i = 0; i < extra_rounds; ++i) {
    // Bases in [2, 2^64); reduced mod x inside the test is unnecessary since x > 2^64.
    Natural base = Natural(rng() | 2U);
    if (!detail::strong_probable_prime(x, base)) return false;
  }
  return true;
}

/// An exact fraction num/den with den > 0. Used for interval endpoints that
/// are not integers; no floating point is involved anywhere.
struct Fraction {
  Integer num;
  Integer den = 1;

  Fraction() = default;
  Fraction(Integer numerator, Integer denominator) : num(std::move(numerator)), den(std::move(denominator)) {
    if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }

  Integer floor() const {
    Integer q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
  }

  Integer ceil() const {
    Integer q = num / den;
    if (num > 0 && q * den != num) ++q;
    return q;
  }

  /// Reduced form, e.g. "3/2" or "7" for integers.
  std::string str() const {
    Integer g = boost::multiprecision::gcd(num, den);
    if (g == 0) g = 1;
    Integer n = num / g, d = den / g;
    return d == 1 ? n.str() : n.str() + "/" + d.str();
  }

  friend bool operator<(const Integer& x, const Fraction& f) { return x * f.den < f.num; }
  friend bool operator==(const Fraction& a, const Fraction& b) { return a.num * b.den == b.num * a.den; }
};

}  // namespace quadfermat
