#pragma once

// Classic Fermat factorization: scan c upward from ceil(sqrt(N)) until
// c^2 - N is a square d^2, giving N = (c - d)(c + d).

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "quadfermat/arith.hpp"
#include "quadfermat/center_scan.hpp"

namespace quadfermat {

struct SquareSplit {
  Natural c;
  Natural d;
  Natural a;  // c - d
  Natural b;  // c + d
};

enum class GenericVerdict { Found, Prime, BudgetExhausted };

inline const char* to_string(GenericVerdict v) {
  switch (v) {
    case GenericVerdict::Found: return "found";
    case GenericVerdict::Prime: return "prime";
    case GenericVerdict::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

struct GenericResult {
  GenericVerdict verdict = GenericVerdict::Prime;
  std::optional<SquareSplit> split;
  std::uint64_t centers_examined = 0;
};

/// Last center worth trying: (N + 9)/6 is the center of the pair (3, N/3).
/// Past it any split would need a factor below 3.
inline Natural fermat_center_limit(const Natural& N) { return (N + 9) / 6; }

/// step_budget bounds the number of increments of c after the first center.
inline GenericResult fermat_factor(const Natural& N, std::uint64_t step_budget) {
  if (N < 9 || N % 2 == 0) throw std::invalid_argument("fermat_factor: N must be odd and at least 9");
  GenericResult result;
  const Natural first = ceil_sqrt(N);
  const Natural limit = fermat_center_limit(N);
  if (first > limit) return result;
  const Natural span = limit - first;  // number of increments to reach the limit
  const bool budget_binds = span > step_budget;
  const std::uint64_t increments = budget_binds ? step_budget : static_cast<std::uint64_t>(span);

  CenterScan scan(first, Natural(1), N);
  for (std::uint64_t k = 0;; ++k) {
    ++result.centers_examined;
    if (std::optional<Natural> d = scan.root()) {
      Natural c = scan.center();
      if (c > *d + 1) {
        SquareSplit split{c, *d, c - *d, c + *d};
        if (split.a * split.b != N) throw internal_error("fermat_factor: split does not reconstruct N");
        result.verdict = GenericVerdict::Found;
        result.split = std::move(split);
        return result;
      }
    }
    if (k == increments) break;
    scan.advance();
  }
  result.verdict = budget_binds ? GenericVerdict::BudgetExhausted : GenericVerdict::Prime;
  return result;
}

}  // namespace quadfermat
