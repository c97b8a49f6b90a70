#pragma once

// Candidate-count and timing comparison of the enumeration strategies.
// Counts are exact and deterministic; times are medians of repeated runs on a
// monotonic clock and are reported, never asserted.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "quadfermat/arith.hpp"
#include "quadfermat/fermat_generic.hpp"
#include "quadfermat/quadform.hpp"

namespace quadfermat {

enum class Strategy { TrialDivision, PlainFermat, QuadInterval, QuadIntervalQRFiltered, QuadIntervalPaperFiltered };

inline constexpr Strategy all_strategies[] = {Strategy::TrialDivision, Strategy::PlainFermat, Strategy::QuadInterval,
                                              Strategy::QuadIntervalQRFiltered, Strategy::QuadIntervalPaperFiltered};

inline std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::TrialDivision: return "TrialDivision";
    case Strategy::PlainFermat: return "PlainFermat";
    case Strategy::QuadInterval: return "QuadInterval";
    case Strategy::QuadIntervalQRFiltered: return "QuadIntervalQRFiltered";
    case Strategy::QuadIntervalPaperFiltered: return "QuadIntervalPaperFiltered";
  }
  return "?";
}

inline Strategy parse_strategy(const std::string& name) {
  for (Strategy s : all_strategies)
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

struct BenchRow {
  Strategy strategy{};
  Natural target_n;
  Natural N;
  std::uint64_t candidates_examined = 0;
  bool found = false;
  /// The pair found, smaller factor first.
  std::optional<std::pair<Natural, Natural>> pair;
  std::uint64_t elapsed_ns = 0;
};

struct StrategyOutcome {
  std::uint64_t candidates = 0;
  std::optional<std::pair<Natural, Natural>> pair;
};

/// One run of a strategy on N = 4n^2 + 1, first hit only.
inline StrategyOutcome run_strategy(Strategy s, const QuadTarget& t, std::uint64_t prime_bound = 97) {
  StrategyOutcome out;
  switch (s) {
    case Strategy::TrialDivision: {
      // Odd trial divisors 3, 5, 7, ... up to isqrt(N).
      const Natural limit = isqrt(t.N);
      for (Natural d = 3; d <= limit; d += 2) {
        ++out.candidates;
        if (t.N % d == 0) {
          out.pair = std::make_pair(d, Natural(t.N / d));
          break;
        }
      }
      break;
    }
    case Strategy::PlainFermat: {
      GenericResult r = fermat_factor(t.N, std::numeric_limits<std::uint64_t>::max());
      out.candidates = r.centers_examined;
      if (r.split) out.pair = std::make_pair(r.split->a, r.split->b);
      break;
    }
    case Strategy::QuadInterval:
    case Strategy::QuadIntervalQRFiltered:
    case Strategy::QuadIntervalPaperFiltered: {
      SieveOptions opts;
      opts.trial_divide_first = false;
      if (s != Strategy::QuadInterval) opts.filter_primes = default_filter_primes(prime_bound);
      opts.use_paper_filters = s == Strategy::QuadIntervalPaperFiltered;
      SieveResult r = sieve_enumerate(t, opts);
      out.candidates = r.candidates_examined;
      if (!r.pairs.empty()) out.pair = std::make_pair(r.pairs.front().a, r.pairs.front().b);
      break;
    }
  }
  return out;
}

/// Runs every strategy on every target (which must all be composite),
/// reporting the median elapsed time of `repetitions` runs. Rows are ordered
/// by target, then by strategy as listed.
inline std::vector<BenchRow> run_bench(const std::vector<Natural>& targets, const std::vector<Strategy>& strategies,
                                       unsigned repetitions = 5, unsigned workers = 1) {
  if (repetitions < 1) throw std::invalid_argument("run_bench: repetitions must be at least 1");
  std::vector<QuadTarget> quads;
  for (const Natural& n : targets) {
    QuadTarget t = make_target(n);
    if (is_prime(t.N))
      throw std::invalid_argument("run_bench: target n = " + n.str() + " gives prime N = " + t.N.str());
    quads.push_back(std::move(t));
  }

  std::vector<BenchRow> rows(quads.size() * strategies.size());
  auto run_target = [&](std::size_t ti) {
    for (std::size_t si = 0; si < strategies.size(); ++si) {
      std::vector<std::uint64_t> times;
      StrategyOutcome outcome;
      for (unsigned rep = 0; rep < repetitions; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        StrategyOutcome o = run_strategy(strategies[si], quads[ti]);
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
        if (rep == 0) outcome = std::move(o);
      }
      std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
      BenchRow& row = rows[ti * strategies.size() + si];
      row.strategy = strategies[si];
      row.target_n = quads[ti].n;
      row.N = quads[ti].N;
      row.candidates_examined = outcome.candidates;
      row.found = outcome.pair.has_value();
      row.pair = outcome.pair;
      row.elapsed_ns = times[times.size() / 2];
    }
  };

  // Each worker owns whole targets; the loops inside stay single-threaded.
  if (workers <= 1 || quads.size() <= 1) {
    for (std::size_t ti = 0; ti < quads.size(); ++ti) run_target(ti);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        for (std::size_t ti = w; ti < quads.size(); ti += workers) run_target(ti);
      });
    for (auto& th : threads) th.join();
  }
  return rows;
}

}  // namespace quadfermat
