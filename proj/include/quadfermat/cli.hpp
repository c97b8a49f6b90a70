#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and writes human text to `out`, diagnostics to `err`.
//
// Exit codes: 0 found / success, 1 legitimate negative (prime, exhausted),
// 2 invalid input, 3 internal inconsistency.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "quadfermat/arith.hpp"
#include "quadfermat/audit.hpp"
#include "quadfermat/bench.hpp"
#include "quadfermat/fermat_generic.hpp"
#include "quadfermat/fermat_numbers.hpp"
#include "quadfermat/quadform.hpp"

namespace quadfermat::cli {

inline constexpr const char* tool_version = "0.1.0";

enum ExitCode : int { exit_found = 0, exit_negative = 1, exit_invalid = 2, exit_inconsistent = 3 };

using json = nlohmann::json;

/// { "command", "parameters", "results", "tool_version" }. nlohmann::json
/// keeps object keys sorted, so dumps are byte-stable.
inline json envelope(const std::string& command, const std::map<std::string, std::string>& parameters, json results) {
  json params = json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  return json{{"command", command}, {"parameters", params}, {"results", std::move(results)}, {"tool_version", tool_version}};
}

namespace detail {

struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Natural natural_arg(const std::string& text, const char* flag) {
  try {
    return parse_natural(text);
  } catch (const std::invalid_argument&) {
    throw invalid_input(std::string(flag) + ": expected a non-negative integer, got '" + text + "'");
  }
}

inline std::uint64_t small_arg(const std::string& text, const char* flag) {
  Natural v = natural_arg(text, flag);
  if (v > std::numeric_limits<std::uint64_t>::max()) throw invalid_input(std::string(flag) + ": value too large");
  return static_cast<std::uint64_t>(v);
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

inline json pair_json(const FactorPair& p, const QuadTarget& t) {
  return json{{"a", p.a.str()}, {"b", p.b.str()}, {"u", p.witness_u.str()},
              {"center", t.form().center(p.witness_u).str()}, {"d", p.d.str()}};
}

inline json violation_json(const Violation& v) {
  json j{{"n", v.n.str()}, {"N", v.N.str()}, {"detail", v.detail}};
  j["pair"] = v.pair ? json::array({v.pair->first.str(), v.pair->second.str()}) : json(nullptr);
  j["u"] = v.u ? json(v.u->str()) : json(nullptr);
  j["modulus"] = v.modulus ? json(*v.modulus) : json(nullptr);
  return j;
}

inline json report_json(const ClaimReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(violation_json(v));
  json j{{"claim", to_string(r.claim)}, {"range", r.range}, {"instances", r.instances}, {"violations", violations}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

inline QuadTarget target_from_flags(const std::string& n_text, const std::string& N_text) {
  if (n_text.empty() == N_text.empty()) throw invalid_input("give exactly one of --n or --N");
  if (!n_text.empty()) {
    Natural n = natural_arg(n_text, "--n");
    if (n < 1) throw invalid_input("--n must be at least 1");
    return make_target(n);
  }
  Natural N = natural_arg(N_text, "--N");
  std::optional<QuadTarget> t = target_from_value(N);
  if (!t) throw invalid_input("--N " + N.str() + " is not of the form 4n^2 + 1 (use factor-generic for arbitrary N)");
  return *t;
}

// --------------------------------------------------------------------------

struct FactorArgs {
  std::string n, N;
  bool all = false, paper = false, as_json = false;
  std::string prime_bound = "97", budget = "0";
};

inline int cmd_factor(const FactorArgs& a, std::ostream& out, std::ostream& err) {
  const QuadTarget t = target_from_flags(a.n, a.N);
  SieveOptions opts;
  opts.filter_primes = default_filter_primes(small_arg(a.prime_bound, "--prime-bound"));
  opts.use_paper_filters = a.paper;
  opts.want_all = a.all;
  opts.max_steps = small_arg(a.budget, "--budget");
  const SieveResult r = sieve_enumerate(t, opts);

  std::string verdict = "composite";
  int code = exit_found;
  if (r.pairs.empty()) {
    code = exit_negative;
    verdict = r.budget_exhausted ? "budget-exhausted" : (a.paper ? "not-found" : "prime");
    if (a.paper && !r.budget_exhausted)
      err << "note: --paper-filters skips unproven residues, so an empty result does not prove N prime\n";
  }

  if (a.as_json) {
    json pairs = json::array();
    for (const auto& p : r.pairs) pairs.push_back(pair_json(p, t));
    json results{{"n", t.n.str()},
                 {"N", t.N.str()},
                 {"parity", to_string(t.parity)},
                 {"verdict", verdict},
                 {"pairs", pairs},
                 {"candidates_examined", r.candidates_examined},
                 {"skipped_qr", r.skipped_qr},
                 {"skipped_paper", r.skipped_paper},
                 {"trial_divisor", r.trial_divisor ? json(*r.trial_divisor) : json(nullptr)}};
    std::map<std::string, std::string> params{{"prime_bound", a.prime_bound}, {"all", a.all ? "true" : "false"},
                                              {"paper_filters", a.paper ? "true" : "false"}, {"budget", a.budget}};
    if (!a.n.empty()) params["n"] = a.n;
    if (!a.N.empty()) params["N"] = a.N;
    emit_json(out, envelope("factor", params, results));
    return code;
  }

  out << "N = " << t.N << " (n = " << t.n << ", " << to_string(t.parity) << ")\n";
  if (r.pairs.empty()) {
    out << verdict << "\n";
  } else {
    for (const auto& p : r.pairs)
      out << p.a << " x " << p.b << "  u = " << p.witness_u << ", center = " << t.form().center(p.witness_u)
          << ", d = " << p.d << (r.trial_divisor ? "  (trial division)" : "") << "\n";
  }
  out << "candidates examined: " << r.candidates_examined << ", skipped by residue sieve: " << r.skipped_qr
      << ", skipped by --paper-filters: " << r.skipped_paper << "\n";
  return code;
}

// --------------------------------------------------------------------------

struct GenericArgs {
  std::string N;
  std::string budget = "100000000";
  bool as_json = false;
};

inline int cmd_factor_generic(const GenericArgs& a, std::ostream& out, std::ostream&) {
  const Natural N = natural_arg(a.N, "--N");
  if (N < 9 || N % 2 == 0) throw invalid_input("--N must be odd and at least 9");
  const GenericResult r = fermat_factor(N, small_arg(a.budget, "--budget"));
  const int code = r.verdict == GenericVerdict::Found ? exit_found : exit_negative;
  if (a.as_json) {
    json results{{"N", N.str()}, {"verdict", to_string(r.verdict)}, {"centers_examined", r.centers_examined}};
    if (r.split)
      results["split"] = json{{"c", r.split->c.str()}, {"d", r.split->d.str()}, {"a", r.split->a.str()}, {"b", r.split->b.str()}};
    emit_json(out, envelope("factor-generic", {{"N", a.N}, {"budget", a.budget}}, results));
    return code;
  }
  if (r.split)
    out << N << " = (" << r.split->c << " - " << r.split->d << ")(" << r.split->c << " + " << r.split->d
        << ") = " << r.split->a << " x " << r.split->b << "\n";
  else
    out << to_string(r.verdict) << "\n";
  out << "centers examined: " << r.centers_examined << "\n";
  return code;
}

// --------------------------------------------------------------------------

struct CandidatesArgs {
  std::string n, N, prime;
  bool as_json = false;
};

inline std::string residue_list(const std::vector<std::uint64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline int cmd_candidates(const CandidatesArgs& a, std::ostream& out, std::ostream&) {
  const QuadTarget t = target_from_flags(a.n, a.N);
  const UInterval range = u_interval(t);
  constexpr std::uint64_t list_limit = 64;

  std::vector<std::string> values;
  if (!range.empty() && range.size() <= list_limit)
    for (Natural u = range.u_min; u < range.u_sup; ++u) values.push_back(u.str());

  std::optional<std::uint64_t> p;
  std::vector<std::uint64_t> parametric, qr;
  if (!a.prime.empty()) {
    p = small_arg(a.prime, "--prime");
    if (*p < 3 || !is_prime(*p)) throw invalid_input("--prime must be an odd prime");
    if (t.N % *p == 0) throw invalid_input("--prime " + a.prime + " divides N = " + t.N.str());
    parametric = admissible_residues_parametric(t, *p);
    qr = admissible_residues_qr(t, *p);
  }

  if (a.as_json) {
    json results{{"n", t.n.str()},
                 {"N", t.N.str()},
                 {"parity", to_string(t.parity)},
                 {"center_offset", t.offset()},
                 {"u_min", range.u_min.str()},
                 {"u_sup", range.u_sup.str()},
                 {"u_count", range.size().str()}};
    if (range.size() <= list_limit) results["u_values"] = values;
    if (p) {
      results["prime"] = *p;
      results["residues_parametric"] = parametric;
      results["residues_qr"] = qr;
      results["equal"] = parametric == qr;
    }
    std::map<std::string, std::string> params;
    if (!a.n.empty()) params["n"] = a.n;
    if (!a.N.empty()) params["N"] = a.N;
    if (p) params["prime"] = a.prime;
    emit_json(out, envelope("candidates", params, results));
    return exit_found;
  }

  out << "N = " << t.N << " (n = " << t.n << ", " << to_string(t.parity) << "), center = 8u + " << t.offset() << "\n";
  out << "u in [" << range.u_min << ", " << range.u_sup.str() << ")";
  if (range.empty()) {
    out << " -> empty\n";
  } else if (range.size() <= list_limit) {
    out << " -> {";
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << "}\n";
  } else {
    out << " -> " << range.size() << " values\n";
  }
  if (p) {
    out << "admissible u mod " << *p << ": parametric " << residue_list(parametric) << " / quadratic-residue "
        << residue_list(qr) << ", equal=" << (parametric == qr ? "true" : "false") << "\n";
  }
  return exit_found;
}

// --------------------------------------------------------------------------

struct AuditArgs {
  std::string range = "1:200";
  std::string claims = "all";
  std::string prime_bound = "97";
  std::string json_path;
  std::string fermat_indices = "5,6";
  unsigned workers = 1;
};

inline int cmd_audit(const AuditArgs& a, std::ostream& out, std::ostream& err) {
  const auto bounds = split(a.range, ':');
  if (bounds.size() != 2 || a.range.find(':') == std::string::npos) throw invalid_input("--range must be <lo>:<hi>");
  const Natural lo = natural_arg(bounds[0], "--range"), hi = natural_arg(bounds[1], "--range");
  if (lo < 1 || lo > hi) throw invalid_input("--range needs 1 <= lo <= hi");
  std::vector<ClaimId> claims;
  try {
    claims = parse_claims(a.claims);
  } catch (const std::invalid_argument& e) {
    throw invalid_input(std::string("--claims: ") + e.what());
  }
  const std::uint64_t prime_bound = small_arg(a.prime_bound, "--prime-bound");
  std::vector<unsigned> indices;
  for (const auto& s : split(a.fermat_indices, ',')) {
    std::uint64_t idx = small_arg(s, "--fermat-indices");
    if (idx > 12) throw invalid_input("--fermat-indices: index " + s + " is beyond the audit's size budget (12)");
    indices.push_back(static_cast<unsigned>(idx));
  }

  std::vector<ClaimReport> reports = audit_claims(lo, hi, claims, prime_bound, a.workers);
  const bool any_fermat = std::any_of(claims.begin(), claims.end(), is_fermat_claim);
  if (any_fermat) {
    auto fermat = audit_fermat(indices, claims, prime_bound);
    reports.insert(reports.end(), fermat.begin(), fermat.end());
  }

  int code = exit_found;
  // With JSON on stdout the text summary would corrupt the document.
  std::ostringstream discard;
  std::ostream& text = a.json_path == "-" ? static_cast<std::ostream&>(discard) : out;
  for (const auto& r : reports) {
    for (const auto& v : r.violations) {
      if (!reverify(v)) {
        err << "inconsistent ledger entry: claim " << to_string(v.claim) << " at n = " << v.n << "\n";
        code = exit_inconsistent;
      }
    }
    text << std::left << std::setw(6) << to_string(r.claim) << " instances=" << r.instances
        << " violations=" << r.violations.size() << "  [" << r.range << "]";
    if (!r.violations.empty()) {
      const Violation& v = r.violations.front();
      text << "  first: n=" << v.n;
      if (v.pair) text << " pair=(" << v.pair->first << "," << v.pair->second << ")";
      if (v.u) text << " u=" << *v.u;
      if (v.modulus) text << " p=" << *v.modulus;
    }
    text << "\n";
  }

  if (!a.json_path.empty()) {
    json results = json::array();
    for (const auto& r : reports) results.push_back(report_json(r));
    json doc = envelope("audit",
                        {{"range", a.range}, {"claims", a.claims}, {"prime_bound", a.prime_bound},
                         {"fermat_indices", a.fermat_indices}},
                        results);
    if (a.json_path == "-") {
      emit_json(out, doc);
    } else {
      std::ofstream file(a.json_path, std::ios::binary);
      if (!file) throw invalid_input("cannot write " + a.json_path);
      emit_json(file, doc);
    }
  }
  return code;
}

// --------------------------------------------------------------------------

struct FermatArgs {
  std::string index;
  std::string mode = "lambda";
  std::string budget = "10000";
  std::string filters = "on";
  bool as_json = false;
};

inline int cmd_fermat(const FermatArgs& a, std::ostream& out, std::ostream&) {
  const std::uint64_t idx = small_arg(a.index, "--index");
  if (idx > default_max_fermat_index) throw invalid_input("--index beyond the size budget (" + std::to_string(default_max_fermat_index) + ")");
  if (a.mode != "lucas" && a.mode != "lambda") throw invalid_input("--mode must be lucas or lambda");
  if (a.filters != "on" && a.filters != "off") throw invalid_input("--filters must be on or off");
  if (a.mode == "lambda" && idx < 5) throw invalid_input("lambda mode requires index >= 5");
  if (a.mode == "lucas" && idx < 4) throw invalid_input("lucas mode requires index >= 4");
  const std::uint64_t budget = small_arg(a.budget, "--budget");
  const FermatTarget t = make_fermat(static_cast<unsigned>(idx));
  std::map<std::string, std::string> params{{"index", a.index}, {"mode", a.mode}, {"budget", a.budget}, {"filters", a.filters}};

  if (a.mode == "lucas") {
    const Natural cap = lucas_s_bound(t);
    const auto hits = lucas_search(t, Natural(budget));
    const bool exhausted = Natural(budget) < cap;
    const int code = hits.empty() ? exit_negative : exit_found;
    if (a.as_json) {
      json list = json::array();
      for (const auto& h : hits)
        list.push_back(json{{"s", h.s.str()}, {"divisor", h.divisor.str()}, {"cofactor", Natural(t.value / h.divisor).str()}});
      json results{{"index", idx}, {"hits", list}, {"s_bound", cap.str()},
                   {"verdict", !hits.empty() ? "found" : (exhausted ? "budget-exhausted" : "none")}};
      emit_json(out, envelope("fermat", params, results));
      return code;
    }
    for (const auto& h : hits) out << "s = " << h.s << ": divisor " << h.divisor << " divides F_" << idx << "\n";
    if (hits.empty()) out << (exhausted ? "BudgetExhausted" : "no divisor below the Lucas bound") << "\n";
    return code;
  }

  const LambdaFilters filters = a.filters == "on" ? LambdaFilters::all() : LambdaFilters::none();
  const LambdaInterval range = lambda_interval(t);
  const LambdaSearchResult r = lambda_search(t, budget, filters);
  const int code = r.hits.empty() ? exit_negative : exit_found;
  if (a.as_json) {
    json list = json::array();
    for (const auto& h : r.hits)
      list.push_back(json{{"lambda", h.lambda.str()}, {"center", h.center.str()}, {"d", h.root->str()},
                          {"p", h.small_factor().str()}, {"q", h.large_factor().str()}});
    json results{{"index", idx},
                 {"lambda_min", range.lambda_min.str()},
                 {"lambda_sup", range.lambda_sup.str()},
                 {"hits", list},
                 {"examined", r.examined},
                 {"skipped_mod3", r.skipped_mod3},
                 {"skipped_mod4", r.skipped_mod4},
                 {"skipped_primes", r.skipped_primes},
                 {"verdict", !r.hits.empty() ? "found" : (r.budget_exhausted ? "budget-exhausted" : "none")}};
    emit_json(out, envelope("fermat", params, results));
    return code;
  }
  out << "lambda in [" << range.lambda_min << ", " << range.lambda_sup << ")\n";
  for (const auto& h : r.hits)
    out << "lambda = " << h.lambda << ": center " << h.center << ", F_" << idx << " = " << h.small_factor() << " x "
        << h.large_factor() << "\n";
  if (r.hits.empty()) out << (r.budget_exhausted ? "BudgetExhausted" : "no witness in the interval") << "\n";
  out << "examined " << r.examined << ", skipped mod 3: " << r.skipped_mod3 << ", mod 4: " << r.skipped_mod4
      << ", by p = 3 (mod 4): " << r.skipped_primes << "\n";
  return code;
}

// --------------------------------------------------------------------------

struct BenchArgs {
  std::string targets;
  std::string strategies = "all";
  std::string csv_path;
  unsigned repetitions = 5;
  unsigned workers = 1;
};

inline void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "strategy,n,N,candidates,found,elapsed_ns\n";
  for (const auto& r : rows)
    os << to_string(r.strategy) << ',' << r.target_n << ',' << r.N << ',' << r.candidates_examined << ','
       << (r.found ? "true" : "false") << ',' << r.elapsed_ns << '\n';
}

inline int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream&) {
  std::vector<Natural> targets;
  for (const auto& s : split(a.targets, ',')) targets.push_back(natural_arg(s, "--targets"));
  if (targets.empty()) throw invalid_input("--targets is empty");
  for (const auto& n : targets) {
    if (n < 1) throw invalid_input("--targets: n must be at least 1");
    if (is_prime(Natural(4 * n * n + 1))) throw invalid_input("--targets: n = " + n.str() + " gives a prime N");
  }
  std::vector<Strategy> strategies;
  if (a.strategies == "all") {
    strategies.assign(std::begin(all_strategies), std::end(all_strategies));
  } else {
    try {
      for (const auto& s : split(a.strategies, ',')) strategies.push_back(parse_strategy(s));
    } catch (const std::invalid_argument& e) {
      throw invalid_input(std::string("--strategies: ") + e.what());
    }
  }
  const auto rows = run_bench(targets, strategies, a.repetitions, a.workers);
  if (a.csv_path.empty()) {
    write_bench_csv(out, rows);
  } else {
    std::ofstream file(a.csv_path, std::ios::binary);
    if (!file) throw invalid_input("cannot write " + a.csv_path);
    write_bench_csv(file, rows);
    out << "wrote " << rows.size() << " rows to " << a.csv_path << "\n";
  }
  return exit_found;
}

}  // namespace detail

/// Runs the tool on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Fermat factorization toolkit for 4n^2 + 1 and Fermat numbers", "quadfermat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version);

  detail::FactorArgs factor;
  auto* f = app.add_subcommand("factor", "factor N = 4n^2 + 1 with the interval sieve");
  f->add_option("--n", factor.n, "generator n");
  f->add_option("--N", factor.N, "the number itself; must be 4n^2 + 1");
  f->add_flag("--all", factor.all, "report every factor pair");
  f->add_flag("--paper-filters", factor.paper, "also apply the unproven congruence skips");
  f->add_option("--prime-bound", factor.prime_bound, "largest residue-sieve prime")->capture_default_str();
  f->add_option("--budget", factor.budget, "stop after this many u values (0 = none)")->capture_default_str();
  f->add_flag("--json", factor.as_json, "print a JSON envelope");

  detail::GenericArgs generic;
  auto* g = app.add_subcommand("factor-generic", "classic Fermat factorization of an odd N");
  g->add_option("--N", generic.N, "odd N >= 9")->required();
  g->add_option("--budget", generic.budget, "maximum center increments")->capture_default_str();
  g->add_flag("--json", generic.as_json, "print a JSON envelope");

  detail::CandidatesArgs cand;
  auto* c = app.add_subcommand("candidates", "show the u interval and admissible residues");
  c->add_option("--n", cand.n, "generator n");
  c->add_option("--N", cand.N, "the number itself; must be 4n^2 + 1");
  c->add_option("--prime", cand.prime, "odd prime for the residue sets");
  c->add_flag("--json", cand.as_json, "print a JSON envelope");

  detail::AuditArgs audit;
  auto* au = app.add_subcommand("audit", "check every claim against trial-division ground truth");
  au->add_option("--range", audit.range, "n range lo:hi")->capture_default_str();
  au->add_option("--claims", audit.claims, "comma-separated claim ids, or all")->capture_default_str();
  au->add_option("--prime-bound", audit.prime_bound, "largest modulus for congruence claims")->capture_default_str();
  au->add_option("--json", audit.json_path, "write the report as JSON to this path ('-' for stdout)");
  au->add_option("--fermat-indices", audit.fermat_indices, "Fermat indices for F-claims")->capture_default_str();
  au->add_option("--workers", audit.workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  detail::FermatArgs fermat;
  auto* fe = app.add_subcommand("fermat", "search for divisors of a Fermat number");
  fe->add_option("--index", fermat.index, "Fermat index n")->required();
  fe->add_option("--mode", fermat.mode, "lucas or lambda")->capture_default_str();
  fe->add_option("--budget", fermat.budget, "s_max (lucas) or lambda count (lambda)")->capture_default_str();
  fe->add_option("--filters", fermat.filters, "on or off (lambda mode)")->capture_default_str();
  fe->add_flag("--json", fermat.as_json, "print a JSON envelope");

  detail::BenchArgs bench;
  auto* b = app.add_subcommand("bench", "compare candidate counts and times across strategies");
  b->add_option("--targets", bench.targets, "comma-separated n values")->required();
  b->add_option("--strategies", bench.strategies, "comma-separated strategies, or all")->capture_default_str();
  b->add_option("--csv", bench.csv_path, "write CSV here instead of stdout");
  b->add_option("--repetitions", bench.repetitions, "timed runs per row")->capture_default_str()->check(CLI::PositiveNumber);
  b->add_option("--workers", bench.workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_found;
  } catch (const CLI::CallForVersion&) {
    out << tool_version << "\n";
    return exit_found;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  }

  try {
    if (f->parsed()) return detail::cmd_factor(factor, out, err);
    if (g->parsed()) return detail::cmd_factor_generic(generic, out, err);
    if (c->parsed()) return detail::cmd_candidates(cand, out, err);
    if (au->parsed()) return detail::cmd_audit(audit, out, err);
    if (fe->parsed()) return detail::cmd_fermat(fermat, out, err);
    if (b->parsed()) return detail::cmd_bench(bench, out, err);
  } catch (const detail::invalid_input& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const internal_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return exit_inconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_invalid;
}

}  // namespace quadfermat::cli
