#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wildnum/bfile.hpp"
#include "wildnum/errors.hpp"
#include "wildnum/parallel.hpp"
#include "wildnum/search.hpp"
#include "wildnum/sequence.hpp"
#include "wildnum/trajectory.hpp"

namespace wildnum::cli {

namespace {

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0    success\n"
    "  1    verify found mismatches / search found no exact match\n"
    "  2    trace exhausted its budget before reaching an integer\n"
    "  64   usage error (bad flags, unknown rule, unknown reference, empty range or box)\n"
    "  65   malformed b-file input\n"
    "  74   output file cannot be written\n"
    "  130  interrupted; partial results were written\n"
    "Environment:\n"
    "  WILDNUM_WORKERS  default worker count (overridden by --workers)";

struct UsageFailure {
  std::string message;
};

struct DataFailure {
  std::string message;
};

struct Common {
  std::string rule = "vanlamoen";
  std::size_t max_steps = 0;
  std::size_t max_bits = 0;
  std::size_t workers = 0;
};

std::size_t env_workers() {
  const char* value = std::getenv(kWorkersEnv);
  if (value == nullptr || *value == '\0') return default_workers();
  try {
    std::size_t pos = 0;
    unsigned long n = std::stoul(value, &pos);
    if (pos == std::string(value).size() && n >= 1) return n;
  } catch (const std::exception&) {
  }
  throw UsageFailure{std::string(kWorkersEnv) + " must be a positive integer"};
}

RuleSpec parse_rule(const std::string& text) {
  try {
    return RuleSpec::parse(text);
  } catch (const ParseError& e) {
    throw UsageFailure{e.what()};
  }
}

Limits make_limits(const Common& c, Limits base) {
  if (c.max_steps != 0) base.max_steps = c.max_steps;
  if (c.max_bits != 0) base.max_bits = c.max_bits;
  try {
    base.validate();
  } catch (const UsageError& e) {
    throw UsageFailure{e.what()};
  }
  return base;
}

std::size_t resolve_workers(const Common& c) { return c.workers != 0 ? c.workers : env_workers(); }

void add_limit_flags(CLI::App* cmd, Common& c, const Limits& defaults) {
  cmd->add_option("--max-steps", c.max_steps, "Step budget per trajectory")
      ->default_str(std::to_string(defaults.max_steps))
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-bits", c.max_bits, "Bit-length cap on numerators and denominators")
      ->default_str(std::to_string(defaults.max_bits))
      ->check(CLI::Range(std::size_t{8}, std::numeric_limits<std::size_t>::max()));
}

// Builtin name, or a path to an existing b-file.
ReferenceTable load_reference(const std::string& ref) {
  if (auto table = builtin_reference(ref)) return *table;
  std::error_code ec;
  if (!std::filesystem::is_regular_file(ref, ec)) {
    throw UsageFailure{"unknown reference \"" + ref +
                       "\" (not a builtin table and not a readable file)"};
  }
  std::ifstream in(ref, std::ios::binary);
  if (!in) throw UsageFailure{"cannot open reference \"" + ref + "\""};
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return to_reference(read_bfile(buffer.str()), ref);
  } catch (const ParseError& e) {
    throw DataFailure{ref + ": " + e.what()};
  } catch (const UsageError& e) {
    throw DataFailure{ref + ": " + e.what()};
  }
}

ReferenceTable parse_target_list(const std::string& text, std::uint64_t offset) {
  ReferenceTable table;
  table.name = "custom";
  table.offset = offset;
  std::string_view rest = text;
  while (true) {
    auto comma = rest.find(',');
    std::string_view field = rest.substr(0, comma);
    try {
      table.values.push_back(Natural::parse(field));
    } catch (const ParseError&) {
      throw UsageFailure{"bad target value \"" + std::string(field) + "\""};
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return table;
}

IntRange parse_range(const std::string& text, const char* flag) {
  try {
    return IntRange::parse(text);
  } catch (const ParseError& e) {
    throw UsageFailure{std::string(flag) + ": " + e.what()};
  }
}

int cmd_trace(const Common& c, const std::string& n_text, bool one_per_line, bool cycle_check,
              std::ostream& out, std::ostream& err, std::stop_token stop) {
  RuleSpec rule = parse_rule(c.rule);
  Limits limits = make_limits(c, Limits{});
  Natural n;
  try {
    n = Natural::parse(n_text);
  } catch (const ParseError& e) {
    throw UsageFailure{std::string("--n: ") + e.what()};
  }
  if (!rule.is_rational() && n.is_zero()) throw UsageFailure{"Collatz undefined at 0"};

  RunOptions options;
  options.retain_trace = true;
  options.detect_cycles = cycle_check;
  options.stop = stop;
  TrajectoryResult result = run(rule, n, limits, options);
  TrajectoryStats stats = trajectory_stats(result);

  out << format_trace(result, one_per_line ? "\n" : " -> ") << "\n";
  std::string peak = stats.peak.to_string() + " (" + std::to_string(stats.peak_bits) + " bits)";
  if (result.reached()) {
    out << "reached " << result.as_reached().value << " in " << stats.steps
        << " steps, peak " << peak << "\n";
    return kExitOk;
  }
  const Exhausted& ex = result.as_exhausted();
  out << "exhausted: " << to_string(ex.reason) << " after " << ex.steps << " steps, peak "
      << peak << "\n";
  if (ex.reason == ExhaustReason::Cancelled) {
    err << "interrupted; trace is partial\n";
    return kExitInterrupted;
  }
  return kExitExhausted;
}

int cmd_seq(const Common& c, std::uint64_t from, std::uint64_t to, const std::string& out_path,
            std::ostream& out, std::ostream& err, std::stop_token stop) {
  RuleSpec rule = parse_rule(c.rule);
  Limits limits = make_limits(c, Limits{});
  if (from > to) {
    throw UsageFailure{"empty range: --from " + std::to_string(from) + " > --to " +
                       std::to_string(to)};
  }
  if (to - from >= kMaxGenerateCount) {
    throw UsageFailure{"range holds more than " + std::to_string(kMaxGenerateCount) +
                       " indices; split it into several seq runs"};
  }
  GenerateOptions options;
  options.workers = resolve_workers(c);
  options.stop = stop;
  std::vector<SequenceRecord> records = generate(rule, from, to, limits, options);
  std::string text = write_bfile(records);

  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "cannot write " << out_path << "\n";
      return kExitIo;
    }
    file << text;
    file.flush();
    if (!file) {
      err << "error while writing " << out_path << "\n";
      return kExitIo;
    }
  }
  std::size_t exhausted = 0;
  for (const auto& r : records) exhausted += r.reached() ? 0 : 1;
  if (exhausted > 0) err << exhausted << " record(s) exhausted their budget (value 0)\n";
  if (records.size() < to - from + 1) {
    err << "interrupted; wrote " << records.size() << " of " << (to - from + 1)
        << " records\n";
    return kExitInterrupted;
  }
  return kExitOk;
}

int cmd_verify(const Common& c, const std::string& ref_name, std::ostream& out,
               std::ostream& err, std::stop_token stop) {
  RuleSpec rule = parse_rule(c.rule);
  Limits limits = make_limits(c, Limits{});
  ReferenceTable reference = load_reference(ref_name);
  GenerateOptions options;
  options.workers = resolve_workers(c);
  options.stop = stop;
  std::vector<SequenceRecord> records =
      generate(rule, reference.offset, reference.last_index(), limits, options);
  if (records.size() < reference.values.size()) {
    err << "interrupted before verification finished\n";
    return kExitInterrupted;
  }
  VerificationReport report = verify(records, reference);
  out << "verify " << rule.to_string() << " against " << reference.name << ": "
      << report.checked << " terms, " << report.mismatches.size() << " mismatches\n";
  if (report.passed()) return kExitOk;
  out << "index expected got status\n";
  for (const auto& m : report.mismatches) {
    out << m.index << " " << m.expected << " " << m.got << " "
        << (m.exhausted ? "exhausted:" + std::string(to_string(*m.exhausted)) : "reached")
        << "\n";
  }
  return kExitMismatch;
}

struct SearchArgs {
  std::string target;
  std::string target_ref;
  std::uint64_t offset = 0;
  std::string alpha = "-3..3";
  std::string beta = "-3..3";
  std::string gamma = "-3..3";
  std::size_t top = 10;
};

int cmd_search(const Common& c, const SearchArgs& a, std::ostream& out, std::ostream& err,
               std::stop_token stop) {
  SearchBox box;
  box.alpha = parse_range(a.alpha, "--alpha");
  box.beta = parse_range(a.beta, "--beta");
  box.gamma = parse_range(a.gamma, "--gamma");
  box.limits = make_limits(c, search_default_limits());
  if (box.candidate_count() == 0) {
    throw UsageFailure{"empty search box: alpha " + box.alpha.to_string() + ", beta " +
                       box.beta.to_string() + ", gamma " + box.gamma.to_string()};
  }
  for (const IntRange& r : {box.alpha, box.beta, box.gamma}) {
    if (r.lo < -kFamilyCoefficientBound || r.hi > kFamilyCoefficientBound) {
      throw UsageFailure{"range " + r.to_string() + " exceeds the coefficient bound " +
                         std::to_string(kFamilyCoefficientBound)};
    }
  }
  if (!a.target.empty() == !a.target_ref.empty()) {
    throw UsageFailure{"exactly one of --target and --target-ref is required"};
  }
  box.target = a.target.empty() ? load_reference(a.target_ref) : parse_target_list(a.target, a.offset);

  SearchOptions options;
  options.workers = resolve_workers(c);
  options.stop = stop;
  MatchReport report = search(box, options);
  out << format_report(report, a.top);
  if (report.ranking.size() < box.candidate_count()) {
    err << "interrupted; report covers " << report.ranking.size() << " of "
        << box.candidate_count() << " candidates\n";
    return kExitInterrupted;
  }
  return report.exact_matches().empty() ? kExitMismatch : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::stop_token stop) {
  CLI::App app{"Exact-arithmetic iterated maps: van Lamoen digit-sum map, Collatz, b-files"};
  app.name(args.empty() ? "wildnum" : std::filesystem::path(args[0]).filename().string());
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* cmd, const Limits& defaults, bool workers) {
    cmd->add_option("--rule", common.rule, "vanlamoen | collatz | family:a,b,c")
        ->capture_default_str();
    add_limit_flags(cmd, common, defaults);
    if (workers) {
      cmd->add_option("--workers", common.workers,
                      "Worker threads (default: $WILDNUM_WORKERS or all cores)")
          ->check(CLI::PositiveNumber);
    }
  };

  auto* trace = app.add_subcommand("trace", "Print the trajectory of one start value");
  std::string n_text;
  bool one_per_line = false;
  bool cycle_check = false;
  add_common(trace, Limits{}, false);
  trace->add_option("--n", n_text, "Start value")->required();
  trace->add_flag("--lines", one_per_line, "One state per line instead of arrow-joined");
  trace->add_flag("--cycle-check", cycle_check, "Stop when an exact state repeats");

  auto* seq = app.add_subcommand("seq", "Generate a(n) over [from, to] as a b-file");
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::string out_path;
  add_common(seq, Limits{}, true);
  seq->add_option("--from", from, "First index")->required();
  seq->add_option("--to", to, "Last index (inclusive)")->required();
  seq->add_option("--out", out_path, "Write the b-file here instead of stdout");

  auto* ver = app.add_subcommand("verify", "Check a rule against a reference table");
  std::string ref_name = "paper48";
  add_common(ver, Limits{}, true);
  ver->add_option("--reference", ref_name, "Builtin table (paper48, fictional) or b-file path")
      ->capture_default_str();

  auto* srch = app.add_subcommand("search", "Search the digit-sum family for a target prefix");
  SearchArgs sargs;
  add_common(srch, search_default_limits(), true);
  srch->remove_option(srch->get_option("--rule"));
  srch->add_option("--target", sargs.target, "Comma-separated target values");
  srch->add_option("--target-ref", sargs.target_ref, "Builtin table or b-file as the target");
  srch->add_option("--offset", sargs.offset, "Index of the first --target value")
      ->capture_default_str();
  srch->add_option("--alpha", sargs.alpha, "Range lo..hi for the ds(p) coefficient")
      ->capture_default_str();
  srch->add_option("--beta", sargs.beta, "Range lo..hi for the ds(q) coefficient")
      ->capture_default_str();
  srch->add_option("--gamma", sargs.gamma, "Range lo..hi for the constant offset")
      ->capture_default_str();
  srch->add_option("--top", sargs.top, "Non-exact candidates to list")->capture_default_str();

  // CLI11 consumes arguments from the back.
  std::vector<std::string> rev(args.empty() ? args.end() : args.begin() + 1, args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*trace) return cmd_trace(common, n_text, one_per_line, cycle_check, out, err, stop);
    if (*seq) return cmd_seq(common, from, to, out_path, out, err, stop);
    if (*ver) return cmd_verify(common, ref_name, out, err, stop);
    if (*srch) return cmd_search(common, sargs, out, err, stop);
  } catch (const UsageFailure& e) {
    err << app.get_name() << ": " << e.message << "\n";
    return kExitUsage;
  } catch (const DataFailure& e) {
    err << app.get_name() << ": " << e.message << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace wildnum::cli
