#include "germcalc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "germcalc/error.hpp"
#include "germcalc/report.hpp"

namespace germcalc {

namespace fs = std::filesystem;

fs::path default_corpus_dir() { return fs::path(GERMCALC_CORPUS_DIR); }

namespace {

std::string read_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string line_diff(const std::string& expected, const std::string& actual) {
  const auto a = split_lines(expected);
  const auto b = split_lines(actual);
  std::ostringstream out;
  int shown = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()) && shown < 20; ++i) {
    const std::string* ea = i < a.size() ? &a[i] : nullptr;
    const std::string* eb = i < b.size() ? &b[i] : nullptr;
    if (ea && eb && *ea == *eb) continue;
    out << "  line " << (i + 1) << ":\n";
    if (ea) out << "    - " << *ea << "\n";
    if (eb) out << "    + " << *eb << "\n";
    ++shown;
  }
  return out.str();
}

std::string describe(const Error& e) { return std::string(error_kind_name(e.kind())) + ": " + e.what(); }

}  // namespace

MultiGerm load_germ(const fs::path& file) { return parse_germ(read_file(file), file.stem().string()); }

std::vector<int> invariance_failures(const MultiGerm& g, const ComputeOptions& options, std::uint64_t seed,
                                     int changes) {
  const InvariantReport reference = compute_report(g, options);
  std::mt19937_64 rng(seed);
  std::vector<int> failures;
  for (int i = 0; i < changes; ++i) {
    const MultiGerm changed = apply(random_linear_change(g, rng), g);
    bool same = false;
    try {
      same = same_numbers(reference, compute_report(changed, options));
    } catch (const Error&) {
      same = false;
    }
    if (!same) failures.push_back(i);
  }
  return failures;
}

std::vector<CorpusEntry> run_corpus(const CorpusConfig& config, Execution exec) {
  std::vector<fs::path> files;
  const fs::path germ_dir = config.dir / "germs";
  if (!fs::is_directory(germ_dir)) throw Error(ErrorKind::Parse, "missing corpus directory " + germ_dir.string());
  for (const auto& entry : fs::directory_iterator(germ_dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<CorpusEntry> entries(files.size());
  const auto count = static_cast<long>(files.size());
  ComputeOptions options;
  // Parallelism lives at the germ level; the kernels inside each germ stay serial.
  options.exec = Execution::serial;

#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long i = 0; i < count; ++i) {
    auto& e = entries[static_cast<std::size_t>(i)];
    const fs::path& file = files[static_cast<std::size_t>(i)];
    e.file_stem = file.stem().string();
    e.name = e.file_stem;
    std::ostringstream log;
    try {
      const MultiGerm g = load_germ(file);
      e.name = g.name;
      const InvariantReport rep = compute_report(g, options);
      const std::string text = report_to_json(rep);
      const fs::path golden = config.dir / "golden" / (e.file_stem + ".json");
      if (config.write_golden) {
        std::ofstream(golden, std::ios::binary) << text;
        log << "golden written";
      } else if (!fs::exists(golden)) {
        log << "golden missing: " << golden.string();
        e.exit_code = 1;
      } else {
        const std::string expected = read_file(golden);
        if (expected == text) {
          log << "golden ok";
        } else {
          log << "golden MISMATCH\n" << line_diff(expected, text);
          e.exit_code = 1;
        }
      }
      if (!rep.checks_pass()) {
        log << ", consistency FAILED";
        e.exit_code = 1;
      }
      if (config.t_route && !(*config.t_route == TRoute::source && g.r() > 1)) {
        ComputeOptions routed = options;
        routed.t_route = config.t_route;
        const InvariantReport alt = compute_report(g, routed);
        if (alt.T != rep.T || !alt.checks_pass()) {
          log << ", t-route " << route_name(*config.t_route) << " MISMATCH (T = " << alt.T << ")";
          e.exit_code = 1;
        } else {
          log << ", t-route " << route_name(*config.t_route) << " " << alt.t_route_tag();
        }
      }
      const auto failed = invariance_failures(g, options, config.seed, config.changes);
      log << ", invariance " << (config.changes - static_cast<int>(failed.size())) << "/" << config.changes;
      if (!failed.empty()) {
        log << " FAILED at changes";
        for (int f : failed) log << " " << f;
        e.exit_code = 1;
      }
    } catch (const Error& ex) {
      log << describe(ex);
      e.exit_code = exit_code(ex.kind());
    } catch (const std::exception& ex) {
      log << "error: " << ex.what();
      e.exit_code = 1;
    }
    e.log = log.str();
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  return entries;
}

namespace {

struct ComputeArgs {
  std::vector<std::string> files;
  std::optional<int> jet_bound;
  int max_jet_bound = 64;
  std::optional<std::string> t_route;
  std::string format = "json";
  bool check = false;
  std::uint64_t seed = 42;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err) {
  ComputeOptions options;
  options.jet_bound = a.jet_bound;
  options.max_jet_bound = a.max_jet_bound;
  if (a.t_route) options.t_route = route_from_name(*a.t_route);
  if (a.jet_bound && *a.jet_bound > a.max_jet_bound) {
    err << "error: --jet-bound must not exceed --max-jet-bound\n";
    return 2;
  }
  int status = 0;
  std::vector<InvariantReport> reports;
  for (const auto& file : a.files) {
    try {
      const MultiGerm g = load_germ(file);
      InvariantReport rep = compute_report(g, options);
      if (a.check) {
        for (const auto& c : rep.consistency) err << "check " << c.name << ": " << (c.ok ? "pass" : "FAIL") << "\n";
        const auto failed = invariance_failures(g, options, a.seed, 5);
        err << "check invariance (seed " << a.seed << "): " << (failed.empty() ? "pass" : "FAIL") << "\n";
        if ((!rep.checks_pass() || !failed.empty()) && status == 0) status = exit_code(ErrorKind::InconsistentInvariants);
      }
      reports.push_back(std::move(rep));
    } catch (const Error& e) {
      err << file << ": " << describe(e) << "\n";
      if (status == 0) status = exit_code(e.kind());
    }
  }
  if (a.format == "table") {
    for (std::size_t i = 0; i < reports.size(); ++i) out << (i ? "\n" : "") << report_to_table(reports[i]);
  } else if (reports.size() == 1 && a.files.size() == 1) {
    out << report_to_json(reports.front());
  } else if (!reports.empty()) {
    out << reports_to_json(reports);
  }
  return status;
}

int cmd_corpus(const CorpusConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<CorpusEntry> entries;
  try {
    entries = run_corpus(config, Execution::parallel);
  } catch (const Error& e) {
    err << describe(e) << "\n";
    return exit_code(e.kind());
  }
  int status = 0;
  for (const auto& e : entries) {
    out << (e.exit_code == 0 ? "ok   " : "FAIL ") << e.name << ": " << e.log << "\n";
    if (e.exit_code != 0 && status == 0) status = e.exit_code;
  }
  out << entries.size() << " germs, " << (status == 0 ? "all passed" : "failures present") << "\n";
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of finitely determined map germs from the plane to 3-space", "germcalc"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute invariant reports for germ files");
  c->add_option("files", compute.files, "Germ JSON files")->required();
  c->add_option("--jet-bound", compute.jet_bound, "Initial jet bound")->check(CLI::PositiveNumber);
  c->add_option("--max-jet-bound", compute.max_jet_bound, "Largest jet and degree bound")->check(CLI::PositiveNumber);
  c->add_option("--t-route", compute.t_route, "Triple point route")->check(CLI::IsMember({"source", "target", "both"}));
  c->add_option("--format", compute.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  c->add_flag("--check", compute.check, "Print consistency and invariance checks; fail on any violation");
  c->add_option("--seed", compute.seed, "Seed for the invariance checks");

  CorpusConfig corpus;
  std::optional<std::string> corpus_route;
  std::string corpus_dir = corpus.dir.string();
  auto* k = app.add_subcommand("corpus", "Recompute the built-in corpus against its golden files");
  k->add_option("--seed", corpus.seed, "Seed for the invariance tests");
  k->add_option("--t-route", corpus_route, "Also verify T through this route")
      ->check(CLI::IsMember({"source", "target", "both"}));
  k->add_option("--corpus-dir", corpus_dir, "Corpus directory (germs/ and golden/)");
  k->add_option("--changes", corpus.changes, "Random coordinate changes per germ")->check(CLI::NonNegativeNumber);
  k->add_flag("--write-golden", corpus.write_golden, "Overwrite the golden files with the current reports");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  if (c->parsed()) return cmd_compute(compute, out, err);
  if (corpus_route) corpus.t_route = route_from_name(*corpus_route);
  corpus.dir = corpus_dir;
  return cmd_corpus(corpus, out, err);
}

}  // namespace germcalc
