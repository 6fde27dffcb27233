#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "germcalc/invariants.hpp"

namespace germcalc {

// Directory holding germs/ and golden/ for the built-in corpus.
std::filesystem::path default_corpus_dir();

MultiGerm load_germ(const std::filesystem::path& file);

// Recomputes the report after `changes` seeded random linear coordinate changes;
// returns the indices of the changes whose report numbers differ.
std::vector<int> invariance_failures(const MultiGerm& g, const ComputeOptions& options, std::uint64_t seed,
                                     int changes);

struct CorpusConfig {
  std::filesystem::path dir = default_corpus_dir();
  std::uint64_t seed = 42;
  std::optional<TRoute> t_route;
  int changes = 5;
  bool write_golden = false;
};

struct CorpusEntry {
  std::string name;
  std::string file_stem;
  int exit_code = 0;
  std::string log;
};

// One entry per corpus germ, ordered by germ name. `exec` selects whether germs run concurrently.
std::vector<CorpusEntry> run_corpus(const CorpusConfig& config, Execution exec);

// Full command-line entry point; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace germcalc
