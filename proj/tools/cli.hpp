#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace sqcore::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,  // unreadable or malformed input file
  kValidationFailed = 3,
  kHypothesis = 4,
  kNotIsomorphic = 5,
  kOracleDiscrepancy = 6,
  kInternal = 7,
};

struct RunConfig {
  std::string command;
  std::string input;   // marked graph, or a complex file when input2 is empty
  std::string input2;  // second marked graph
  std::string pieces;  // decomposition file for roundtrip
  std::string out;     // output directory; empty writes the report to stdout only
  int genus = 2;
  std::uint64_t seed = 0;
  int moves = 4;
  int radius = 3;
  int threads = 1;
  bool timings = false;
};

// Runs one command; the report goes to `out`, diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace sqcore::cli
