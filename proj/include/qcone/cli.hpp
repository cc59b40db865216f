#pragma once

// Command-line front end: argument parsing, quiver files and JSON reports.
// Vectors on the command line and in reports follow the declared vertex order
// of the quiver file.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcone/quiver.hpp"

namespace qcone {

enum ExitStatus : int {
  kExitSuccess = 0,
  kExitFailure = 1,  // a check failed; the report carries witnesses
  kExitUsage = 2,
  kExitInconclusive = 3,
  kExitBudget = 4,
};

struct RunConfig {
  std::string command;  // cone, faces, schur, candecomp, decomp, dw-verify, oracle
  std::string oracle;   // hom, ext, circ, ss, si
  std::string quiver = "K2";
  std::optional<std::vector<std::int64_t>> beta;
  std::optional<std::vector<std::int64_t>> alpha;
  std::optional<std::vector<std::int64_t>> sigma;
  std::size_t s_max = 2;
  std::optional<std::size_t> max_codim;
  std::int64_t deg = 3;
  std::optional<std::uint64_t> seed;
  std::vector<std::uint64_t> primes;  // empty: the command's default
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> budget;
  std::string out;
};

struct Inputs {
  RunConfig config;
  Quiver quiver;
  // canonical vertex order
  std::optional<DimensionVector> beta;
  std::optional<DimensionVector> alpha;
  std::optional<Weight> sigma;
};

// Thrown by parse_inputs for --help; carries the usage text.
struct HelpRequested {
  std::string text;
};

// Builtins A<n> (linear, n >= 1) and K<m> (Kronecker, m >= 0), otherwise a
// JSON file {"vertices": [...], "arrows": [{"id", "tail", "head"}, ...]}.
Quiver load_quiver(const std::string& spec);
Quiver parse_quiver_document(std::string_view text);

// Comma separated integers, e.g. "1,-2,0".
std::vector<std::int64_t> parse_vector(std::string_view text, std::string_view field);

// args excludes the program name. Throws Error (ParseError, DimensionMismatch,
// CyclicQuiver, ...) naming the offending field.
Inputs parse_inputs(const std::vector<std::string>& args);

struct RunResult {
  std::string report;  // JSON document, newline terminated
  int status = kExitSuccess;
};

// Errors from the modules propagate, except inconclusive counts, which are
// reported with their evidence.
RunResult run(const Inputs& inputs);

int exit_status_for(ErrorKind kind);

// Parses, runs and writes the report to --out or `out`; errors go to `err`.
int run_main(const std::vector<std::string>& args, std::string& out, std::string& err);

}  // namespace qcone
