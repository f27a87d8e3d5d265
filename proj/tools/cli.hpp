#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qweyl::cli {

enum class Format { json, latex, plain };
enum class Basis { integer, symmetric };

/// Parsed command line. Fields not used by the chosen subcommand keep their
/// defaults.
struct RunConfig {
  std::string subcommand;
  std::string suite;                     ///< verify target
  int dim = 2;
  std::vector<int> dims;                 ///< rmatrix --dims a,b
  int strands = 3;
  std::vector<std::string> beta1;        ///< expressions; verify sweeps all
  std::string variant = "standard";
  std::string alpha = "0";
  std::vector<double> at_q;              ///< sample points q0
  Format format = Format::json;
  Basis basis = Basis::integer;
  int max_dim = 3;
  int max_sum = 10;
  int terms = 8;                         ///< coeffs --terms
  std::optional<std::string> word;
};

/// Runs one command; args exclude the program name. Artifacts go to out,
/// diagnostics to err. Returns 0 on success, 1 if a verification failed and
/// 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qweyl::cli
