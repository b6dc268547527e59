#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tlalg::cli {

enum class Command { Validate, Cohomology, ChernWeil, CharClasses, Pullback, Surjectivity };

struct JobConfig {
  Command command = Command::Validate;
  std::string complex;               // "builtin:NAME" or JSON path
  std::string rep;                   // inline "a=2,b=3"
  std::string rep_file;              // {"rank", "entries"} or {"rank", "transports"}
  std::string omega_file;            // cochain JSON
  std::string algebroid_file;
  std::vector<std::string> map_files;
  std::optional<int> degree;
  bool all_degrees = false;
  std::optional<std::size_t> power;
  bool check_surjectivity = false;
  bool json = false;
  int verbosity = 1;                 // 0 terse, 1 normal, 2 adds cocycles
};

/// Reads TLALG_VERBOSITY (0, 1 or 2); anything else gives 1.
int verbosity_from_env();

/// Runs one job. Reports go to `out`; errors go to `err` and give exit
/// status 1.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tlalg::cli
