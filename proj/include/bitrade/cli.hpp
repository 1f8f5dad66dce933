#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bitrade::cli {

enum class Emit { counts, forms };

struct RunConfig {
  int max_size = 0;
  int workers = 1;
  int split_depth = 0;
  Emit emit = Emit::counts;
  std::string checkpoint;  // directory; empty for none
  int oracle_bound = 13;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

// Runs one command line (without the program name). Data goes to `out` (or
// --out), diagnostics to `err`. Returns 0 on success, 1 on runtime errors
// and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bitrade::cli
