#pragma once

#include <string>
#include <vector>

#include "sdclass/augment.hpp"
#include "sdclass/database.hpp"

namespace sdc {

struct GenOptions {
  int to_length = 0;
  std::string from_db;     // roots database; empty = start from i2
  int jobs = 1;
  std::string out_dir = ".";
  std::string checkpoint;  // journal path; empty = no checkpointing
  bool force = false;      // required beyond length 32
};

struct GenReport {
  bool all_pass = true;
  std::vector<std::string> lines;     // one report line per (n, check)
  AugmentCounters counters;
  std::vector<ClassDatabase> levels;  // every written level, ascending n
};

// Level-synchronous generation: each level's parents are the previous
// level's records in database order, split round-robin over `jobs` workers;
// per-parent outputs are deterministic, so the merged level, the reports and
// the database files are byte-identical for any worker count. A mass-formula
// failure aborts after reporting the offending length.
GenReport run_generation(const GenOptions& opt);

}  // namespace sdc
