#pragma once

#include <string>
#include <vector>

#include "sdclass/bigint.hpp"
#include "sdclass/code.hpp"

namespace sdc {

struct DbRecord {
  SelfDualCode code;
  BigInt aut_order;
};

struct ClassDatabase {
  int n = 0;
  int k = 0;
  std::vector<DbRecord> records;
};

// Ascending order on the concatenated generator-row strings; database files
// are written in this order, which makes them byte-identical across runs and
// worker counts.
bool record_less(const DbRecord& a, const DbRecord& b);

std::string serialize_record(const DbRecord& r);

// Writes header `SDDB v1 n=<n> k=<k> count=<c>` plus one record block per
// class: a `#` info line, k generator rows, a blank line. Atomic via a
// temporary file and rename. Records are sorted by record_less.
void write_db(ClassDatabase db, const std::string& path);

// Strict parse; throws ParseError on any structural or consistency defect
// (non-systematic rows, wrong d or weight counts, duplicate forms are the
// verify command's business).
ClassDatabase read_db(const std::string& path);

std::string db_filename(int n);

}  // namespace sdc
