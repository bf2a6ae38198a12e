#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdclass/database.hpp"

namespace sdc {

// One fully processed parent: every accepted child plus counter deltas.
struct CheckpointBlock {
  int n = 0;  // child length
  int parent_index = 0;
  std::uint64_t considered = 0;
  std::uint64_t canonical = 0;
  std::vector<DbRecord> records;
};

struct Checkpoint {
  std::uint64_t id = 0;
  int to_length = 0;
  std::vector<CheckpointBlock> blocks;
};

// FNV-1a over the root generator strings and the target length; identifies
// the run a journal belongs to.
std::uint64_t run_id(const std::vector<SelfDualCode>& roots, int to_length);

void write_checkpoint_header(const std::string& path, std::uint64_t id,
                             int to_length);

void append_checkpoint_block(const std::string& path,
                             const CheckpointBlock& b);

// Replays the journal; a truncated or malformed tail is dropped, everything
// before it is kept.
Checkpoint read_checkpoint(const std::string& path);

}  // namespace sdc
