#pragma once

#include <string>
#include <vector>

#include "sdclass/bigint.hpp"
#include "sdclass/database.hpp"

namespace sdc {

struct WeightClassStats {
  int d = 0;
  int classes = 0;
  int doubly_even = 0;
  int distinct_enumerators = 0;
  int distinct_aut_orders = 0;
  BigInt aut_min;
  BigInt aut_max;
};

struct PrimePowerRow {
  int p = 0;
  int k = 0;
  int codes = 0;  // records whose |Aut| is divisible by p^k
};

struct StatsReport {
  int n = 0;
  int k = 0;
  int classes = 0;
  int type_ii = 0;
  int trivial_aut = 0;
  BigInt a_k_floor;  // floor of classes * (2k)! / product of (2^i + 1)
  std::vector<WeightClassStats> per_d;
  std::vector<PrimePowerRow> prime_powers;
};

StatsReport make_stats(const ClassDatabase& db);

std::string render_stats(const StatsReport& s);

}  // namespace sdc
