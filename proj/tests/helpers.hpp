#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sdclass/augment.hpp"
#include "sdclass/code.hpp"

inline oracle::BoolMat to_bool(const sdc::BitMat& m) {
  oracle::BoolMat out(static_cast<size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) {
    out[static_cast<size_t>(i)].resize(static_cast<size_t>(m.cols));
    for (int j = 0; j < m.cols; ++j) out[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.get(i, j);
  }
  return out;
}

inline sdc::BitMat from_rows(const std::vector<std::string>& rows) {
  sdc::BitMat g(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    g.set_row(static_cast<int>(i), sdc::BitVec::from_string(rows[i]));
  return g;
}

inline sdc::SelfDualCode code_from_rows(const std::vector<std::string>& rows) {
  return sdc::SelfDualCode::from_generator(from_rows(rows));
}

inline const std::vector<std::string>& e8_rows() {
  static const std::vector<std::string> rows{"10000111", "01001011", "00101101",
                                             "00011110"};
  return rows;
}

// Complete family of class representatives at dimension k, grown once per
// process and shared by every suite.
inline const std::vector<sdc::SelfDualCode>& family(int k) {
  static std::vector<std::vector<sdc::SelfDualCode>> levels{
      {}, {sdc::SelfDualCode::i2()}};
  while (static_cast<int>(levels.size()) <= k)
    levels.push_back(sdc::augment(levels.back(), static_cast<int>(levels.size())));
  return levels[static_cast<size_t>(k)];
}

inline std::filesystem::path fresh_dir(const std::string& name) {
  std::filesystem::path p =
      std::filesystem::temp_directory_path() / ("sdclass_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline void spew(const std::filesystem::path& p, const std::string& s) {
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  f << s;
}
