#pragma once

#include <stdexcept>
#include <string>

namespace sdc {

struct RankDeficient : std::runtime_error {
  explicit RankDeficient(const std::string& m) : std::runtime_error(m) {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct NotSelfDual : std::runtime_error {
  explicit NotSelfDual(const std::string& m) : std::runtime_error(m) {}
};

struct OddLength : std::runtime_error {
  explicit OddLength(const std::string& m) : std::runtime_error(m) {}
};

struct EvenWeightVector : std::runtime_error {
  explicit EvenWeightVector(const std::string& m) : std::runtime_error(m) {}
};

struct NotAutomorphism : std::runtime_error {
  explicit NotAutomorphism(const std::string& m) : std::runtime_error(m) {}
};

struct EqualLastColumns : std::runtime_error {
  explicit EqualLastColumns(const std::string& m) : std::runtime_error(m) {}
};

struct NonDivisor : std::runtime_error {
  explicit NonDivisor(const std::string& m) : std::runtime_error(m) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace sdc
