#pragma once

#include <string>
#include <vector>

#include "sdclass/bigint.hpp"
#include "sdclass/code.hpp"

namespace sdc {

BigInt factorial(int n);

BigInt binomial(int n, int r);

// Number of distinct self-dual codes of even length n: the product of
// (2^i + 1) over i = 1 .. n/2 - 1.
BigInt total_count(int n);

struct CheckResult {
  BigInt lhs;
  BigInt rhs;
  bool pass = false;
};

// lhs = sum of n!/|Aut(C_i)| over the family, rhs = total_count(n). Every
// order must divide n! exactly.
CheckResult mass_check(const std::vector<SelfDualCode>& u,
                       const std::vector<BigInt>& aut_orders, int n);

// lhs = sum of (n!/|Aut(C)|) * A_d(C) over codes of minimum weight <= d,
// rhs = C(n,d) * product of (2^i + 1) over i = 1 .. n/2 - 2.
CheckResult thompson_check(const std::vector<SelfDualCode>& u,
                           const std::vector<BigInt>& aut_orders, int n, int d);

// "(n, check, lhs, rhs, PASS)" with decimal integers.
std::string report_line(int n, const std::string& check, const CheckResult& r);

}  // namespace sdc
