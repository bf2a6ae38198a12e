#include "sdclass/verify.hpp"

#include <cassert>

#include "sdclass/errors.hpp"

namespace sdc {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= r; ++i) {
    b *= n - r + i;
    b /= i;
  }
  return b;
}

BigInt total_count(int n) {
  if (n % 2 != 0 || n < 2) throw OddLength("total_count: n must be even and >= 2");
  BigInt p = 1;
  for (int i = 1; i <= n / 2 - 1; ++i) p *= (BigInt(1) << i) + 1;
  return p;
}

CheckResult mass_check(const std::vector<SelfDualCode>& u,
                       const std::vector<BigInt>& aut_orders, int n) {
  assert(u.size() == aut_orders.size());
  const BigInt fact = factorial(n);
  CheckResult r;
  r.lhs = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    assert(u[i].n == n);
    if (fact % aut_orders[i] != 0)
      throw NonDivisor("mass_check: |Aut| does not divide n!");
    r.lhs += fact / aut_orders[i];
  }
  r.rhs = total_count(n);
  r.pass = r.lhs == r.rhs;
  return r;
}

CheckResult thompson_check(const std::vector<SelfDualCode>& u,
                           const std::vector<BigInt>& aut_orders, int n, int d) {
  assert(u.size() == aut_orders.size());
  assert(d % 2 == 0);
  const BigInt fact = factorial(n);
  CheckResult r;
  r.lhs = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    assert(u[i].n == n);
    if (u[i].min_weight > d) continue;
    if (fact % aut_orders[i] != 0)
      throw NonDivisor("thompson_check: |Aut| does not divide n!");
    r.lhs += (fact / aut_orders[i]) * u[i].weight_count(d);
  }
  BigInt p = 1;
  for (int i = 1; i <= n / 2 - 2; ++i) p *= (BigInt(1) << i) + 1;
  r.rhs = binomial(n, d) * p;
  r.pass = r.lhs == r.rhs;
  return r;
}

std::string report_line(int n, const std::string& check, const CheckResult& r) {
  return "(" + std::to_string(n) + ", " + check + ", " + r.lhs.str() + ", " +
         r.rhs.str() + ", " + (r.pass ? "PASS" : "FAIL") + ")";
}

}  // namespace sdc
