#include "sdclass/stats.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sdclass/verify.hpp"

namespace sdc {

StatsReport make_stats(const ClassDatabase& db) {
  StatsReport s;
  s.n = db.n;
  s.k = db.k;
  s.classes = static_cast<int>(db.records.size());

  std::map<int, std::vector<const DbRecord*>> by_d;
  for (const DbRecord& r : db.records) {
    by_d[r.code.min_weight].push_back(&r);
    if (r.code.doubly_even) ++s.type_ii;
    if (r.aut_order == 1) ++s.trivial_aut;
  }

  for (const auto& [d, recs] : by_d) {
    WeightClassStats w;
    w.d = d;
    w.classes = static_cast<int>(recs.size());
    std::set<std::vector<std::uint64_t>> enums;
    std::set<BigInt> orders;
    w.aut_min = recs.front()->aut_order;
    w.aut_max = recs.front()->aut_order;
    for (const DbRecord* r : recs) {
      if (r->code.doubly_even) ++w.doubly_even;
      enums.insert(r->code.weight_distribution);
      orders.insert(r->aut_order);
      w.aut_min = std::min(w.aut_min, r->aut_order);
      w.aut_max = std::max(w.aut_max, r->aut_order);
    }
    w.distinct_enumerators = static_cast<int>(enums.size());
    w.distinct_aut_orders = static_cast<int>(orders.size());
    s.per_d.push_back(std::move(w));
  }

  for (int p = 2; p <= db.n; ++p) {
    bool prime = p >= 2;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    BigInt pk = p;
    for (int k = 1;; ++k) {
      int codes = 0;
      for (const DbRecord& r : db.records)
        if (r.aut_order % pk == 0) ++codes;
      if (codes == 0) break;
      s.prime_powers.push_back({p, k, codes});
      pk *= p;
    }
  }

  s.a_k_floor = s.classes * factorial(db.n) / total_count(db.n);
  return s;
}

std::string render_stats(const StatsReport& s) {
  std::string out = "stats n=" + std::to_string(s.n) + " k=" + std::to_string(s.k) +
                    " classes=" + std::to_string(s.classes) +
                    " type2=" + std::to_string(s.type_ii) +
                    " trivial_aut=" + std::to_string(s.trivial_aut) + "\n";
  for (const WeightClassStats& w : s.per_d)
    out += "d=" + std::to_string(w.d) + " classes=" + std::to_string(w.classes) +
           " type2=" + std::to_string(w.doubly_even) +
           " enumerators=" + std::to_string(w.distinct_enumerators) +
           " aut_orders=" + std::to_string(w.distinct_aut_orders) +
           " aut_min=" + w.aut_min.str() + " aut_max=" + w.aut_max.str() + "\n";
  for (const PrimePowerRow& r : s.prime_powers)
    out += "p=" + std::to_string(r.p) + " k=" + std::to_string(r.k) +
           " codes=" + std::to_string(r.codes) + "\n";
  out += "a_k k=" + std::to_string(s.k) + " value=" + s.a_k_floor.str() + "\n";
  return out;
}

}  // namespace sdc
