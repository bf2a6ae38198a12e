#include "sdclass/engine.hpp"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <map>
#include <thread>

#include "sdclass/canonical.hpp"
#include "sdclass/checkpoint.hpp"
#include "sdclass/errors.hpp"
#include "sdclass/verify.hpp"

namespace sdc {

namespace {

CheckpointBlock process_parent(const SelfDualCode& code, int child_n,
                               int parent_index) {
  CheckpointBlock b;
  b.n = child_n;
  b.parent_index = parent_index;
  AutomorphismGroup aut = canonical_outcome(code).aut;
  for (const BitVec& x : extension_orbits(code, aut).reps) {
    SelfDualCode child = extend(code, x);
    ++b.considered;
    if (parent_test_fast(child) == FastVerdict::Reject) continue;
    ++b.canonical;
    auto [pass, child_aut] = parent_test_full(child);
    if (pass) b.records.push_back({std::move(child), child_aut.order});
  }
  return b;
}

}  // namespace

GenReport run_generation(const GenOptions& opt) {
  if (opt.to_length < 2 || opt.to_length % 2 != 0)
    throw ParseError("gen: target length must be even and >= 2");
  if (opt.to_length > 40)
    throw ParseError("gen: target length beyond 40 is not supported");
  if (opt.to_length > 32 && !opt.force)
    throw ParseError("gen: lengths beyond 32 need force");

  ClassDatabase roots;
  if (opt.from_db.empty()) {
    roots.n = 2;
    roots.k = 1;
    roots.records.push_back({SelfDualCode::i2(), BigInt(2)});
  } else {
    roots = read_db(opt.from_db);
  }
  std::sort(roots.records.begin(), roots.records.end(), record_less);
  if (roots.n > opt.to_length)
    throw ParseError("gen: roots are longer than the target");

  std::vector<SelfDualCode> root_codes;
  for (const DbRecord& r : roots.records) root_codes.push_back(r.code);
  const std::uint64_t id = run_id(root_codes, opt.to_length);

  std::map<std::pair<int, int>, CheckpointBlock> journal;
  const bool use_cp = !opt.checkpoint.empty();
  if (use_cp) {
    if (std::filesystem::exists(opt.checkpoint)) {
      Checkpoint cp = read_checkpoint(opt.checkpoint);
      if (cp.id != id || cp.to_length != opt.to_length)
        throw ParseError("gen: checkpoint belongs to a different run");
      for (CheckpointBlock& b : cp.blocks)
        journal[{b.n, b.parent_index}] = std::move(b);
    } else {
      write_checkpoint_header(opt.checkpoint, id, opt.to_length);
    }
  }

  std::filesystem::create_directories(opt.out_dir);
  auto db_path = [&](int n) {
    return (std::filesystem::path(opt.out_dir) / db_filename(n)).string();
  };

  GenReport rep;
  write_db(roots, db_path(roots.n));
  rep.levels.push_back(roots);

  std::vector<DbRecord> parents = roots.records;
  const int jobs = std::max(1, opt.jobs);

  for (int ln = roots.n + 2; ln <= opt.to_length; ln += 2) {
    const int np = static_cast<int>(parents.size());
    std::vector<CheckpointBlock> blocks(static_cast<size_t>(np));
    std::vector<bool> replayed(static_cast<size_t>(np), false);
    for (int p = 0; p < np; ++p) {
      auto it = journal.find({ln, p});
      if (it != journal.end()) {
        blocks[static_cast<size_t>(p)] = it->second;
        replayed[static_cast<size_t>(p)] = true;
      }
    }

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        try {
          for (int p = t; p < np; p += jobs) {
            if (replayed[static_cast<size_t>(p)]) continue;
            blocks[static_cast<size_t>(p)] =
                process_parent(parents[static_cast<size_t>(p)].code, ln, p);
          }
        } catch (...) {
          errors[static_cast<size_t>(t)] = std::current_exception();
        }
      });
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);

    if (use_cp)
      for (int p = 0; p < np; ++p)
        if (!replayed[static_cast<size_t>(p)])
          append_checkpoint_block(opt.checkpoint, blocks[static_cast<size_t>(p)]);

    ClassDatabase level;
    level.n = ln;
    level.k = ln / 2;
    for (CheckpointBlock& b : blocks) {
      rep.counters.considered += b.considered;
      rep.counters.canonical += b.canonical;
      for (DbRecord& r : b.records) level.records.push_back(std::move(r));
    }
    rep.counters.accepted += level.records.size();
    std::sort(level.records.begin(), level.records.end(), record_less);

    std::vector<SelfDualCode> codes;
    std::vector<BigInt> orders;
    int dmax = 0;
    for (const DbRecord& r : level.records) {
      codes.push_back(r.code);
      orders.push_back(r.aut_order);
      dmax = std::max(dmax, r.code.min_weight);
    }
    CheckResult mass = mass_check(codes, orders, ln);
    rep.lines.push_back(report_line(ln, "mass", mass));
    rep.all_pass = rep.all_pass && mass.pass;
    for (int d = 2; d <= dmax; d += 2) {
      CheckResult th = thompson_check(codes, orders, ln, d);
      rep.lines.push_back(report_line(ln, "thompson d=" + std::to_string(d), th));
      rep.all_pass = rep.all_pass && th.pass;
    }

    write_db(level, db_path(ln));
    rep.levels.push_back(level);
    if (!mass.pass) return rep;  // class loss or duplication: stop here
    parents = std::move(level.records);
  }
  return rep;
}

}  // namespace sdc
