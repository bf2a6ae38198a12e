#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdclass/canonical.hpp"
#include "sdclass/database.hpp"
#include "sdclass/engine.hpp"
#include "sdclass/stats.hpp"
#include "sdclass/verify.hpp"

namespace {

int cmd_gen(sdc::GenOptions opt) {
  sdc::GenReport rep = sdc::run_generation(opt);
  for (const std::string& line : rep.lines) std::cout << line << "\n";
  std::cout << "children considered=" << rep.counters.considered
            << " canonical forms computed=" << rep.counters.canonical
            << " accepted=" << rep.counters.accepted << "\n";
  for (const sdc::ClassDatabase& lvl : rep.levels)
    std::cout << "n=" << lvl.n << " classes=" << lvl.records.size() << "\n";
  if (!rep.all_pass) {
    std::cerr << "verification failed; see report lines above\n";
    return 1;
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  sdc::ClassDatabase db = sdc::read_db(path);
  bool ok = true;

  std::vector<sdc::SelfDualCode> codes;
  std::vector<sdc::BigInt> orders;
  std::set<std::string> canon_seen;
  int dmax = 0;
  for (size_t i = 0; i < db.records.size(); ++i) {
    const sdc::DbRecord& r = db.records[i];
    sdc::CanonicalOutcome co = sdc::canonical_outcome(r.code);
    if (co.aut.order != r.aut_order) {
      std::cerr << "record " << i << ": stored aut order " << r.aut_order
                << " != recomputed " << co.aut.order << "\n";
      ok = false;
    }
    std::string key;
    for (int row = 0; row < co.canon.k; ++row)
      key += co.canon.gen.row(row).to_string();
    if (!canon_seen.insert(key).second) {
      std::cerr << "record " << i << ": duplicate equivalence class\n";
      ok = false;
    }
    codes.push_back(r.code);
    orders.push_back(co.aut.order);
    dmax = std::max(dmax, r.code.min_weight);
  }

  sdc::CheckResult mass = sdc::mass_check(codes, orders, db.n);
  std::cout << sdc::report_line(db.n, "mass", mass) << "\n";
  ok = ok && mass.pass;
  for (int d = 2; d <= dmax; d += 2) {
    sdc::CheckResult th = sdc::thompson_check(codes, orders, db.n, d);
    std::cout << sdc::report_line(db.n, "thompson d=" + std::to_string(d), th)
              << "\n";
    ok = ok && th.pass;
  }
  return ok ? 0 : 1;
}

int cmd_stats(const std::string& path) {
  sdc::ClassDatabase db = sdc::read_db(path);
  std::cout << sdc::render_stats(sdc::make_stats(db));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exhaustive classification of binary self-dual codes"};
  app.require_subcommand(1);

  sdc::GenOptions opt;
  CLI::App* gen = app.add_subcommand("gen", "generate every class up to a length");
  gen->add_option("--to-length", opt.to_length, "even target length, 2 to 40")
      ->required();
  CLI::Option* jobs_opt = gen->add_option("--jobs", opt.jobs, "worker threads");
  gen->add_option("--from", opt.from_db, "database file holding the root level");
  gen->add_option("--out", opt.out_dir, "output directory for database files");
  gen->add_option("--checkpoint", opt.checkpoint, "journal file for kill/resume");
  gen->add_flag("--force", opt.force, "allow target lengths beyond 32");

  std::string db_path;
  CLI::App* verify = app.add_subcommand("verify", "recheck a database file");
  verify->add_option("--db", db_path, "database file")->required();
  CLI::App* stats = app.add_subcommand("stats", "statistics for a database file");
  stats->add_option("--db", db_path, "database file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      if (jobs_opt->count() == 0) {
        const char* env = std::getenv("SDCLASS_JOBS");
        opt.jobs = env ? std::max(1, std::atoi(env)) : 1;
      }
      return cmd_gen(opt);
    }
    if (verify->parsed()) return cmd_verify(db_path);
    return cmd_stats(db_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
