#include "sdclass/database.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sdclass/errors.hpp"

namespace sdc {

bool record_less(const DbRecord& a, const DbRecord& b) {
  const int k = a.code.k;
  for (int i = 0; i < k; ++i) {
    BitVec ra = a.code.gen.row(i), rb = b.code.gen.row(i);
    if (!(ra == rb)) return string_less(ra, rb);
  }
  return false;
}

std::string serialize_record(const DbRecord& r) {
  const SelfDualCode& c = r.code;
  std::string out = "# d=" + std::to_string(c.min_weight) +
                    " aut=" + r.aut_order.str() +
                    " w2=" + std::to_string(c.weight_count(2)) +
                    " w4=" + std::to_string(c.weight_count(4)) +
                    " w6=" + std::to_string(c.weight_count(6)) +
                    " w8=" + std::to_string(c.weight_count(8)) + "\n";
  for (int i = 0; i < c.k; ++i) out += c.gen.row(i).to_string() + "\n";
  out += "\n";
  return out;
}

void write_db(ClassDatabase db, const std::string& path) {
  std::sort(db.records.begin(), db.records.end(), record_less);
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw ParseError("write_db: cannot open " + tmp);
    f << "SDDB v1 n=" << db.n << " k=" << db.k << " count=" << db.records.size()
      << "\n";
    for (const DbRecord& r : db.records) f << serialize_record(r);
    f.flush();
    if (!f) throw ParseError("write_db: write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw ParseError("write_db: rename failed for " + path);
}

namespace {

// "key=value" value extraction; tokens are space-separated.
std::string field(const std::string& line, const std::string& key,
                  const std::string& where) {
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok)
    if (tok.rfind(key + "=", 0) == 0) return tok.substr(key.size() + 1);
  throw ParseError("read_db: missing " + key + " in " + where);
}

}  // namespace

ClassDatabase read_db(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("read_db: cannot open " + path);

  std::string line;
  if (!std::getline(f, line) || line.rfind("SDDB v1 ", 0) != 0)
    throw ParseError("read_db: bad header in " + path);

  ClassDatabase db;
  db.n = std::stoi(field(line, "n", "header"));
  db.k = std::stoi(field(line, "k", "header"));
  size_t count = std::stoul(field(line, "count", "header"));
  if (db.n != 2 * db.k) throw ParseError("read_db: n != 2k in header");

  for (size_t rec = 0; rec < count; ++rec) {
    std::string where = "record " + std::to_string(rec);
    if (!std::getline(f, line) || line.rfind("# ", 0) != 0)
      throw ParseError("read_db: missing info line in " + where);

    DbRecord r;
    int d = std::stoi(field(line, "d", where));
    r.aut_order = BigInt(field(line, "aut", where));
    std::uint64_t w[4];
    w[0] = std::stoull(field(line, "w2", where));
    w[1] = std::stoull(field(line, "w4", where));
    w[2] = std::stoull(field(line, "w6", where));
    w[3] = std::stoull(field(line, "w8", where));

    BitMat g(db.k, db.n);
    for (int i = 0; i < db.k; ++i) {
      if (!std::getline(f, line) ||
          static_cast<int>(line.size()) != db.n ||
          line.find_first_not_of("01") != std::string::npos)
        throw ParseError("read_db: bad generator row in " + where);
      g.set_row(i, BitVec::from_string(line));
    }
    if (!std::getline(f, line) || !line.empty())
      throw ParseError("read_db: missing blank separator in " + where);

    try {
      r.code = SelfDualCode::from_generator(g);
    } catch (const std::runtime_error& e) {
      throw ParseError("read_db: invalid code in " + where + ": " + e.what());
    }
    if (!(r.code.gen == g))
      throw ParseError("read_db: generator not systematic in " + where);
    if (r.code.min_weight != d)
      throw ParseError("read_db: stored d mismatch in " + where);
    for (int i = 0; i < 4; ++i)
      if (r.code.weight_count(2 * i + 2) != w[i])
        throw ParseError("read_db: stored weight count mismatch in " + where);
    if (r.aut_order <= 0) throw ParseError("read_db: bad aut order in " + where);
    db.records.push_back(std::move(r));
  }
  return db;
}

std::string db_filename(int n) {
  std::string s = std::to_string(n);
  if (s.size() < 2) s = "0" + s;
  return "n" + s + ".sddb";
}

}  // namespace sdc
