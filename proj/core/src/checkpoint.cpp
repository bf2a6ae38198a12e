#include "sdclass/checkpoint.hpp"

#include <fstream>
#include <sstream>

#include "sdclass/errors.hpp"

namespace sdc {

std::uint64_t run_id(const std::vector<SelfDualCode>& roots, int to_length) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](char c) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  };
  for (const SelfDualCode& c : roots) {
    for (int i = 0; i < c.k; ++i)
      for (char ch : c.gen.row(i).to_string()) mix(ch);
    mix('|');
  }
  for (char ch : std::to_string(to_length)) mix(ch);
  return h;
}

namespace {

std::string hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace

void write_checkpoint_header(const std::string& path, std::uint64_t id,
                             int to_length) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw ParseError("checkpoint: cannot open " + path);
  f << "SDCKPT v1 id=" << hex16(id) << " to=" << to_length << "\n";
}

void append_checkpoint_block(const std::string& path,
                             const CheckpointBlock& b) {
  std::ofstream f(path, std::ios::app);
  if (!f) throw ParseError("checkpoint: cannot open " + path);
  f << "B n=" << b.n << " parent=" << b.parent_index
    << " children=" << b.records.size() << " considered=" << b.considered
    << " canon=" << b.canonical << "\n";
  for (const DbRecord& r : b.records) f << serialize_record(r);
  f << "E\n";
  f.flush();
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("checkpoint: cannot open " + path);

  std::string line;
  if (!std::getline(f, line) || line.rfind("SDCKPT v1 ", 0) != 0)
    throw ParseError("checkpoint: bad header in " + path);

  Checkpoint cp;
  {
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
      if (tok.rfind("id=", 0) == 0) cp.id = std::stoull(tok.substr(3), nullptr, 16);
      if (tok.rfind("to=", 0) == 0) cp.to_length = std::stoi(tok.substr(3));
    }
  }

  auto num_field = [](const std::string& l, const std::string& key) -> long long {
    std::istringstream ss(l);
    std::string tok;
    while (ss >> tok)
      if (tok.rfind(key + "=", 0) == 0) return std::stoll(tok.substr(key.size() + 1));
    throw ParseError("checkpoint: missing " + key);
  };

  while (std::getline(f, line)) {
    try {
      if (line.empty()) continue;
      if (line[0] != 'B') break;
      CheckpointBlock b;
      b.n = static_cast<int>(num_field(line, "n"));
      b.parent_index = static_cast<int>(num_field(line, "parent"));
      size_t children = static_cast<size_t>(num_field(line, "children"));
      b.considered = static_cast<std::uint64_t>(num_field(line, "considered"));
      b.canonical = static_cast<std::uint64_t>(num_field(line, "canon"));

      int k = b.n / 2;
      bool ok = true;
      for (size_t rec = 0; rec < children && ok; ++rec) {
        if (!std::getline(f, line) || line.rfind("# ", 0) != 0) {
          ok = false;
          break;
        }
        DbRecord r;
        std::istringstream ss(line);
        std::string tok;
        std::string aut;
        while (ss >> tok)
          if (tok.rfind("aut=", 0) == 0) aut = tok.substr(4);
        if (aut.empty()) {
          ok = false;
          break;
        }
        r.aut_order = BigInt(aut);
        BitMat g(k, b.n);
        for (int i = 0; i < k && ok; ++i) {
          if (!std::getline(f, line) || static_cast<int>(line.size()) != b.n ||
              line.find_first_not_of("01") != std::string::npos) {
            ok = false;
            break;
          }
          g.set_row(i, BitVec::from_string(line));
        }
        if (!ok) break;
        if (!std::getline(f, line) || !line.empty()) {
          ok = false;
          break;
        }
        r.code = SelfDualCode::from_generator(g);
        b.records.push_back(std::move(r));
      }
      if (!ok) break;
      if (!std::getline(f, line) || line != "E") break;
      cp.blocks.push_back(std::move(b));
    } catch (const std::exception&) {
      break;
    }
  }
  return cp;
}

}  // namespace sdc
