#include "feclab/golden.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace feclab {

namespace {

template <typename T>
std::vector<T> read_ints(std::istringstream& is, int line_no) {
  std::vector<T> out;
  long long v = 0;
  while (is >> v) {
    if (v < 0 || v > 255) {
      throw std::runtime_error("golden line " + std::to_string(line_no) + ": value out of range");
    }
    out.push_back(static_cast<T>(v));
  }
  if (!is.eof()) throw std::runtime_error("golden line " + std::to_string(line_no) + ": bad integer");
  return out;
}

struct Partial {
  std::optional<GeneratorSet> code;
  std::optional<int> q;
  std::optional<TieBreakPolicy> policy;
  bool terminated = true;
  std::optional<Levels> received;
  std::optional<Bits> bits;
  std::optional<std::uint64_t> metric;
  bool any = false;

  GoldenVector finish(int line_no) const {
    if (!code || !q || !policy || !received || !bits || !metric) {
      throw std::runtime_error("golden record ending at line " + std::to_string(line_no) +
                               " is missing a field");
    }
    GoldenVector g{*code, *q, *policy, terminated, *received, *bits, *metric};
    validate_q_levels(g.q_levels);
    if (g.policy == TieBreakPolicy::Random) {
      throw std::runtime_error("golden record ending at line " + std::to_string(line_no) +
                               ": random policy is not reproducible");
    }
    return g;
  }
};

}  // namespace

std::vector<GoldenVector> read_golden_vectors(std::istream& in) {
  std::vector<GoldenVector> out;
  Partial cur;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.find_first_not_of(" \t") == std::string::npos) {
      if (cur.any) out.push_back(cur.finish(line_no));
      cur = Partial{};
      continue;
    }
    if (line.front() == '#') continue;
    std::istringstream is(line);
    std::string key;
    is >> key;
    cur.any = true;
    try {
      if (key == "code") {
        std::string spec;
        is >> spec;
        cur.code = parse_code_spec(spec);
      } else if (key == "q") {
        int q = 0;
        if (!(is >> q)) throw std::runtime_error("bad q");
        cur.q = q;
      } else if (key == "policy") {
        std::string p;
        is >> p;
        cur.policy = parse_policy(p);
      } else if (key == "terminated") {
        int t = 0;
        if (!(is >> t) || (t != 0 && t != 1)) throw std::runtime_error("bad terminated flag");
        cur.terminated = t == 1;
      } else if (key == "received") {
        cur.received = read_ints<std::uint8_t>(is, line_no);
      } else if (key == "bits") {
        cur.bits = read_ints<std::uint8_t>(is, line_no);
      } else if (key == "metric") {
        std::uint64_t m = 0;
        if (!(is >> m)) throw std::runtime_error("bad metric");
        cur.metric = m;
      } else {
        throw std::runtime_error("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("golden line " + std::to_string(line_no) + ": " + e.what());
    } catch (const std::runtime_error& e) {
      if (std::string(e.what()).rfind("golden", 0) == 0) throw;
      throw std::runtime_error("golden line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (cur.any) out.push_back(cur.finish(line_no));
  return out;
}

void write_golden_vectors(std::ostream& out, const std::vector<GoldenVector>& vectors) {
  auto write_list = [&out](const char* key, const std::vector<std::uint8_t>& v) {
    out << key;
    for (auto x : v) out << ' ' << static_cast<int>(x);
    out << '\n';
  };
  bool first = true;
  for (const auto& g : vectors) {
    if (!first) out << '\n';
    first = false;
    out << "code " << g.code.to_spec() << '\n'
        << "q " << g.q_levels << '\n'
        << "policy " << policy_name(g.policy) << '\n'
        << "terminated " << (g.terminated ? 1 : 0) << '\n';
    write_list("received", g.received);
    write_list("bits", g.bits);
    out << "metric " << g.metric << '\n';
  }
}

}  // namespace feclab
