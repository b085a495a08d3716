#include "feclab/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace feclab {

namespace {

std::string fmt(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_quotes) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        in_quotes = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (in_quotes) throw std::runtime_error("csv: unterminated quote");
  return fields;
}

template <typename T>
T parse_num(const std::string& s, const char* column) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::runtime_error(std::string("csv: bad value '") + s + "' in column " + column);
  }
  return v;
}

}  // namespace

std::string csv_row(const PointResult& r) {
  const auto& pt = r.point;
  std::string snr, p;
  if (const auto* awgn = std::get_if<Awgn>(&pt.channel)) snr = fmt(awgn->snr_db);
  else p = fmt(std::get<Bsc>(pt.channel).p);

  std::string row;
  row += quoted(pt.code.to_spec()) + ',';
  row += channel_name(pt.channel) + ',';
  row += snr + ',' + p + ',';
  row += fmt(pt.poz) + ',';
  row += std::string(policy_name(pt.policy)) + ',';
  row += std::to_string(pt.q_levels) + ',' + std::to_string(pt.frame_len) + ',';
  row += std::to_string(r.info_bits) + ',' + std::to_string(r.bit_errors) + ',' + fmt(r.ber) + ',';
  row += std::to_string(r.compares) + ',' + std::to_string(r.equal_compares) + ',';
  row += fmt(r.equality_fraction) + ',' + std::to_string(pt.master_seed);
  return row;
}

void write_csv(const std::vector<PointResult>& results, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : results) out << csv_row(r) << '\n';
}

void write_csv(const std::vector<PointResult>& results, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open '" + path.string() + "' for writing");
  write_csv(results, f);
  f.flush();
  if (!f) throw std::ios_base::failure("write to '" + path.string() + "' failed");
}

std::vector<PointResult> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw std::runtime_error("csv: unexpected header");

  std::vector<PointResult> out;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 15) throw std::runtime_error("csv: expected 15 columns");
    PointResult r;
    auto& pt = r.point;
    pt.code = parse_code_spec(f[0]);
    if (f[1] == "awgn" || f[1] == "awgn_ebn0") {
      pt.channel = Awgn{parse_num<double>(f[2], "snr_db"), 1.0 / pt.code.outputs(),
                        f[1] == "awgn" ? SnrConvention::EsN0 : SnrConvention::EbN0};
    } else if (f[1] == "bsc") {
      pt.channel = Bsc{parse_num<double>(f[3], "bsc_p")};
    } else {
      throw std::runtime_error("csv: unknown channel '" + f[1] + "'");
    }
    pt.poz = parse_num<double>(f[4], "poz");
    pt.policy = parse_policy(f[5]);
    pt.q_levels = parse_num<int>(f[6], "q_levels");
    pt.frame_len = parse_num<int>(f[7], "frame_len");
    r.info_bits = parse_num<std::uint64_t>(f[8], "info_bits");
    r.bit_errors = parse_num<std::uint64_t>(f[9], "bit_errors");
    r.ber = parse_num<double>(f[10], "ber");
    r.compares = parse_num<std::uint64_t>(f[11], "compares");
    r.equal_compares = parse_num<std::uint64_t>(f[12], "equal_compares");
    r.equality_fraction = parse_num<double>(f[13], "equality_fraction");
    pt.master_seed = parse_num<std::uint64_t>(f[14], "master_seed");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace feclab
