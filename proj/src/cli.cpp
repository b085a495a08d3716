#include "feclab/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "feclab/csv.hpp"
#include "feclab/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace feclab {

namespace {

constexpr const char* kDefaultCode = "rate=1/2;memory=2;polys=5,7";

struct Options {
  std::vector<std::string> codes;
  std::string channel = "awgn";
  std::vector<std::string> snr_db;
  std::vector<std::string> snr_range;
  std::vector<std::string> bsc_p;
  std::vector<std::string> poz;
  std::vector<std::string> poz_range;
  std::string policy = "zero";
  std::string q = "2";
  int frame_len = 1024;
  std::uint64_t min_bits = 1'000'000;
  std::uint64_t min_errors = 100;
  std::optional<std::uint64_t> seed;
  std::string out;
  int threads = 0;
  bool header = false;
  std::string figure;
  std::string snr_convention = "esn0";
};

void add_budget_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--frame-len", o.frame_len, "Information bits per frame")->capture_default_str();
  cmd->add_option("--min-bits", o.min_bits, "Minimum information bits per point")
      ->capture_default_str();
  cmd->add_option("--min-errors", o.min_errors, "Bit errors to collect before stopping")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Master seed (default: $FEC_LAB_SEED, else 1)");
  cmd->add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)");
  cmd->add_option("--snr-convention", o.snr_convention,
                  "What the AWGN dB value measures: esn0 (per coded symbol) | ebn0 (per info bit)")
      ->capture_default_str();
}

SnrConvention parse_convention(const std::string& s) {
  if (s == "esn0") return SnrConvention::EsN0;
  if (s == "ebn0") return SnrConvention::EbN0;
  throw std::invalid_argument("unknown SNR convention '" + s + "' (expected esn0|ebn0)");
}

void add_grid_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--code", o.codes, "Code spec rate=1/n;memory=m;polys=o1,o2,...");
  cmd->add_option("--channel", o.channel, "awgn | bsc")->capture_default_str();
  cmd->add_option("--snr-db", o.snr_db, "Eb/N0 in dB (comma list)");
  cmd->add_option("--snr-range", o.snr_range, "Eb/N0 range a:b:step");
  cmd->add_option("--bsc-p", o.bsc_p, "BSC flip probability (comma list or a:b:step)");
  cmd->add_option("--poz", o.poz, "Probability of zero in the source (comma list)");
  cmd->add_option("--poz-range", o.poz_range, "PoZ range a:b:step");
  cmd->add_option("--policy", o.policy, "Tie-break policy: random|zero|one (comma list)")
      ->capture_default_str();
  cmd->add_option("--q", o.q, "Quantizer levels, 2 = hard (comma list)")->capture_default_str();
  add_budget_options(cmd, o);
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("FEC_LAB_SEED"); env && *env) {
    std::uint64_t v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::invalid_argument("FEC_LAB_SEED is not an unsigned integer");
    }
    return v;
  }
  return 1;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(part);
  }
  return out;
}

std::vector<double> values(const std::vector<std::string>& lists,
                           const std::vector<std::string>& ranges) {
  std::vector<double> out;
  for (const auto& l : lists) {
    auto v = parse_value_list(l);
    out.insert(out.end(), v.begin(), v.end());
  }
  for (const auto& r : ranges) {
    auto v = parse_range(r);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

SweepGrid grid_from(const Options& o) {
  SweepGrid g;
  for (const auto& p : split_list({o.policy})) g.policies.push_back(parse_policy(p));
  for (const auto& q : split_list({o.q})) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(q.data(), q.data() + q.size(), v);
    if (q.empty() || ec != std::errc{} || ptr != q.data() + q.size()) {
      throw std::invalid_argument("malformed --q value '" + q + "'");
    }
    g.q_levels.push_back(v);
  }
  for (const auto& c : o.codes.empty() ? std::vector<std::string>{kDefaultCode} : o.codes) {
    g.codes.push_back(parse_code_spec(c));
  }
  if (o.channel == "awgn") {
    g.channel = ChannelKind::Awgn;
    if (!o.bsc_p.empty()) throw std::invalid_argument("--bsc-p requires --channel bsc");
    g.channel_params = values(o.snr_db, o.snr_range);
    if (g.channel_params.empty()) throw std::invalid_argument("awgn channel needs --snr-db or --snr-range");
  } else if (o.channel == "bsc") {
    g.channel = ChannelKind::Bsc;
    if (!o.snr_db.empty() || !o.snr_range.empty()) {
      throw std::invalid_argument("--snr-db/--snr-range require --channel awgn");
    }
    g.channel_params = values(o.bsc_p, {});
    if (g.channel_params.empty()) throw std::invalid_argument("bsc channel needs --bsc-p");
  } else {
    throw std::invalid_argument("unknown channel '" + o.channel + "' (expected awgn|bsc)");
  }
  g.poz = values(o.poz, o.poz_range);
  if (g.poz.empty()) g.poz = {0.5};
  g.frame_len = o.frame_len;
  g.min_info_bits = o.min_bits;
  g.min_bit_errors = o.min_errors;
  g.master_seed = resolve_seed(o);
  g.snr_convention = parse_convention(o.snr_convention);
  return g;
}

void emit(const std::vector<PointResult>& results, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    write_csv(results, out);
  } else {
    write_csv(results, std::filesystem::path(o.out));
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convolutional code / Viterbi tie-break laboratory", "fec_lab"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "Simulate one point and print its CSV row");
  add_grid_options(run, o);
  run->add_flag("--header", o.header, "Print the CSV header before the row");

  auto* sweep = app.add_subcommand("sweep", "Simulate a grid and write CSV");
  add_grid_options(sweep, o);
  sweep->add_option("--out", o.out, "Output CSV path (default: stdout)");

  auto* figure = app.add_subcommand("figure", "Run a preset grid: fig3|fig4|fig5|fig6|fig7");
  figure->add_option("name", o.figure, "Preset name")->required();
  add_budget_options(figure, o);
  figure->add_option("--out", o.out, "Output CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

#ifdef _OPENMP
  if (o.threads > 0) omp_set_num_threads(o.threads);
#endif

  try {
    if (run->parsed()) {
      SweepGrid g = grid_from(o);
      if (g.codes.size() != 1 || g.channel_params.size() != 1 || g.poz.size() != 1 ||
          g.policies.size() != 1 || g.q_levels.size() != 1) {
        throw std::invalid_argument("run takes exactly one value per axis; use sweep for grids");
      }
      ExperimentPoint pt = expand_grid(g).front();
      pt.master_seed = g.master_seed;
      auto r = run_point(pt);
      if (o.header) out << kCsvHeader << '\n';
      out << csv_row(r) << '\n';
    } else if (sweep->parsed()) {
      emit(run_sweep(expand_grid(grid_from(o))), o, out);
    } else {
      SweepGrid base;
      base.frame_len = o.frame_len;
      base.min_info_bits = o.min_bits;
      base.min_bit_errors = o.min_errors;
      base.master_seed = resolve_seed(o);
      base.snr_convention = parse_convention(o.snr_convention);
      emit(run_sweep(expand_grid(figure_preset(o.figure, base))), o, out);
    }
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace feclab
