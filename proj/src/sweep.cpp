#include "feclab/sweep.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace feclab {

namespace {

std::uint64_t hash_text(std::uint64_t h, std::string_view s) {
  for (char c : s) h = mix_seed(h, static_cast<unsigned char>(c));
  return mix_seed(h, s.size());
}

double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  }
  return v;
}

double snap(double v) { return std::round(v * 1e9) / 1e9; }

}  // namespace

std::uint64_t point_seed(std::uint64_t master_seed, const GeneratorSet& code,
                         const ChannelModel& channel, double poz, int q_levels) {
  std::uint64_t h = hash_text(master_seed, code.to_spec());
  if (const auto* awgn = std::get_if<Awgn>(&channel)) {
    h = mix_seed(h, awgn->convention == SnrConvention::EsN0 ? 1 : 3);
    h = mix_seed(h, std::bit_cast<std::uint64_t>(awgn->snr_db));
  } else {
    h = mix_seed(h, 2);
    h = mix_seed(h, std::bit_cast<std::uint64_t>(std::get<Bsc>(channel).p));
  }
  h = mix_seed(h, std::bit_cast<std::uint64_t>(poz));
  return mix_seed(h, static_cast<std::uint64_t>(q_levels));
}

std::vector<ExperimentPoint> expand_grid(const SweepGrid& grid) {
  if (grid.codes.empty() || grid.channel_params.empty() || grid.poz.empty() ||
      grid.policies.empty() || grid.q_levels.empty()) {
    throw std::invalid_argument("sweep: every grid axis needs at least one value");
  }
  std::vector<ExperimentPoint> points;
  for (const auto& code : grid.codes) {
    for (double param : grid.channel_params) {
      ChannelModel ch = grid.channel == ChannelKind::Awgn
                            ? ChannelModel{Awgn{param, 1.0 / code.outputs(), grid.snr_convention}}
                            : ChannelModel{Bsc{param}};
      for (int q : grid.q_levels) {
        for (double poz : grid.poz) {
          for (auto policy : grid.policies) {
            ExperimentPoint pt;
            pt.code = code;
            pt.channel = ch;
            pt.poz = poz;
            pt.policy = policy;
            pt.q_levels = q;
            pt.frame_len = grid.frame_len;
            pt.min_info_bits = grid.min_info_bits;
            pt.min_bit_errors = grid.min_bit_errors;
            pt.master_seed = point_seed(grid.master_seed, code, ch, poz, q);
            validate(pt);
            points.push_back(std::move(pt));
          }
        }
      }
    }
  }
  return points;
}

std::vector<PointResult> run_sweep(const std::vector<ExperimentPoint>& points) {
  if (points.empty()) throw std::invalid_argument("sweep: empty grid");
  std::vector<PointResult> results(points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i) {
    results[i] = run_point_serial(points[i]);
  }
  return results;
}

std::vector<PointResult> run_sweep_serial(const std::vector<ExperimentPoint>& points) {
  if (points.empty()) throw std::invalid_argument("sweep: empty grid");
  std::vector<PointResult> results;
  results.reserve(points.size());
  for (const auto& pt : points) results.push_back(run_point_serial(pt));
  return results;
}

std::vector<std::string_view> figure_names() { return {"fig3", "fig4", "fig5", "fig6", "fig7"}; }

std::vector<GeneratorSet> standard_half_rate_codes() {
  return {GeneratorSet(2, {05, 07}), GeneratorSet(3, {015, 017}), GeneratorSet(4, {023, 035}),
          GeneratorSet(5, {053, 075}), GeneratorSet(6, {0133, 0171})};
}

SweepGrid figure_preset(std::string_view name, const SweepGrid& base) {
  using enum TieBreakPolicy;
  SweepGrid g = base;
  g.codes = {GeneratorSet(2, {05, 07})};
  g.channel = ChannelKind::Awgn;
  const std::vector<TieBreakPolicy> all = {Random, ZeroOriented, OneOriented};
  if (name == "fig3") {
    g.channel_params = parse_range("-2:5:1");
    g.q_levels = {2, 4, 8, 16};
    g.policies = {ZeroOriented};
    g.poz = {0.5};
  } else if (name == "fig4" || name == "fig5") {
    g.channel_params = {0.0};
    g.q_levels = {name == "fig4" ? 2 : 8};
    g.policies = all;
    g.poz = parse_range("0:1:0.1");
  } else if (name == "fig6") {
    g.channel_params = parse_range("-2:5:1");
    g.q_levels = {2, 8};
    g.policies = all;
    g.poz = {0.0};
  } else if (name == "fig7") {
    g.codes = standard_half_rate_codes();
    g.channel = ChannelKind::Bsc;
    g.channel_params = parse_range("0.01:0.2:0.01");
    g.q_levels = {2};
    g.policies = {ZeroOriented};
    g.poz = parse_range("0:1:0.1");
  } else {
    throw std::invalid_argument("unknown figure preset '" + std::string(name) +
                                "' (expected fig3|fig4|fig5|fig6|fig7)");
  }
  return g;
}

std::vector<double> parse_range(std::string_view text) {
  auto c1 = text.find(':');
  auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw std::invalid_argument("range must be a:b:step, got '" + std::string(text) + "'");
  }
  const double a = parse_double(text.substr(0, c1));
  const double b = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
  const double step = parse_double(text.substr(c2 + 1));
  if (!(step > 0.0) || b < a) {
    throw std::invalid_argument("range needs step > 0 and b >= a, got '" + std::string(text) + "'");
  }
  const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
  if (count > 100000) throw std::invalid_argument("range has too many points");
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(snap(a + static_cast<double>(i) * step));
  return out;
}

std::vector<double> parse_value_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    if (item.find(':') != std::string_view::npos) {
      auto r = parse_range(item);
      out.insert(out.end(), r.begin(), r.end());
    } else {
      out.push_back(parse_double(item));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace feclab
