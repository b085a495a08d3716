// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the exit status is non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "feclab/cli.hpp"
#include "feclab/ml_oracle.hpp"
#include "feclab/sweep.hpp"

using namespace feclab;
using enum TieBreakPolicy;

namespace {

constexpr std::uint64_t kSeed = 2015;

struct Check {
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) std::cout << "    first failures:\n";
      std::cout << "      " << what << '\n';
      ok = false;
    }
  }
};

double sep(const PointResult& lo, const PointResult& hi) {
  const double se = std::hypot(ber_stderr(lo), ber_stderr(hi));
  return se > 0 ? (hi.ber - lo.ber) / se : (hi.ber > lo.ber ? INFINITY : 0.0);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

PointResult find(const std::vector<PointResult>& rs, double param, double poz, int q,
                 TieBreakPolicy policy, int memory = 2) {
  for (const auto& r : rs) {
    const auto& pt = r.point;
    double p = std::holds_alternative<Awgn>(pt.channel) ? std::get<Awgn>(pt.channel).snr_db
                                                       : std::get<Bsc>(pt.channel).p;
    if (p == param && pt.poz == poz && pt.q_levels == q && pt.policy == policy &&
        pt.code.memory() == memory) {
      return r;
    }
  }
  throw std::logic_error("point not in results");
}

SweepGrid base_grid() {
  SweepGrid g;
  g.codes = {GeneratorSet(2, {05, 07})};
  g.master_seed = kSeed;
  return g;
}

// 1. Trellis search agrees with exhaustive ML on every frame and policy.
bool ml_equivalence() {
  Check c;
  std::mt19937_64 rng(kSeed);
  const std::vector<GeneratorSet> codes{GeneratorSet(2, {05, 07}), GeneratorSet(3, {015, 017}),
                                        GeneratorSet(4, {023, 035})};
  const int len = 10;
  int frames = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const auto& gs = codes[trial % 3];
    const int q = (trial / 3) % 2 ? 8 : 2;
    const bool term = (trial / 6) % 4 != 0;
    const auto trellis = build_trellis(gs);

    Bits msg(len);
    for (auto& b : msg) b = rng() & 1U;
    RandomStream ch(rng(), StreamLabel::Channel);
    auto coded = encode(msg, gs, term);
    Levels rx;
    if (q == 2 && trial % 2 == 0) {
      rx = hard_levels(bsc_apply(coded, 0.02 + 0.2 * (trial % 7) / 6.0, ch));
    } else {
      const double snr = -2.0 + (trial % 9);
      rx = quantize(awgn_apply(bpsk_modulate(coded), Awgn{snr, 0.5}, ch), q);
    }

    auto ml = ml_decode_bruteforce(rx, gs, q, len, term);
    for (auto policy : {Random, ZeroOriented, OneOriented}) {
      RandomStream ties(trial, StreamLabel::TieBreak);
      auto out = decode_block(rx, trellis, DecoderConfig{q, policy, term}, ties);
      auto metric = recompute_path_metric(out.bits, rx, trellis, q);
      c.expect(metric == ml.metric && out.final_metric == ml.metric,
               "frame " + std::to_string(trial) + " policy " + std::string(policy_name(policy)));
      if (policy == Random) {
        c.expect(std::binary_search(ml.argmin.begin(), ml.argmin.end(), pack_message(out.bits)),
                 "random output outside argmin set, frame " + std::to_string(trial));
      }
    }
    ++frames;
  }
  std::cout << "    " << frames << " frames x 3 policies\n";
  c.expect(frames >= 1000, "too few frames");
  return c.ok;
}

std::vector<PointResult> hard_poz_sweep() {
  auto g = base_grid();
  g.channel_params = {0.0};
  g.q_levels = {2};
  g.poz = {0.0, 0.25, 0.5, 0.75, 1.0};
  g.policies = {Random, ZeroOriented, OneOriented};
  return run_sweep(expand_grid(g));
}

// 2. BER against PoZ, hard input, 0 dB.
bool fig4_shape(const std::vector<PointResult>& rs) {
  Check c;
  const std::vector<double> poz{0.0, 0.25, 0.5, 0.75, 1.0};
  std::map<TieBreakPolicy, std::vector<double>> ber;
  for (auto policy : {Random, ZeroOriented, OneOriented}) {
    std::cout << "    " << policy_name(policy) << ':';
    for (double p : poz) {
      auto r = find(rs, 0.0, p, 2, policy);
      c.expect(r.info_bits >= 1'000'000, "budget below 10^6 bits");
      ber[policy].push_back(r.ber);
      std::cout << ' ' << fmt(r.ber);
    }
    std::cout << '\n';
  }
  const auto& rnd = ber[Random];
  const double ratio = *std::max_element(rnd.begin(), rnd.end()) / *std::min_element(rnd.begin(), rnd.end());
  std::cout << "    random max/min = " << fmt(ratio) << '\n';
  c.expect(ratio <= 1.1, "random policy not flat");
  for (std::size_t i = 1; i < poz.size(); ++i) {
    c.expect(ber[ZeroOriented][i] <= ber[ZeroOriented][i - 1], "zero-oriented increases at poz " + fmt(poz[i]));
    c.expect(ber[OneOriented][i] >= ber[OneOriented][i - 1], "one-oriented decreases at poz " + fmt(poz[i]));
  }
  auto a = find(rs, 0.0, 0.5, 2, Random), b = find(rs, 0.0, 0.5, 2, ZeroOriented),
       d = find(rs, 0.0, 0.5, 2, OneOriented);
  c.expect(std::abs(sep(a, b)) <= 3.0, "random vs zero differ at poz 0.5");
  c.expect(std::abs(sep(a, d)) <= 3.0, "random vs one differ at poz 0.5");
  c.expect(std::abs(sep(b, d)) <= 3.0, "zero vs one differ at poz 0.5");
  return c.ok;
}

// 3. Ratios at PoZ = 1.
bool poz1_ratios(const std::vector<PointResult>& rs) {
  Check c;
  const double zero = find(rs, 0.0, 1.0, 2, ZeroOriented).ber;
  const double rnd = find(rs, 0.0, 1.0, 2, Random).ber;
  const double one = find(rs, 0.0, 1.0, 2, OneOriented).ber;
  std::cout << "    random/zero = " << fmt(rnd / zero) << ", one/zero = " << fmt(one / zero) << '\n';
  c.expect(rnd / zero >= 1.4 && rnd / zero <= 2.6, "random/zero outside [1.4, 2.6]");
  c.expect(one / zero >= 1.7 && one / zero <= 3.1, "one/zero outside [1.7, 3.1]");
  return c.ok;
}

// 4. Equality fraction against SNR and Q; PoZ independence.
bool fig3_equality() {
  Check c;
  auto g = base_grid();
  g = figure_preset("fig3", g);
  auto half = run_sweep(expand_grid(g));
  g.poz = {0.1, 0.9};
  auto skew = run_sweep(expand_grid(g));
  const auto snrs = parse_range("-2:5:1");
  const std::vector<int> qs{2, 4, 8, 16};
  for (double snr : snrs) {
    std::cout << "    " << snr << " dB:";
    for (std::size_t k = 0; k < qs.size(); ++k) {
      auto r = find(half, snr, 0.5, qs[k], ZeroOriented);
      std::cout << ' ' << fmt(r.equality_fraction);
      if (k > 0) {
        auto coarser = find(half, snr, 0.5, qs[k - 1], ZeroOriented);
        c.expect(coarser.equality_fraction > r.equality_fraction,
                 "Q ordering at " + fmt(snr) + " dB, Q=" + std::to_string(qs[k]));
      }
      if (snr > snrs.front()) {
        auto lower = find(half, snr - 1.0, 0.5, qs[k], ZeroOriented);
        c.expect(r.equality_fraction < lower.equality_fraction,
                 "not decreasing in SNR at " + fmt(snr) + " dB, Q=" + std::to_string(qs[k]));
      }
      auto a = find(skew, snr, 0.1, qs[k], ZeroOriented), b = find(skew, snr, 0.9, qs[k], ZeroOriented);
      const double se = std::hypot(equality_stderr(a), equality_stderr(b));
      c.expect(std::abs(a.equality_fraction - b.equality_fraction) <= 3.0 * se,
               "poz dependence at " + fmt(snr) + " dB, Q=" + std::to_string(qs[k]));
    }
    std::cout << '\n';
  }
  return c.ok;
}

// 5. BER against SNR at PoZ = 0.
bool fig6_ordering() {
  Check c;
  auto rs = run_sweep(expand_grid(figure_preset("fig6", base_grid())));
  for (double snr : parse_range("-2:5:1")) {
    double gap[2] = {0, 0};
    int slot = 0;
    for (int q : {2, 8}) {
      auto one = find(rs, snr, 0.0, q, OneOriented), rnd = find(rs, snr, 0.0, q, Random),
           zero = find(rs, snr, 0.0, q, ZeroOriented);
      std::cout << "    " << snr << " dB Q=" << q << ": one " << fmt(one.ber) << " random "
                << fmt(rnd.ber) << " zero " << fmt(zero.ber) << '\n';
      c.expect(one.ber <= rnd.ber && rnd.ber <= zero.ber,
               "ordering at " + fmt(snr) + " dB, Q=" + std::to_string(q));
      if (q == 2 && snr <= 2.0) {
        c.expect(sep(one, rnd) >= 3.0 && sep(rnd, zero) >= 3.0,
                 "separation below 3 sigma at " + fmt(snr) + " dB");
      }
      gap[slot++] = zero.ber - one.ber;
    }
    c.expect(gap[0] > gap[1], "hard gap not above Q=8 gap at " + fmt(snr) + " dB");
  }
  return c.ok;
}

// 6. BSC surfaces, zero-oriented hard decoding, five codes.
bool fig7_property() {
  Check c;
  auto g = base_grid();
  g.codes = standard_half_rate_codes();
  g.channel = ChannelKind::Bsc;
  g.channel_params = {0.05, 0.1};
  g.q_levels = {2};
  g.poz = {0.0, 0.5, 1.0};
  g.policies = {ZeroOriented};
  auto rs = run_sweep(expand_grid(g));
  for (const auto& code : g.codes) {
    for (double p : g.channel_params) {
      auto a = find(rs, p, 0.0, 2, ZeroOriented, code.memory());
      auto b = find(rs, p, 0.5, 2, ZeroOriented, code.memory());
      auto d = find(rs, p, 1.0, 2, ZeroOriented, code.memory());
      std::cout << "    m=" << code.memory() << " p=" << p << ": " << fmt(a.ber) << ' '
                << fmt(b.ber) << ' ' << fmt(d.ber) << "  (" << fmt(sep(d, a)) << " sigma)\n";
      c.expect(a.ber >= b.ber && b.ber >= d.ber, "not non-increasing, m=" + std::to_string(code.memory()));
      c.expect(sep(d, a) >= 3.0, "PoZ 0 vs 1 below 3 sigma, m=" + std::to_string(code.memory()));
    }
  }
  return c.ok;
}

// 7. Figure presets are byte-reproducible, including across thread counts.
bool reproducibility() {
  Check c;
  const auto dir = std::filesystem::temp_directory_path() / "fec_lab_acceptance";
  std::filesystem::create_directories(dir);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  for (auto name : figure_names()) {
    std::string outputs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const auto path = dir / (std::string(name) + "_" + std::to_string(rep) + ".csv");
      const std::string threads = rep == 0 ? "1" : "4";
      const std::string n(name), out = path.string();
      const char* argv[] = {"fec_lab", "figure", n.c_str(), "--seed", "7", "--min-bits", "4096",
                            "--min-errors", "0", "--threads", threads.c_str(), "--out", out.c_str()};
      std::ostringstream so, se;
      int code = cli_main(static_cast<int>(std::size(argv)), argv, so, se);
      c.expect(code == 0, std::string(name) + " exited with " + std::to_string(code));
      outputs[rep] = slurp(path);
    }
    const auto rows = std::count(outputs[0].begin(), outputs[0].end(), '\n') - 1;
    std::cout << "    " << name << ": " << rows << " rows, " << outputs[0].size() << " bytes\n";
    c.expect(!outputs[0].empty() && outputs[0] == outputs[1], std::string(name) + " differs");
  }
  return c.ok;
}

// 8. Encoder, quantizer and normalization properties.
bool unit_properties() {
  Check c;
  std::mt19937_64 rng(kSeed);
  auto codes = standard_half_rate_codes();
  for (int i = 0; i < 10000; ++i) {
    const auto& gs = codes[i % codes.size()];
    const std::size_t len = 1 + rng() % 64;
    Bits a(len), b(len), x(len);
    for (std::size_t k = 0; k < len; ++k) {
      a[k] = rng() & 1U;
      b[k] = rng() & 1U;
      x[k] = a[k] ^ b[k];
    }
    auto ea = encode(a, gs, false), eb = encode(b, gs, false), ex = encode(x, gs, false);
    bool linear = true;
    for (std::size_t k = 0; k < ex.size(); ++k) linear = linear && ex[k] == (ea[k] ^ eb[k]);
    c.expect(linear, "linearity pair " + std::to_string(i));
  }

  // shift register for (5,7): r holds u[t], u[t-1], u[t-2]
  Bits impulse;
  int r0 = 0, r1 = 0, r2 = 0;
  for (int u : {1, 0, 0}) {
    r2 = r1;
    r1 = r0;
    r0 = u;
    impulse.push_back(static_cast<std::uint8_t>(r0 ^ r2));
    impulse.push_back(static_cast<std::uint8_t>(r0 ^ r1 ^ r2));
  }
  c.expect(impulse == Bits{1, 1, 0, 1, 1, 1}, "shift-register oracle");
  c.expect(encode(Bits{1, 0, 0}, codes[0], false) == impulse, "impulse response of (5,7)");

  for (int q : {2, 4, 8, 16}) {
    int prev = -1;
    bool mono = true;
    for (int i = 0; i < 10000; ++i) {
      int level = quantize(-2.0 + 4.0 * i / 9999.0, q);
      mono = mono && level >= prev;
      prev = level;
    }
    c.expect(mono, "quantizer monotonicity Q=" + std::to_string(q));
  }

  for (int i = 0; i < 100; ++i) {
    const auto& gs = codes[i % codes.size()];
    const auto t = build_trellis(gs);
    const int q = i % 2 ? 8 : 2;
    Bits msg(200);
    for (auto& b : msg) b = rng() & 1U;
    RandomStream ch(rng(), StreamLabel::Channel);
    auto rx = quantize(awgn_apply(bpsk_modulate(encode(msg, gs, true)), Awgn{0.0, 0.5}, ch), q);
    for (auto policy : {Random, ZeroOriented, OneOriented}) {
      RandomStream t1(i, StreamLabel::TieBreak), t2(i, StreamLabel::TieBreak);
      auto with = decode_block(rx, t, DecoderConfig{q, policy, true, true}, t1);
      auto without = decode_block(rx, t, DecoderConfig{q, policy, true, false}, t2);
      c.expect(with.bits == without.bits && with.final_metric == without.final_metric &&
                   with.equal_count == without.equal_count,
               "normalization changed frame " + std::to_string(i));
    }
  }
  return c.ok;
}

}  // namespace

int main() {
  int failed = 0;
  auto run = [&failed](int id, const std::string& name, const std::function<bool()>& fn) {
    std::cout << "[" << id << "] " << name << '\n';
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      std::cout << "    exception: " << e.what() << '\n';
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " ("
              << fmt(secs) << " s)\n"
              << std::flush;
    failed += ok ? 0 : 1;
  };

  std::vector<PointResult> poz_sweep;
  run(1, "ML equivalence against exhaustive search", ml_equivalence);
  run(2, "hard-input BER against PoZ at 0 dB", [&] {
    poz_sweep = hard_poz_sweep();
    return fig4_shape(poz_sweep);
  });
  run(3, "policy BER ratios at PoZ=1, 0 dB", [&] { return poz1_ratios(poz_sweep); });
  run(4, "equality fraction against SNR and Q", fig3_equality);
  run(5, "policy ordering against SNR at PoZ=0", fig6_ordering);
  run(6, "zero-oriented BSC BER falls with PoZ for five codes", fig7_property);
  run(7, "figure presets reproduce byte for byte", reproducibility);
  run(8, "encoder, quantizer and normalization properties", unit_properties);

  std::cout << (failed ? "FAILED: " + std::to_string(failed) + " criteria" : std::string("ALL CRITERIA PASSED"))
            << '\n';
  return failed ? 1 : 0;
}
