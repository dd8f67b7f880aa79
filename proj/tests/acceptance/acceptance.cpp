// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every seed is fixed here; nothing is re-drawn on failure.
//
//   C3  Simon sweep            seeds 1000..1009 for each alpha
//   C4  Simon scaling          the alpha 0.1 runs of C3
//   C5  Pitman-Yor             seeds 2000..2009
//   C6  conjunct               seeds 3000..3009
//   C7  Zipf iid 4000+r; shuffle 5000+r and bigram 6000+r of conjunct seed 3000
//   C8  a vs zeta grid         seeds 7000..7009 per cell
//   C9  kernel replays         seed 8000
//   C10 determinism            seed 9000
//   C12 timing                 seed 1000

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lrclab/corpusio/chat.hpp"
#include "lrclab/corpusio/tokens.hpp"
#include "lrclab/genmodels/controls.hpp"
#include "lrclab/genmodels/models.hpp"
#include "lrclab/lab/run_analysis.hpp"
#include "lrclab/lab/sweep.hpp"
#include "lrclab/lrcstats/analysis.hpp"
#include "lrclab/lrcstats/autocorrelation.hpp"
#include "lrclab/lrcstats/intervals.hpp"
#include "lrclab/lrcstats/scaling.hpp"
#include "lrclab/seqcore/csv.hpp"
#include "lrclab/seqcore/moments.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace lrc;

namespace {

constexpr std::size_t kLength = 1000000;
constexpr std::size_t kReplicates = 10;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

gen::ModelParams model(gen::Model m, double alpha, double a, double b, std::uint64_t seed,
                       std::size_t length = kLength) {
  gen::ModelParams p;
  p.model = m;
  p.alpha = alpha;
  p.a = a;
  p.b = b;
  p.length = length;
  p.seed = seed;
  return p;
}

bool all_positive(const AcfCurve& curve) {
  return std::all_of(curve.points.begin(), curve.points.end(),
                     [](const AcfPoint& p) { return p.c > 0.0; });
}

std::vector<std::uint64_t> frequencies(const TokenSequence& seq) {
  std::vector<std::uint64_t> f;
  for (const auto& e : stats::rank_frequency(seq).entries) f.push_back(e.freq);
  return f;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- C1 ---------------------------------------------------------------

Outcome acf_oracle() {
  std::mt19937_64 gen(1);
  double worst = 0.0;
  std::size_t checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t len = 200 + gen() % 1801;
    std::vector<std::int64_t> raw(len);
    for (auto& x : raw) x = 1 + static_cast<std::int64_t>(gen() % 200);
    const IntervalSequence ints(raw, 16);
    const auto curve = stats::acf_curve(ints);
    const auto r = ints.as_reals();
    for (const auto& p : curve.points) {
      worst = std::max(worst, std::abs(p.c - oracle::acf(r, p.s)));
      ++checked;
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", worst);
  return {worst <= 1e-9, std::string("max |diff| ") + buf + " over " +
                             std::to_string(checked) + " points"};
}

// --- C2 ---------------------------------------------------------------

Outcome romeo() {
  const auto seq = corpus::read_tokens("Oh Romeo Romeo wherefore art thou Romeo");
  SymbolId romeo = 0;
  SymbolId wherefore = 0;
  if (!seq.find_symbol("romeo", romeo) || !seq.find_symbol("wherefore", wherefore)) {
    return {false, "fixture words missing"};
  }
  const std::vector<SymbolId> one{romeo};
  const std::vector<SymbolId> two{romeo, wherefore};
  const auto a = stats::extract_intervals(seq, one, 0);
  const auto b = stats::extract_intervals(seq, two, 0);
  const auto vec = [](const IntervalSequence& s) {
    return std::vector<std::int64_t>(s.intervals().begin(), s.intervals().end());
  };
  const bool ok = vec(a) == std::vector<std::int64_t>{1, 4} &&
                  vec(b) == std::vector<std::int64_t>{1, 1, 3};
  return {ok, ok ? "[1,4] and [1,1,3]" : "interval mismatch"};
}

// --- C3, C4 -----------------------------------------------------------

// Zipf and Heaps exponents of the alpha 0.1 runs, kept for C4.
std::vector<double> simon_xi;
std::vector<double> simon_zeta;

Outcome simon_sweep() {
  const double alphas[] = {0.1, 0.2, 0.3, 0.4};
  const double targets[] = {0.156, 0.133, 0.118, 0.095};
  bool pass = true;
  std::string detail;
  for (int i = 0; i < 4; ++i) {
    std::vector<double> gammas;
    std::size_t positive = 0;
    for (std::size_t r = 0; r < kReplicates; ++r) {
      auto report = stats::analyze(gen::generate(model(gen::Model::simon, alphas[i], 0, 0, 1000 + r)));
      gammas.push_back(report.gamma.exponent);
      if (all_positive(report.acf)) ++positive;
      if (i == 0) {
        simon_xi.push_back(report.zipf.exponent);
        simon_zeta.push_back(report.heaps.exponent);
      }
    }
    const double mean = moments(gammas).mean;
    const bool ok = std::abs(mean - targets[i]) <= 0.04 && positive >= 9;
    pass = pass && ok;
    detail += "alpha " + fmt(alphas[i], 1) + ": gamma " + fmt(mean) + " (target " +
              fmt(targets[i], 3) + "), positive " + std::to_string(positive) + "/10; ";
  }
  return {pass, detail};
}

Outcome simon_scaling() {
  if (simon_xi.size() != kReplicates) return {false, "Simon alpha 0.1 runs missing"};
  const double xi = moments(simon_xi).mean;
  const double zeta = moments(simon_zeta).mean;
  const bool ok = xi >= 0.9 && xi <= 1.1 && zeta >= 0.95 && zeta <= 1.0;
  return {ok, "mean xi " + fmt(xi) + " in [0.9,1.1], mean zeta " + fmt(zeta) + " in [0.95,1.0]"};
}

// --- C5, C6 -----------------------------------------------------------

Outcome pitman_yor() {
  std::size_t rejected = 0;
  std::vector<double> zetas;
  for (std::size_t r = 0; r < kReplicates; ++r) {
    const auto report =
        stats::analyze(gen::generate(model(gen::Model::pitman_yor, 0, 0.68, 0.8, 2000 + r)));
    if (!report.verdict.holds) ++rejected;
    zetas.push_back(report.heaps.exponent);
  }
  const double zeta = moments(zetas).mean;
  const bool ok = rejected >= 8 && std::abs(zeta - 0.68) <= 0.05;
  return {ok, "LRC rejected " + std::to_string(rejected) + "/10, mean zeta " + fmt(zeta)};
}

std::optional<TokenSequence> conjunct_source;

Outcome conjunct() {
  std::size_t holds = 0;
  std::vector<double> gammas;
  for (std::size_t r = 0; r < kReplicates; ++r) {
    auto seq = gen::generate(model(gen::Model::conjunct, 0, 0.68, 0.8, 3000 + r));
    const auto report = stats::analyze(seq);
    if (report.verdict.holds) ++holds;
    gammas.push_back(report.gamma.exponent);
    if (r == 0) conjunct_source = std::move(seq);
  }
  const double mean = moments(gammas).mean;
  const bool ok = std::abs(mean - 0.126) <= 0.06 && holds >= 8;
  return {ok, "mean gamma " + fmt(mean) + " (target 0.126), LRC " + std::to_string(holds) + "/10"};
}

// --- C7 ---------------------------------------------------------------

Outcome controls() {
  std::string detail;

  std::size_t zipf_rejected = 0;
  std::vector<double> xis;
  for (std::size_t r = 0; r < kReplicates; ++r) {
    const auto report = stats::analyze(gen::generate_zipf_iid(50000, 1.0, kLength, 4000 + r));
    if (!report.verdict.holds) ++zipf_rejected;
    xis.push_back(report.zipf.exponent);
  }
  const double xi = moments(xis).mean;
  const bool zipf_ok = std::abs(xi - 1.0) <= 0.05 && zipf_rejected >= 8;
  detail += "(i) zipf xi " + fmt(xi) + ", rejected " + std::to_string(zipf_rejected) + "/10; ";

  if (!conjunct_source) return {false, "conjunct seed 3000 run missing"};
  const TokenSequence& source = *conjunct_source;
  const auto source_report = stats::analyze(source);
  const auto source_freq = frequencies(source);
  std::size_t shuffle_rejected = 0;
  bool preserved = true;
  for (std::size_t r = 0; r < kReplicates; ++r) {
    const auto shuffled = gen::shuffle(source, 5000 + r);
    preserved = preserved && frequencies(shuffled) == source_freq &&
                shuffled.distinct_count() == source.distinct_count();
    if (!stats::analyze(shuffled).verdict.holds) ++shuffle_rejected;
  }
  const bool shuffle_ok = source_report.verdict.holds && preserved && shuffle_rejected >= 8;
  detail += std::string("(ii) source LRC ") + (source_report.verdict.holds ? "true" : "false") +
            ", counts preserved " + (preserved ? "yes" : "no") + ", shuffled rejected " +
            std::to_string(shuffle_rejected) + "/10; ";

  std::size_t bigram_rejected = 0;
  for (std::size_t r = 0; r < kReplicates; ++r) {
    const auto resampled = gen::generate_bigram(source, kLength, 6000 + r);
    if (!stats::analyze(resampled).verdict.holds) ++bigram_rejected;
  }
  const bool bigram_ok = bigram_rejected >= 8;
  detail += "(iii) bigram rejected " + std::to_string(bigram_rejected) + "/10";
  return {zipf_ok && shuffle_ok && bigram_ok, detail};
}

// --- C8 ---------------------------------------------------------------

Outcome discount_vs_heaps() {
  bool pass = true;
  std::string detail;
  for (double a : {0.3, 0.5, 0.68}) {
    for (double b : {0.1, 1.0}) {
      std::vector<double> zetas;
      for (std::size_t r = 0; r < kReplicates; ++r) {
        const auto seq = gen::generate(model(gen::Model::pitman_yor, 0, a, b, 7000 + r));
        zetas.push_back(stats::fit_heaps(stats::type_token_curve(seq)).exponent);
      }
      const double zeta = moments(zetas).mean;
      const bool ok = std::abs(zeta - a) <= 0.05;
      pass = pass && ok;
      detail += "a " + fmt(a, 2) + " b " + fmt(b, 1) + ": mean zeta " + fmt(zeta) + (ok ? "" : " (!)") +
                "; ";
    }
  }
  return {pass, detail};
}

// --- C9 ---------------------------------------------------------------

// Replays one step from `start` n times and returns counts per type, with
// the last slot for a new type.
std::vector<std::size_t> replay(const gen::GeneratorState& start, std::size_t n, gen::Rng& rng,
                                const std::function<SymbolId(gen::GeneratorState&, gen::Rng&)>& step) {
  std::vector<std::size_t> counts(start.vocabulary() + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    gen::GeneratorState s = start;
    ++counts[step(s, rng)];
  }
  return counts;
}

Outcome kernels() {
  constexpr std::size_t kReplays = 100000;
  // [x, y, x, z, x, z] and a longer history drawn from a Simon run.
  std::vector<std::vector<SymbolId>> histories{{0, 1, 0, 2, 0, 2}};
  {
    const auto seq = gen::generate(model(gen::Model::simon, 0.3, 0, 0, 8000, 40));
    histories.emplace_back(seq.tokens().begin(), seq.tokens().end());
  }
  const double alpha = 0.3;
  const double a = 0.5;
  const double b = 0.8;

  gen::Rng rng(8000);
  double min_p = 1.0;
  std::string detail;
  for (const auto& h : histories) {
    const auto plain = gen::GeneratorState::from_history(h);
    const auto discounted = gen::GeneratorState::from_history(h, a);
    const double t = double(plain.steps());
    const double k = double(plain.vocabulary());
    const auto counts = plain.counts();

    std::vector<double> simon;
    std::vector<double> py;
    std::vector<double> conj;
    const double eta = (a * k + b) / (t + b);
    for (auto c : counts) {
      simon.push_back((1 - alpha) * double(c) / t);
      py.push_back((double(c) - a) / (t + b));
      conj.push_back((1 - eta) * double(c) / t);
    }
    simon.push_back(alpha);
    py.push_back(eta);
    conj.push_back(eta);

    const double ps = oracle::chi_square(replay(plain, kReplays, rng,
                                                [&](auto& s, auto& g) {
                                                  return gen::simon_step(s, alpha, g);
                                                }),
                                         simon)
                          .p_value;
    const double pp = oracle::chi_square(replay(discounted, kReplays, rng,
                                                [&](auto& s, auto& g) {
                                                  return gen::pitman_yor_step(s, a, b, g);
                                                }),
                                         py)
                          .p_value;
    const double pc = oracle::chi_square(replay(plain, kReplays, rng,
                                                [&](auto& s, auto& g) {
                                                  return gen::conjunct_step(s, a, b, g);
                                                }),
                                         conj)
                          .p_value;
    min_p = std::min({min_p, ps, pp, pc});
    detail += "t=" + std::to_string(plain.steps()) + " p(simon) " + fmt(ps) + " p(py) " + fmt(pp) +
              " p(conjunct) " + fmt(pc) + "; ";
  }
  return {min_p > 0.001, detail};
}

// --- C10 --------------------------------------------------------------

std::string token_text(const TokenSequence& seq) {
  std::ostringstream ss;
  write_tokens(ss, seq);
  return ss.str();
}

Outcome determinism() {
  bool pass = true;
  std::string detail;
  for (gen::Model m : {gen::Model::simon, gen::Model::pitman_yor, gen::Model::conjunct}) {
    const auto p = model(m, 0.1, 0.68, 0.8, 9000, 200000);
    const bool same = token_text(gen::generate(p)) == token_text(gen::generate(p));
    pass = pass && same;
    detail += std::string(gen::model_name(m)) + (same ? " identical; " : " DIFFERS; ");
  }
  const bool zipf = token_text(gen::generate_zipf_iid(50000, 1.0, 200000, 9000)) ==
                    token_text(gen::generate_zipf_iid(50000, 1.0, 200000, 9000));
  pass = pass && zipf;

  lab::SweepSpec spec;
  spec.model = gen::Model::conjunct;
  spec.a_values = {0.3, 0.68};
  spec.b_values = {0.8};
  spec.replicates = 2;
  spec.length = 100000;
  spec.base_seed = 9000;
  const auto dir = fs::temp_directory_path() / "lrclab_acceptance_sweep";
  fs::remove_all(dir);
  lab::write_sweep(lab::run_sweep(spec, 1), dir / "serial");
  lab::write_sweep(lab::run_sweep(spec, 4), dir / "parallel");
  bool sweep_same = true;
  for (const char* f : {"records.csv", "cells.csv", "summary.json"}) {
    sweep_same = sweep_same && corpus::slurp((dir / "serial" / f).string()) ==
                                   corpus::slurp((dir / "parallel" / f).string());
  }
  fs::remove_all(dir);
  pass = pass && sweep_same;
  detail += std::string("zipf ") + (zipf ? "identical; " : "DIFFERS; ") + "sweep 1 vs 4 threads " +
            (sweep_same ? "identical" : "DIFFERS");
  return {pass, detail};
}

// --- C11 --------------------------------------------------------------

Outcome chat_golden() {
  const std::string dir = LRCLAB_FIXTURES;
  const auto one = corpus::parse_chat(corpus::slurp(dir + "/sample.cha"));
  const auto two = corpus::parse_chat(corpus::slurp(dir + "/sample2.cha"));
  const bool chi = corpus::extract_speaker(one, {"CHI"}).tokens ==
                   corpus::read_token_file(dir + "/sample_chi_tokens.txt");
  const bool mot = corpus::extract_speaker(two, {"MOT"}).tokens ==
                   corpus::read_token_file(dir + "/sample2_mot_tokens.txt");
  const auto all = corpus::extract_speaker(two, {"CHI", "MOT", "FAT"});
  const bool every = all.tokens == corpus::read_token_file(dir + "/sample2_all_tokens.txt") &&
                     all.dropped_token_count == 2;
  return {chi && mot && every, std::string("sample.cha CHI ") + (chi ? "ok" : "mismatch") +
                                   ", sample2.cha MOT " + (mot ? "ok" : "mismatch") +
                                   ", all speakers " + (every ? "ok" : "mismatch")};
}

// --- C12 --------------------------------------------------------------

Outcome performance() {
  bool pass = true;
  std::string detail;
  std::optional<TokenSequence> last;
  for (gen::Model m : {gen::Model::simon, gen::Model::pitman_yor, gen::Model::conjunct}) {
    const auto start = std::chrono::steady_clock::now();
    last = gen::generate(model(m, 0.1, 0.68, 0.8, 1000));
    const double secs = seconds_since(start);
    pass = pass && secs <= 10.0;
    detail += std::string(gen::model_name(m)) + " " + fmt(secs, 2) + "s; ";
  }
  const auto start = std::chrono::steady_clock::now();
  const auto report = stats::analyze(*last);
  const double secs = seconds_since(start);
  pass = pass && secs <= 5.0;
  detail += "analysis " + fmt(secs, 2) + "s (" + std::to_string(report.intervals.count()) +
            " intervals)";
  return {pass, detail};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    Outcome (*run)();
  };
  // C4 and C7 reuse sequences produced by C3 and C6, so order matters.
  const Criterion criteria[] = {
      {"C1", "autocorrelation matches direct oracle", acf_oracle},
      {"C2", "Romeo interval fixtures", romeo},
      {"C3", "Simon alpha sweep", simon_sweep},
      {"C4", "Simon Zipf and Heaps exponents", simon_scaling},
      {"C5", "Pitman-Yor lacks long-range correlation", pitman_yor},
      {"C6", "conjunct model shows long-range correlation", conjunct},
      {"C7", "negative controls", controls},
      {"C8", "Heaps exponent tracks the discount a", discount_vs_heaps},
      {"C9", "generator kernels", kernels},
      {"C10", "determinism", determinism},
      {"C11", "CHAT golden files", chat_golden},
      {"C12", "performance", performance},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::cout << (out.pass ? "PASS " : "FAIL ") << c.id << ' ' << c.name << " | " << out.detail
              << " [" << fmt(seconds_since(start), 1) << "s]" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
