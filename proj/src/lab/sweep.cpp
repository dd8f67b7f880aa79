#include "lrclab/lab/sweep.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lrclab/lab/parallel.hpp"
#include "lrclab/lab/run_analysis.hpp"
#include "lrclab/lrcstats/analysis.hpp"
#include "lrclab/seqcore/csv.hpp"
#include "lrclab/seqcore/error.hpp"
#include "lrclab/seqcore/moments.hpp"

namespace lrc::lab {

namespace {

std::vector<double> number_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& v = j.at(key);
  if (!v.is_array()) throw std::invalid_argument(std::string(key) + " must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw std::invalid_argument(std::string(key) + " must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

bool is_simon(const SweepSpec& spec) { return spec.model == gen::Model::simon; }

}  // namespace

void validate(const SweepSpec& spec) {
  if (spec.replicates < 1) throw std::invalid_argument("replicates must be at least 1");
  if (spec.length < 1) throw std::invalid_argument("length must be at least 1");
  if (spec.n < 2) throw std::invalid_argument("N must be at least 2");
  if (is_simon(spec)) {
    if (spec.alpha_values.empty()) throw std::invalid_argument("alpha_values is empty");
  } else if (spec.a_values.empty() || spec.b_values.empty()) {
    throw std::invalid_argument("a_values and b_values must be non-empty");
  }
  for (const auto& cell : sweep_cells(spec)) gen::validate(cell_params(spec, cell, 0));
}

SweepSpec parse_sweep_spec(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("sweep spec must be a JSON object");
  try {
    SweepSpec spec;
    spec.model = gen::parse_model(j.at("model").get<std::string>());
    spec.alpha_values = number_list(j, "alpha_values");
    spec.a_values = number_list(j, "a_values");
    spec.b_values = number_list(j, "b_values");
    spec.replicates = j.value("replicates", std::size_t{1});
    spec.length = j.at("length").get<std::size_t>();
    spec.base_seed = j.at("base_seed").get<std::uint64_t>();
    spec.n = j.value("N", std::size_t{16});
    validate(spec);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("sweep spec: ") + e.what());
  }
}

nlohmann::json to_json(const SweepSpec& spec) {
  nlohmann::json j = {{"model", std::string(gen::model_name(spec.model))},
                      {"replicates", spec.replicates},
                      {"length", spec.length},
                      {"base_seed", spec.base_seed},
                      {"N", spec.n}};
  if (is_simon(spec)) {
    j["alpha_values"] = spec.alpha_values;
  } else {
    j["a_values"] = spec.a_values;
    j["b_values"] = spec.b_values;
  }
  return j;
}

std::vector<SweepCell> sweep_cells(const SweepSpec& spec) {
  std::vector<SweepCell> cells;
  if (is_simon(spec)) {
    for (double alpha : spec.alpha_values) cells.push_back({alpha, 0.0, 0.0});
  } else {
    for (double a : spec.a_values) {
      for (double b : spec.b_values) cells.push_back({0.0, a, b});
    }
  }
  return cells;
}

gen::ModelParams cell_params(const SweepSpec& spec, const SweepCell& cell, std::size_t replicate) {
  gen::ModelParams p;
  p.model = spec.model;
  p.alpha = cell.alpha;
  p.a = cell.a;
  p.b = cell.b;
  p.length = spec.length;
  p.seed = spec.base_seed + replicate;
  return p;
}

SweepRecord run_replicate(const SweepSpec& spec, const SweepCell& cell, std::size_t replicate) {
  const auto params = cell_params(spec, cell, replicate);
  SweepRecord rec;
  rec.cell = cell;
  rec.replicate = replicate;
  rec.seed = params.seed;
  rec.degenerate = gen::is_degenerate(params);
  try {
    const auto seq = gen::generate(params);
    const auto report = stats::analyze(seq, spec.n);
    rec.gamma = report.gamma.exponent;
    rec.gamma_fit_error = report.gamma.fit_error_per_point;
    rec.gamma_sse = report.gamma.sum_squared_residuals;
    rec.gamma_points = report.gamma.n_points_used;
    rec.heaps_zeta = report.heaps.exponent;
    rec.lrc_verdict = report.verdict.holds;
    rec.ok = true;
  } catch (const DataError& e) {
    rec.error = e.what();
  } catch (const std::invalid_argument& e) {
    rec.error = e.what();
  }
  return rec;
}

std::vector<CellAggregate> aggregate(const SweepSpec& spec, const std::vector<SweepRecord>& records) {
  const auto cells = sweep_cells(spec);
  if (records.size() != cells.size() * spec.replicates) {
    throw std::invalid_argument("record count does not match the grid");
  }
  std::vector<CellAggregate> out;
  out.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    CellAggregate agg;
    agg.cell = cells[c];
    std::vector<double> gammas;
    std::size_t lrc = 0;
    for (std::size_t r = 0; r < spec.replicates; ++r) {
      const auto& rec = records[c * spec.replicates + r];
      if (!rec.ok) continue;
      gammas.push_back(rec.gamma);
      if (rec.lrc_verdict) ++lrc;
    }
    agg.n_ok = gammas.size();
    if (gammas.empty()) {
      agg.mean_gamma = std::nan("");
      agg.sd_gamma = std::nan("");
    } else {
      const auto m = moments(gammas);
      agg.mean_gamma = m.mean;
      agg.sd_gamma = m.sd;
    }
    agg.lrc_fraction = static_cast<double>(lrc) / static_cast<double>(spec.replicates);
    out.push_back(agg);
  }
  return out;
}

SweepResult run_sweep(const SweepSpec& spec, std::size_t threads) {
  validate(spec);
  const auto cells = sweep_cells(spec);
  const std::size_t reps = spec.replicates;
  SweepResult result;
  result.spec = spec;
  result.records.resize(cells.size() * reps);
  parallel_for(result.records.size(), threads, [&](std::size_t i) {
    result.records[i] = run_replicate(spec, cells[i / reps], i % reps);
  });
  result.cells = aggregate(spec, result.records);

  double err_sum = 0.0;
  double sse = 0.0;
  std::size_t ok = 0;
  std::size_t points = 0;
  for (const auto& rec : result.records) {
    if (!rec.ok) continue;
    ++ok;
    err_sum += rec.gamma_fit_error;
    sse += rec.gamma_sse;
    points += rec.gamma_points;
  }
  result.mean_fit_error = ok ? err_sum / static_cast<double>(ok) : std::nan("");
  result.pooled_fit_error = points ? std::sqrt(sse) / static_cast<double>(points) : std::nan("");
  return result;
}

std::string records_csv(const SweepResult& result) {
  std::ostringstream ss;
  const bool simon = is_simon(result.spec);
  ss << (simon ? "alpha" : "a,b")
     << ",replicate,seed,ok,degenerate,gamma,gamma_fit_error,heaps_zeta,lrc_verdict,error\n";
  for (const auto& r : result.records) {
    if (simon) {
      ss << format_real(r.cell.alpha);
    } else {
      ss << format_real(r.cell.a) << ',' << format_real(r.cell.b);
    }
    ss << ',' << r.replicate << ',' << r.seed << ',' << int(r.ok) << ',' << int(r.degenerate) << ',';
    if (r.ok) {
      ss << format_real(r.gamma) << ',' << format_real(r.gamma_fit_error) << ','
         << format_real(r.heaps_zeta) << ',' << int(r.lrc_verdict) << ',';
    } else {
      ss << ",,,0,";
    }
    std::string err = r.error;
    for (char& ch : err) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    ss << err << '\n';
  }
  return ss.str();
}

std::string cells_csv(const SweepResult& result) {
  std::ostringstream ss;
  const bool simon = is_simon(result.spec);
  ss << (simon ? "alpha" : "a,b") << ",n_ok,mean_gamma,sd_gamma,lrc_fraction\n";
  for (const auto& c : result.cells) {
    if (simon) {
      ss << format_real(c.cell.alpha);
    } else {
      ss << format_real(c.cell.a) << ',' << format_real(c.cell.b);
    }
    ss << ',' << c.n_ok << ',' << format_real(c.mean_gamma) << ',' << format_real(c.sd_gamma)
       << ',' << format_real(c.lrc_fraction) << '\n';
  }
  return ss.str();
}

void write_sweep(const SweepResult& result, const std::filesystem::path& out_dir) {
  write_text(out_dir / "records.csv", records_csv(result));
  write_text(out_dir / "cells.csv", cells_csv(result));
  const nlohmann::json summary = {{"spec", to_json(result.spec)},
                                  {"records", result.records.size()},
                                  {"cells", result.cells.size()},
                                  {"mean_fit_error", result.mean_fit_error},
                                  {"pooled_fit_error", result.pooled_fit_error}};
  write_text(out_dir / "summary.json", summary.dump(2) + "\n");
}

}  // namespace lrc::lab
