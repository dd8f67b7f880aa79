#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrclab/genmodels/models.hpp"

namespace lrc::lab {

/// A grid of model parameters with replicates. Simon grids use
/// alpha_values; Pitman-Yor and conjunct grids use a_values x b_values.
/// Replicate r of every cell is seeded with base_seed + r.
struct SweepSpec {
  gen::Model model = gen::Model::conjunct;
  std::vector<double> alpha_values;
  std::vector<double> a_values;
  std::vector<double> b_values;
  std::size_t replicates = 1;
  std::size_t length = 1000000;
  std::uint64_t base_seed = 0;
  std::size_t n = 16;
};

/// JSON keys mirror the struct fields: model, alpha_values, a_values,
/// b_values, replicates, length, base_seed, N. Throws std::invalid_argument.
[[nodiscard]] SweepSpec parse_sweep_spec(const nlohmann::json& j);
[[nodiscard]] nlohmann::json to_json(const SweepSpec& spec);
void validate(const SweepSpec& spec);

struct SweepCell {
  double alpha = 0.0;
  double a = 0.0;
  double b = 0.0;
};

/// Cells in canonical order: alpha ascending, or a then b ascending.
[[nodiscard]] std::vector<SweepCell> sweep_cells(const SweepSpec& spec);
[[nodiscard]] gen::ModelParams cell_params(const SweepSpec& spec, const SweepCell& cell,
                                           std::size_t replicate);

struct SweepRecord {
  SweepCell cell;
  std::size_t replicate = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  bool degenerate = false;
  std::string error;
  double gamma = 0.0;
  double gamma_fit_error = 0.0;
  double gamma_sse = 0.0;
  std::size_t gamma_points = 0;
  double heaps_zeta = 0.0;
  bool lrc_verdict = false;
};

struct CellAggregate {
  SweepCell cell;
  std::size_t n_ok = 0;
  double mean_gamma = 0.0;  // NaN when no replicate succeeded
  double sd_gamma = 0.0;    // population form
  double lrc_fraction = 0.0;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRecord> records;  // cell-major, replicate ascending
  std::vector<CellAggregate> cells;
  double mean_fit_error = 0.0;    // average of per-sequence fit errors
  double pooled_fit_error = 0.0;  // sqrt(sum of all SSE) / total points
};

/// Generates and analyzes one replicate. Data and parameter errors are
/// captured in the record.
[[nodiscard]] SweepRecord run_replicate(const SweepSpec& spec, const SweepCell& cell,
                                        std::size_t replicate);

[[nodiscard]] std::vector<CellAggregate> aggregate(const SweepSpec& spec,
                                                   const std::vector<SweepRecord>& records);

/// Evaluates every (cell, replicate) pair, possibly in parallel; output
/// order is canonical regardless of `threads`.
[[nodiscard]] SweepResult run_sweep(const SweepSpec& spec, std::size_t threads = 0);

/// records.csv, cells.csv and summary.json under out_dir.
void write_sweep(const SweepResult& result, const std::filesystem::path& out_dir);
[[nodiscard]] std::string records_csv(const SweepResult& result);
[[nodiscard]] std::string cells_csv(const SweepResult& result);

}  // namespace lrc::lab
