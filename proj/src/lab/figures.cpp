#include "lrclab/lab/figures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lrclab/corpusio/tokens.hpp"
#include "lrclab/lab/run_analysis.hpp"
#include "lrclab/lrcstats/analysis.hpp"
#include "lrclab/seqcore/csv.hpp"
#include "lrclab/seqcore/error.hpp"

namespace lrc::lab {

namespace {

struct Panel {
  std::string file;
  std::string x;
  std::string y;
  bool log_axes = true;
  std::string csv;
  nlohmann::json fit;  // null when the panel has no fitted line
};

nlohmann::json finish(std::string_view figure_id, const Panel& panel,
                      const std::filesystem::path& out_dir) {
  write_text(out_dir / panel.file, panel.csv);
  nlohmann::json entry = {{"file", panel.file},
                          {"x", panel.x},
                          {"y", panel.y},
                          {"log_x", panel.log_axes},
                          {"log_y", panel.log_axes}};
  if (!panel.fit.is_null()) entry["fit"] = panel.fit;
  nlohmann::json manifest = {{"figure", std::string(figure_id)},
                             {"panels", nlohmann::json::array({entry})}};
  write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");
  return manifest;
}

nlohmann::json fit_json(double exponent, double amplitude, const char* name) {
  return {{"name", name}, {"exponent", exponent}, {"amplitude", amplitude}};
}

template <typename T>
std::string csv_text(const T& value) {
  std::ostringstream ss;
  write_csv(ss, value);
  return ss.str();
}

std::string sweep_map_csv(const SweepResult& result) {
  std::ostringstream ss;
  const bool simon = result.spec.model == gen::Model::simon;
  ss << (simon ? "alpha" : "a,b") << ",lrc_fraction\n";
  for (const auto& c : result.cells) {
    if (simon) {
      ss << format_real(c.cell.alpha);
    } else {
      ss << format_real(c.cell.a) << ',' << format_real(c.cell.b);
    }
    ss << ',' << format_real(c.lrc_fraction) << '\n';
  }
  return ss.str();
}

[[noreturn]] void unknown_figure(std::string_view id) {
  throw std::invalid_argument("unknown figure id '" + std::string(id) + "'");
}

}  // namespace

nlohmann::json emit_figure_data(const stats::AnalysisReport& report, std::string_view figure_id,
                                const std::filesystem::path& out_dir) {
  Panel p;
  if (figure_id == "rankfreq") {
    p = {"rankfreq.csv", "rank", "freq", true, csv_text(report.rank_freq),
         fit_json(report.zipf.exponent, report.zipf.amplitude, "xi")};
  } else if (figure_id == "typetoken") {
    p = {"typetoken.csv", "m", "v", true, csv_text(report.type_token),
         fit_json(report.heaps.exponent, report.heaps.amplitude, "zeta")};
  } else if (figure_id == "acf") {
    p = {"acf.csv", "s", "c", true, csv_text(report.acf),
         fit_json(report.gamma.exponent, report.gamma.amplitude, "gamma")};
  } else if (figure_id == "sweep_map") {
    throw std::invalid_argument("sweep_map needs sweep results, not an analysis report");
  } else {
    unknown_figure(figure_id);
  }
  return finish(figure_id, p, out_dir);
}

nlohmann::json emit_figure_data(const SweepResult& result, std::string_view figure_id,
                                const std::filesystem::path& out_dir) {
  if (figure_id != "sweep_map") {
    if (figure_id == "rankfreq" || figure_id == "typetoken" || figure_id == "acf") {
      throw std::invalid_argument(std::string(figure_id) + " needs an analysis report");
    }
    unknown_figure(figure_id);
  }
  const bool simon = result.spec.model == gen::Model::simon;
  Panel p{"sweep_map.csv", simon ? "alpha" : "a", simon ? "lrc_fraction" : "b", false,
          sweep_map_csv(result), nullptr};
  return finish(figure_id, p, out_dir);
}

nlohmann::json emit_figure_from_dir(const std::filesystem::path& in_dir, std::string_view figure_id,
                                    const std::filesystem::path& out_dir) {
  if (figure_id != "sweep_map" && figure_id != "rankfreq" && figure_id != "typetoken" &&
      figure_id != "acf") {
    unknown_figure(figure_id);
  }
  if (figure_id == "sweep_map") {
    std::istringstream in(corpus::slurp((in_dir / "cells.csv").string()));
    std::string header;
    std::getline(in, header);
    const auto cols = split_csv_row(header);
    const bool simon = !cols.empty() && cols.front() == "alpha";
    const std::size_t key_cols = simon ? 1 : 2;
    if (cols.size() != key_cols + 4 || cols.back() != "lrc_fraction") {
      throw DataError((in_dir / "cells.csv").string() + ": unexpected header");
    }
    std::ostringstream ss;
    ss << (simon ? "alpha" : "a,b") << ",lrc_fraction\n";
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto cells = split_csv_row(line);
      if (cells.size() != cols.size()) throw DataError("cells.csv: ragged row");
      for (std::size_t k = 0; k < key_cols; ++k) ss << cells[k] << ',';
      ss << cells.back() << '\n';
    }
    Panel p{"sweep_map.csv", simon ? "alpha" : "a", simon ? "lrc_fraction" : "b", false, ss.str(),
            nullptr};
    return finish(figure_id, p, out_dir);
  }

  const auto report = nlohmann::json::parse(corpus::slurp((in_dir / "report.json").string()));
  Panel p;
  if (figure_id == "rankfreq") {
    std::istringstream in(corpus::slurp((in_dir / "rankfreq.csv").string()));
    p = {"rankfreq.csv", "rank", "freq", true, csv_text(read_rank_frequency_csv(in)),
         fit_json(report.at("zipf_exponent"), report.at("zipf_amplitude"), "xi")};
  } else if (figure_id == "typetoken") {
    std::istringstream in(corpus::slurp((in_dir / "typetoken.csv").string()));
    p = {"typetoken.csv", "m", "v", true, csv_text(read_type_token_csv(in)),
         fit_json(report.at("heaps_exponent"), report.at("heaps_amplitude"), "zeta")};
  } else if (figure_id == "acf") {
    std::istringstream in(corpus::slurp((in_dir / "acf.csv").string()));
    p = {"acf.csv", "s", "c", true, csv_text(read_acf_csv(in, report.at("m_n"))),
         fit_json(report.at("gamma"), report.at("gamma_amplitude"), "gamma")};
  }
  return finish(figure_id, p, out_dir);
}

}  // namespace lrc::lab
