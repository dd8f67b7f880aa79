#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "lrclab/lab/sweep.hpp"
#include "lrclab/lrcstats/analysis.hpp"

namespace lrc::lab {

/// Figure ids: rankfreq, typetoken, acf (from an analysis) and sweep_map
/// (from a sweep). Each call writes one CSV per panel plus manifest.json
/// naming each file, its axes and, for curve panels, the fitted line.
/// Unknown ids raise std::invalid_argument.
nlohmann::json emit_figure_data(const stats::AnalysisReport& report, std::string_view figure_id,
                                const std::filesystem::path& out_dir);
nlohmann::json emit_figure_data(const SweepResult& result, std::string_view figure_id,
                                const std::filesystem::path& out_dir);

/// Same, reading the files `analyze` or `sweep` left in `in_dir`.
nlohmann::json emit_figure_from_dir(const std::filesystem::path& in_dir, std::string_view figure_id,
                                    const std::filesystem::path& out_dir);

}  // namespace lrc::lab
