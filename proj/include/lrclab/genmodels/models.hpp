#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lrclab/genmodels/generator_state.hpp"
#include "lrclab/genmodels/rng.hpp"
#include "lrclab/seqcore/token_sequence.hpp"

namespace lrc::gen {

enum class Model { simon, pitman_yor, conjunct };

[[nodiscard]] std::string_view model_name(Model m);
/// Accepts "simon", "pitman_yor"/"py", "conjunct".
[[nodiscard]] Model parse_model(std::string_view name);

struct ModelParams {
  Model model = Model::simon;
  double alpha = 0.1;  // Simon
  double a = 0.0;      // Pitman-Yor and conjunct
  double b = 0.0;
  std::size_t length = 1;  // total elements, including the initial one
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument for out-of-range parameters.
void validate(const ModelParams& p);

/// a = 0 and b = 0 for Pitman-Yor or conjunct: no new type is ever drawn.
[[nodiscard]] bool is_degenerate(const ModelParams& p);

/// New-type probability at state (t, K): alpha for Simon, (aK + b)/(t + b)
/// otherwise. Zero when t + b == 0.
[[nodiscard]] double new_type_probability(const ModelParams& p, std::size_t t, std::size_t k);

// One generation step each; the emitted id is returned.
SymbolId simon_step(GeneratorState& state, double alpha, Rng& rng);
SymbolId pitman_yor_step(GeneratorState& state, double a, double b, Rng& rng);
SymbolId conjunct_step(GeneratorState& state, double a, double b, Rng& rng);

[[nodiscard]] TokenSequence generate_simon(const ModelParams& p);
[[nodiscard]] TokenSequence generate_pitman_yor(const ModelParams& p);
[[nodiscard]] TokenSequence generate_conjunct(const ModelParams& p);
/// Dispatches on p.model.
[[nodiscard]] TokenSequence generate(const ModelParams& p);

/// {model, params, seed, length, final_vocab[, degenerate]}
[[nodiscard]] nlohmann::json run_metadata(const ModelParams& p, const TokenSequence& seq);
[[nodiscard]] nlohmann::json run_metadata(std::string_view model, nlohmann::json params,
                                          std::uint64_t seed, const TokenSequence& seq);

}  // namespace lrc::gen
