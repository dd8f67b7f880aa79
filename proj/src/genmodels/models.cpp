#include "lrclab/genmodels/models.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace lrc::gen {

std::string_view model_name(Model m) {
  switch (m) {
    case Model::simon:
      return "simon";
    case Model::pitman_yor:
      return "pitman_yor";
    case Model::conjunct:
      return "conjunct";
  }
  return "unknown";
}

Model parse_model(std::string_view name) {
  if (name == "simon") return Model::simon;
  if (name == "pitman_yor" || name == "py") return Model::pitman_yor;
  if (name == "conjunct") return Model::conjunct;
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

void validate(const ModelParams& p) {
  if (p.length < 1) throw std::invalid_argument("length must be at least 1");
  if (p.model == Model::simon) {
    if (!(p.alpha > 0.0 && p.alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  } else {
    if (!(p.a >= 0.0 && p.a < 1.0)) throw std::invalid_argument("a must lie in [0, 1)");
    if (!(p.b >= 0.0)) throw std::invalid_argument("b must be non-negative");
  }
}

bool is_degenerate(const ModelParams& p) {
  return p.model != Model::simon && p.a == 0.0 && p.b == 0.0;
}

double new_type_probability(const ModelParams& p, std::size_t t, std::size_t k) {
  if (p.model == Model::simon) return p.alpha;
  const double denom = static_cast<double>(t) + p.b;
  if (!(denom > 0.0)) return 0.0;
  return (p.a * static_cast<double>(k) + p.b) / denom;
}

SymbolId simon_step(GeneratorState& state, double alpha, Rng& rng) {
  if (rng.uniform() < alpha) return state.emit_new();
  const SymbolId id = state.sample_past_uniform(rng);
  state.emit(id);
  return id;
}

SymbolId pitman_yor_step(GeneratorState& state, double a, double b, Rng& rng) {
  // One draw over the full mass t + b: the first aK + b goes to a new type,
  // the rest is split as S_i - a through the weight index.
  const double t = static_cast<double>(state.steps());
  const double new_mass = a * static_cast<double>(state.vocabulary()) + b;
  const double u = rng.uniform() * (t + b);
  if (u < new_mass) return state.emit_new();
  const SymbolId id = state.weighted_at(u - new_mass);
  state.emit(id);
  return id;
}

SymbolId conjunct_step(GeneratorState& state, double a, double b, Rng& rng) {
  const double t = static_cast<double>(state.steps());
  const double eta = (a * static_cast<double>(state.vocabulary()) + b) / (t + b);
  if (rng.uniform() < eta) return state.emit_new();
  const SymbolId id = state.sample_past_uniform(rng);
  state.emit(id);
  return id;
}

namespace {

template <typename Step>
TokenSequence run(const ModelParams& p, std::optional<double> discount, Step&& step) {
  validate(p);
  Rng rng(p.seed);
  GeneratorState state(p.length, discount);
  std::size_t checkpoint = 1024;
  while (state.steps() < p.length) {
    [[maybe_unused]] const std::size_t k_before = state.vocabulary();
    step(state, rng);
    assert(state.vocabulary() <= state.steps());
    assert(state.vocabulary() - k_before <= 1);
    if (state.steps() == checkpoint) {
      if (!state.consistent()) throw std::logic_error("generator state invariant violated");
      checkpoint *= 4;
    }
  }
  if (!state.consistent()) throw std::logic_error("generator state invariant violated");
  return std::move(state).into_sequence();
}

}  // namespace

TokenSequence generate_simon(const ModelParams& p) {
  if (p.model != Model::simon) throw std::invalid_argument("expected simon parameters");
  return run(p, std::nullopt, [&](GeneratorState& s, Rng& rng) { simon_step(s, p.alpha, rng); });
}

TokenSequence generate_pitman_yor(const ModelParams& p) {
  if (p.model != Model::pitman_yor) throw std::invalid_argument("expected pitman_yor parameters");
  return run(p, p.a, [&](GeneratorState& s, Rng& rng) { pitman_yor_step(s, p.a, p.b, rng); });
}

TokenSequence generate_conjunct(const ModelParams& p) {
  if (p.model != Model::conjunct) throw std::invalid_argument("expected conjunct parameters");
  return run(p, std::nullopt,
             [&](GeneratorState& s, Rng& rng) { conjunct_step(s, p.a, p.b, rng); });
}

TokenSequence generate(const ModelParams& p) {
  switch (p.model) {
    case Model::simon:
      return generate_simon(p);
    case Model::pitman_yor:
      return generate_pitman_yor(p);
    case Model::conjunct:
      return generate_conjunct(p);
  }
  throw std::invalid_argument("unknown model");
}

nlohmann::json run_metadata(std::string_view model, nlohmann::json params, std::uint64_t seed,
                            const TokenSequence& seq) {
  return {{"model", std::string(model)},
          {"params", std::move(params)},
          {"seed", seed},
          {"length", seq.size()},
          {"final_vocab", seq.distinct_count()}};
}

nlohmann::json run_metadata(const ModelParams& p, const TokenSequence& seq) {
  nlohmann::json params;
  if (p.model == Model::simon) {
    params = {{"alpha", p.alpha}};
  } else {
    params = {{"a", p.a}, {"b", p.b}};
  }
  auto meta = run_metadata(model_name(p.model), std::move(params), p.seed, seq);
  if (p.model != Model::simon) meta["degenerate"] = is_degenerate(p);
  return meta;
}

}  // namespace lrc::gen
