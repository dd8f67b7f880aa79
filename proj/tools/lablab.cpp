// lablab: generate sequences, analyze them, and run parameter sweeps.
//
// Exit codes: 0 success, 1 usage error, 2 data or degeneracy error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrclab/corpusio/chat.hpp"
#include "lrclab/corpusio/tokens.hpp"
#include "lrclab/genmodels/controls.hpp"
#include "lrclab/genmodels/models.hpp"
#include "lrclab/lab/figures.hpp"
#include "lrclab/lab/run_analysis.hpp"
#include "lrclab/lab/sweep.hpp"
#include "lrclab/seqcore/error.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void write_json(const fs::path& path, const nlohmann::json& j) {
  lrc::lab::write_text(path, j.dump(2) + "\n");
}

fs::path sidecar(const fs::path& out, const char* suffix) {
  return fs::path(out.string() + suffix);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long-range correlation lab: generative models and power-law analysis"};
  app.require_subcommand(1);

  // analyze
  std::string an_input;
  std::string an_out;
  std::size_t an_n = 16;
  std::vector<std::string> an_rare;
  auto* analyze = app.add_subcommand("analyze", "Analyze a token file");
  analyze->add_option("--input", an_input, "Token file")->required();
  analyze->add_option("--n", an_n, "Rarity divisor N")->check(CLI::Range(2, 1 << 30));
  analyze->add_option("--rare", an_rare, "Force the rare set to these words");
  analyze->add_option("--out", an_out, "Output directory")->required();

  // generate
  std::string gen_model;
  double gen_alpha = 0.1;
  double gen_a = 0.0;
  double gen_b = 0.0;
  double gen_exponent = 1.0;
  std::size_t gen_vocab = 50000;
  std::size_t gen_length = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_input;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Generate a sequence from a model");
  generate->add_option("--model", gen_model, "simon|py|conjunct|zipf|bigram")
      ->required()
      ->check(CLI::IsMember({"simon", "py", "pitman_yor", "conjunct", "zipf", "bigram"}));
  generate->add_option("--alpha", gen_alpha, "Simon new-word probability");
  generate->add_option("--a", gen_a, "Pitman-Yor/conjunct discount a");
  generate->add_option("--b", gen_b, "Pitman-Yor/conjunct strength b");
  generate->add_option("--exponent", gen_exponent, "Zipf exponent");
  generate->add_option("--vocab", gen_vocab, "Zipf vocabulary size");
  generate->add_option("--input", gen_input, "Bigram source corpus (token file)");
  generate->add_option("--length", gen_length, "Number of elements")->required();
  generate->add_option("--seed", gen_seed, "RNG seed")->required();
  generate->add_option("--out", gen_out, "Output token file")->required();

  // shuffle
  std::string sh_input;
  std::string sh_out;
  std::uint64_t sh_seed = 0;
  auto* shuffle = app.add_subcommand("shuffle", "Shuffle a token file at the word level");
  shuffle->add_option("--input", sh_input, "Token file")->required();
  shuffle->add_option("--seed", sh_seed, "RNG seed")->required();
  shuffle->add_option("--out", sh_out, "Output token file")->required();

  // sweep
  std::string sw_spec;
  std::string sw_out;
  std::size_t sw_threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  sweep->add_option("--spec", sw_spec, "Sweep spec JSON")->required();
  sweep->add_option("--out", sw_out, "Output directory")->required();
  sweep->add_option("--threads", sw_threads, "Worker threads (0 = all cores)");

  // chat-extract
  std::string ch_input;
  std::string ch_out;
  std::vector<std::string> ch_speakers;
  std::vector<std::string> ch_drop;
  auto* chat = app.add_subcommand("chat-extract", "Extract speaker tokens from a CHAT file");
  chat->add_option("--input", ch_input, "CHAT transcript")->required();
  chat->add_option("--speakers", ch_speakers, "Speaker codes, e.g. CHI")
      ->required()
      ->delimiter(',');
  chat->add_option("--drop", ch_drop, "Codes to drop (default xxx,yyy,www)")->delimiter(',');
  chat->add_option("--out", ch_out, "Output token file")->required();

  // figure
  std::string fig_input;
  std::string fig_id;
  std::string fig_out;
  auto* figure = app.add_subcommand("figure", "Emit figure data from analyze/sweep output");
  figure->add_option("--input", fig_input, "Directory written by analyze or sweep")->required();
  figure->add_option("--id", fig_id, "rankfreq|typetoken|acf|sweep_map")->required();
  figure->add_option("--out", fig_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) {
      lrc::lab::AnalyzeOptions opts;
      opts.rarity = an_n;
      opts.rare_words = an_rare;
      const auto report = lrc::lab::run_analysis(an_input, opts, an_out);
      std::cout << lrc::stats::report_json(report).dump(2) << '\n';
    } else if (*generate) {
      if (gen_length < 1) throw UsageError("--length must be at least 1");
      lrc::TokenSequence seq({0}, 1);
      nlohmann::json meta;
      if (gen_model == "zipf") {
        seq = lrc::gen::generate_zipf_iid(gen_vocab, gen_exponent, gen_length, gen_seed);
        meta = lrc::gen::run_metadata("zipf", {{"vocab", gen_vocab}, {"exponent", gen_exponent}},
                                      gen_seed, seq);
      } else if (gen_model == "bigram") {
        if (gen_input.empty()) throw UsageError("--model bigram requires --input");
        const auto corpus = lrc::corpus::read_token_file(gen_input);
        seq = lrc::gen::generate_bigram(corpus, gen_length, gen_seed);
        meta = lrc::gen::run_metadata("bigram", {{"corpus", gen_input}}, gen_seed, seq);
      } else {
        lrc::gen::ModelParams p;
        p.model = lrc::gen::parse_model(gen_model);
        p.alpha = gen_alpha;
        p.a = gen_a;
        p.b = gen_b;
        p.length = gen_length;
        p.seed = gen_seed;
        seq = lrc::gen::generate(p);
        meta = lrc::gen::run_metadata(p, seq);
      }
      lrc::corpus::write_token_file(gen_out, seq);
      write_json(sidecar(gen_out, ".meta.json"), meta);
    } else if (*shuffle) {
      const auto seq = lrc::corpus::read_token_file(sh_input);
      lrc::corpus::write_token_file(sh_out, lrc::gen::shuffle(seq, sh_seed));
    } else if (*sweep) {
      const auto spec_json = nlohmann::json::parse(lrc::corpus::slurp(sw_spec), nullptr, false);
      if (spec_json.is_discarded()) throw UsageError(sw_spec + ": not valid JSON");
      const auto spec = lrc::lab::parse_sweep_spec(spec_json);
      const auto result = lrc::lab::run_sweep(spec, sw_threads);
      lrc::lab::write_sweep(result, sw_out);
    } else if (*chat) {
      const auto doc = lrc::corpus::parse_chat(lrc::corpus::slurp(ch_input));
      const std::set<std::string> speakers(ch_speakers.begin(), ch_speakers.end());
      const std::set<std::string> drops =
          ch_drop.empty() ? lrc::corpus::kDefaultDropCodes
                          : std::set<std::string>(ch_drop.begin(), ch_drop.end());
      const auto extracted = lrc::corpus::extract_speaker(doc, speakers, drops);
      lrc::corpus::write_token_file(ch_out, extracted.tokens);
      write_json(sidecar(ch_out, ".provenance.json"),
                 {{"source_file", ch_input},
                  {"speakers", ch_speakers},
                  {"dropped_token_count", extracted.dropped_token_count}});
    } else if (*figure) {
      lrc::lab::emit_figure_from_dir(fig_input, fig_id, fig_out);
    }
  } catch (const lrc::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
