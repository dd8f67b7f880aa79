#include "lrclab/genmodels/controls.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lrclab/genmodels/rng.hpp"
#include "lrclab/seqcore/error.hpp"

namespace lrc::gen {

std::vector<double> zipf_cumulative(std::size_t vocab_size, double exponent) {
  if (vocab_size < 1) throw std::invalid_argument("vocab_size must be at least 1");
  if (!(exponent > 0.0)) throw std::invalid_argument("exponent must be positive");
  std::vector<double> cdf(vocab_size);
  double acc = 0.0;
  for (std::size_t u = 1; u <= vocab_size; ++u) {
    acc += std::pow(static_cast<double>(u), -exponent);
    cdf[u - 1] = acc;
  }
  return cdf;
}

TokenSequence generate_zipf_iid(std::size_t vocab_size, double exponent, std::size_t length,
                                std::uint64_t seed) {
  if (length < 1) throw std::invalid_argument("length must be at least 1");
  const auto cdf = zipf_cumulative(vocab_size, exponent);
  const double total = cdf.back();
  Rng rng(seed);
  std::vector<SymbolId> ranks(length);
  for (auto& r : ranks) {
    const double u = rng.uniform() * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    r = static_cast<SymbolId>(it == cdf.end() ? vocab_size - 1 : it - cdf.begin());
  }
  return TokenSequence::relabeled(ranks);
}

TokenSequence generate_bigram(const TokenSequence& corpus, std::size_t length,
                              std::uint64_t seed) {
  const std::size_t m = corpus.size();
  if (m < 2) throw DataError("bigram corpus needs at least 2 tokens");
  if (length < 1) throw std::invalid_argument("length must be at least 1");

  // Successor lists grouped by type (CSR layout); drawing a uniform entry
  // reproduces the empirical transition probabilities.
  const std::size_t vocab = corpus.vocabulary_size();
  std::vector<std::size_t> offsets(vocab + 1, 0);
  for (std::size_t i = 0; i + 1 < m; ++i) ++offsets[corpus[i] + 1];
  for (std::size_t v = 0; v < vocab; ++v) offsets[v + 1] += offsets[v];
  std::vector<SymbolId> successors(m - 1);
  auto fill = offsets;
  for (std::size_t i = 0; i + 1 < m; ++i) successors[fill[corpus[i]]++] = corpus[i + 1];

  Rng rng(seed);
  std::vector<SymbolId> out;
  out.reserve(length);
  out.push_back(corpus[rng.below(m)]);
  while (out.size() < length) {
    const SymbolId cur = out.back();
    const std::size_t n = offsets[cur + 1] - offsets[cur];
    if (n == 0) {
      out.push_back(corpus[rng.below(m)]);
    } else {
      out.push_back(successors[offsets[cur] + rng.below(n)]);
    }
  }
  return TokenSequence::relabeled(out, corpus.symbols());
}

TokenSequence shuffle(const TokenSequence& seq, std::uint64_t seed) {
  std::vector<SymbolId> tokens(seq.tokens().begin(), seq.tokens().end());
  Rng rng(seed);
  for (std::size_t i = tokens.size(); i > 1; --i) {
    std::swap(tokens[i - 1], tokens[rng.below(i)]);
  }
  std::vector<std::string> symbols(seq.symbols().begin(), seq.symbols().end());
  return TokenSequence(std::move(tokens), seq.vocabulary_size(), std::move(symbols));
}

}  // namespace lrc::gen
