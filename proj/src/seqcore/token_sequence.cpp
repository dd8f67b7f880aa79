#include "lrclab/seqcore/token_sequence.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "lrclab/seqcore/error.hpp"

namespace lrc {

TokenSequence::TokenSequence(std::vector<SymbolId> tokens, std::size_t vocabulary_size,
                             std::vector<std::string> symbols)
    : tokens_(std::move(tokens)), vocabulary_size_(vocabulary_size), symbols_(std::move(symbols)) {
  if (tokens_.empty()) throw DataError("empty token sequence");
  for (SymbolId id : tokens_) {
    if (id >= vocabulary_size_) throw std::invalid_argument("token id outside vocabulary");
  }
  if (!symbols_.empty() && symbols_.size() != vocabulary_size_) {
    throw std::invalid_argument("symbol table does not match vocabulary size");
  }
}

TokenSequence TokenSequence::relabeled(std::span<const SymbolId> raw,
                                       std::span<const std::string> symbols) {
  constexpr SymbolId kUnassigned = std::numeric_limits<SymbolId>::max();
  const SymbolId max_raw = raw.empty() ? 0 : *std::max_element(raw.begin(), raw.end());
  if (!symbols.empty() && symbols.size() <= max_raw) {
    throw std::invalid_argument("symbol table does not cover raw ids");
  }
  std::vector<SymbolId> map(static_cast<std::size_t>(max_raw) + 1, kUnassigned);
  std::vector<SymbolId> out;
  out.reserve(raw.size());
  std::vector<std::string> out_symbols;
  SymbolId next = 0;
  for (SymbolId r : raw) {
    if (map[r] == kUnassigned) {
      map[r] = next++;
      if (!symbols.empty()) out_symbols.push_back(symbols[r]);
    }
    out.push_back(map[r]);
  }
  return TokenSequence(std::move(out), next, std::move(out_symbols));
}

TokenSequence TokenSequence::from_words(std::span<const std::string> words) {
  std::unordered_map<std::string, SymbolId> ids;
  std::vector<SymbolId> out;
  std::vector<std::string> symbols;
  out.reserve(words.size());
  for (const auto& w : words) {
    auto [it, inserted] = ids.try_emplace(w, static_cast<SymbolId>(symbols.size()));
    if (inserted) symbols.push_back(w);
    out.push_back(it->second);
  }
  const std::size_t v = symbols.size();
  return TokenSequence(std::move(out), v, std::move(symbols));
}

std::string TokenSequence::surface(SymbolId id) const {
  if (!symbols_.empty()) return symbols_.at(id);
  return "w" + std::to_string(id);
}

bool TokenSequence::find_symbol(std::string_view surface, SymbolId& id) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == surface) {
      id = static_cast<SymbolId>(i);
      return true;
    }
  }
  return false;
}

std::size_t TokenSequence::distinct_count() const {
  std::vector<bool> seen(vocabulary_size_, false);
  std::size_t n = 0;
  for (SymbolId id : tokens_) {
    if (!seen[id]) {
      seen[id] = true;
      ++n;
    }
  }
  return n;
}

}  // namespace lrc
