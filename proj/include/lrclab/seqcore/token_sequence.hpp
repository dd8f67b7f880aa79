#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lrc {

using SymbolId = std::uint32_t;

/// An ordered sequence of symbol ids together with the number of ids that
/// have been assigned and, optionally, the surface string of each id.
///
/// Invariants: at least one token; every id < vocabulary_size(); when a
/// symbol table is present it has exactly vocabulary_size() entries.
class TokenSequence {
 public:
  TokenSequence(std::vector<SymbolId> tokens, std::size_t vocabulary_size,
                std::vector<std::string> symbols = {});

  /// Relabels arbitrary ids densely in first-occurrence order. When
  /// `symbols` is non-empty it is indexed by the raw ids and carried over.
  [[nodiscard]] static TokenSequence relabeled(std::span<const SymbolId> raw,
                                               std::span<const std::string> symbols = {});

  /// Assigns ids to surface strings in first-occurrence order.
  [[nodiscard]] static TokenSequence from_words(std::span<const std::string> words);

  [[nodiscard]] std::size_t size() const noexcept { return tokens_.size(); }
  [[nodiscard]] std::size_t vocabulary_size() const noexcept { return vocabulary_size_; }
  [[nodiscard]] std::span<const SymbolId> tokens() const noexcept { return tokens_; }
  [[nodiscard]] SymbolId operator[](std::size_t i) const noexcept { return tokens_[i]; }

  [[nodiscard]] bool has_symbols() const noexcept { return !symbols_.empty(); }
  [[nodiscard]] std::span<const std::string> symbols() const noexcept { return symbols_; }

  /// Surface form of `id`: the symbol table entry, or `w<id>` without one.
  [[nodiscard]] std::string surface(SymbolId id) const;

  /// Looks up the id of a surface form; returns false if absent.
  [[nodiscard]] bool find_symbol(std::string_view surface, SymbolId& id) const;

  /// Number of distinct ids that actually occur.
  [[nodiscard]] std::size_t distinct_count() const;

  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;

 private:
  std::vector<SymbolId> tokens_;
  std::size_t vocabulary_size_;
  std::vector<std::string> symbols_;
};

}  // namespace lrc
