#pragma once

#include <string>
#include <string_view>

#include "lrclab/seqcore/token_sequence.hpp"

namespace lrc::corpus {

/// ASCII lowercase; bytes outside A-Z pass through untouched.
[[nodiscard]] std::string to_lower(std::string_view s);

/// Whitespace-separated tokens, lowercased, ids in first-occurrence order.
/// Throws DataError("empty input") when there are no tokens.
[[nodiscard]] TokenSequence read_tokens(std::string_view text);

[[nodiscard]] TokenSequence read_token_file(const std::string& path);
void write_token_file(const std::string& path, const TokenSequence& seq);

/// Whole file as a string; throws DataError when it cannot be opened.
[[nodiscard]] std::string slurp(const std::string& path);

}  // namespace lrc::corpus
