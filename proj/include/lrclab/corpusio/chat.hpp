#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lrclab/seqcore/error.hpp"
#include "lrclab/seqcore/token_sequence.hpp"

namespace lrc::corpus {

/// Error in a CHAT transcript, carrying the 1-based line number.
class ChatParseError : public DataError {
 public:
  ChatParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct Utterance {
  std::string speaker;
  std::vector<std::string> tokens;
};

struct ChatDocument {
  std::vector<Utterance> utterances;
  std::vector<std::string> headers;  // @-lines verbatim
};

/// Parses the tier-line subset of CHAT.
///
///   @...        header, kept verbatim
///   *SPK:\t...  main tier; SPK is 2-3 uppercase letters or digits
///   %xxx:\t...  dependent tier, ignored
///   \t...       continuation of the preceding tier
///   (blank)     skipped
///
/// Main-tier text is cleaned: [...] annotations and \x15 time bullets are
/// removed, < and > scope markers dropped, tokens starting with & removed,
/// and standalone terminators (".", "?", "!", ",", "+..." and kin) removed.
/// Anything else is a ChatParseError with the line number.
[[nodiscard]] ChatDocument parse_chat(std::string_view text);

/// Tokens of a single main-tier body after cleaning.
[[nodiscard]] std::vector<std::string> clean_utterance(std::string_view body);

inline const std::set<std::string> kDefaultDropCodes = {"xxx", "yyy", "www"};

struct SpeakerTokens {
  TokenSequence tokens;
  std::size_t dropped_token_count = 0;
};

/// Concatenates the lowercased tokens of the selected speakers in document
/// order, dropping `drop_codes`. Throws DataError("no tokens for speakers")
/// when nothing remains and std::invalid_argument for an empty speaker set.
[[nodiscard]] SpeakerTokens extract_speaker(const ChatDocument& doc,
                                            const std::set<std::string>& speakers,
                                            const std::set<std::string>& drop_codes = kDefaultDropCodes);

}  // namespace lrc::corpus
