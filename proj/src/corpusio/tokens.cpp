#include "lrclab/corpusio/tokens.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "lrclab/seqcore/csv.hpp"
#include "lrclab/seqcore/error.hpp"

namespace lrc::corpus {

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return out;
}

TokenSequence read_tokens(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  const auto is_space = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' || ch == '\f';
  };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) words.push_back(to_lower(text.substr(start, i - start)));
  }
  if (words.empty()) throw DataError("empty input");
  return TokenSequence::from_words(words);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TokenSequence read_token_file(const std::string& path) {
  try {
    return read_tokens(slurp(path));
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

void write_token_file(const std::string& path, const TokenSequence& seq) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  write_tokens(out, seq);
}

}  // namespace lrc::corpus
