#include "lrclab/corpusio/chat.hpp"

#include <stdexcept>

#include "lrclab/corpusio/tokens.hpp"

namespace lrc::corpus {

namespace {

bool valid_speaker(std::string_view code) {
  if (code.size() < 2 || code.size() > 3) return false;
  for (char ch : code) {
    const bool upper = ch >= 'A' && ch <= 'Z';
    const bool digit = ch >= '0' && ch <= '9';
    if (!upper && !digit) return false;
  }
  return true;
}

// Word characters: ASCII letters and digits, and any non-ASCII byte.
bool has_word_char(std::string_view tok) {
  for (char ch : tok) {
    const auto u = static_cast<unsigned char>(ch);
    if (u >= 0x80 || (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
        (ch >= '0' && ch <= '9')) {
      return true;
    }
  }
  return false;
}

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

std::vector<std::string> clean_utterance(std::string_view body) {
  std::string text;
  text.reserve(body.size());
  int bracket_depth = 0;
  bool in_bullet = false;
  for (char ch : body) {
    if (ch == '\x15') {
      in_bullet = !in_bullet;
      text.push_back(' ');
      continue;
    }
    if (in_bullet) continue;
    if (ch == '[') {
      ++bracket_depth;
      continue;
    }
    if (ch == ']' && bracket_depth > 0) {
      --bracket_depth;
      text.push_back(' ');
      continue;
    }
    if (bracket_depth > 0) continue;
    text.push_back(ch == '<' || ch == '>' || ch == '\t' ? ' ' : ch);
  }

  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i == start) continue;
    std::string_view tok(text.data() + start, i - start);
    if (tok.front() == '&') continue;
    if (!has_word_char(tok)) continue;  // ".", "?", "+...", "(.)" and the like
    tokens.emplace_back(tok);
  }
  return tokens;
}

ChatDocument parse_chat(std::string_view text) {
  enum class Tier { none, header, main, dependent };

  ChatDocument doc;
  std::vector<std::string> bodies;
  Tier last = Tier::none;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (end == text.size() && line.empty()) break;
    if (line.empty()) continue;

    switch (line.front()) {
      case '@':
        doc.headers.emplace_back(line);
        last = Tier::header;
        break;
      case '*': {
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
          throw ChatParseError(line_no, "malformed tier line: no ':' after speaker");
        }
        const auto speaker = line.substr(1, colon - 1);
        if (!valid_speaker(speaker)) {
          throw ChatParseError(line_no, "invalid speaker code '" + std::string(speaker) + "'");
        }
        doc.utterances.push_back({std::string(speaker), {}});
        bodies.emplace_back(trim_left(line.substr(colon + 1)));
        last = Tier::main;
        break;
      }
      case '%':
        if (line.find(':') == std::string_view::npos) {
          throw ChatParseError(line_no, "malformed tier line: no ':' after tier name");
        }
        last = Tier::dependent;
        break;
      case '\t':
        if (last == Tier::none) throw ChatParseError(line_no, "continuation line without a tier");
        if (last == Tier::main) {
          bodies.back().push_back(' ');
          bodies.back().append(trim_left(line));
        } else if (last == Tier::header) {
          doc.headers.back().push_back(' ');
          doc.headers.back().append(trim_left(line));
        }
        break;
      default:
        throw ChatParseError(line_no, "unrecognized line");
    }
  }

  for (std::size_t i = 0; i < bodies.size(); ++i) {
    doc.utterances[i].tokens = clean_utterance(bodies[i]);
  }
  return doc;
}

SpeakerTokens extract_speaker(const ChatDocument& doc, const std::set<std::string>& speakers,
                              const std::set<std::string>& drop_codes) {
  if (speakers.empty()) throw std::invalid_argument("speaker set is empty");
  std::set<std::string> drops;
  for (const auto& d : drop_codes) drops.insert(to_lower(d));

  std::vector<std::string> words;
  std::size_t dropped = 0;
  for (const auto& u : doc.utterances) {
    if (!speakers.contains(u.speaker)) continue;
    for (const auto& tok : u.tokens) {
      auto lower = to_lower(tok);
      if (drops.contains(lower)) {
        ++dropped;
        continue;
      }
      words.push_back(std::move(lower));
    }
  }
  if (words.empty()) throw DataError("no tokens for speakers");
  return {TokenSequence::from_words(words), dropped};
}

}  // namespace lrc::corpus
