#include "regevo/tokenizer.hpp"

#include <cctype>
#include <cstdint>

namespace regevo {

namespace {

enum class CharClass { kWord, kSeparator, kTerminal };

// Decodes one UTF-8 code point starting at `i`. Malformed bytes decode as
// themselves with length 1 so the tokenizer never stalls.
char32_t decode(std::string_view s, std::size_t i, std::size_t& len) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  auto cont = [&](std::size_t k) -> int {
    if (i + k >= s.size()) return -1;
    const auto b = static_cast<unsigned char>(s[i + k]);
    return (b & 0xC0) == 0x80 ? (b & 0x3F) : -1;
  };
  if (b0 < 0x80) {
    len = 1;
    return b0;
  }
  if ((b0 & 0xE0) == 0xC0) {
    const int c1 = cont(1);
    if (c1 >= 0) {
      len = 2;
      return (char32_t(b0 & 0x1F) << 6) | char32_t(c1);
    }
  } else if ((b0 & 0xF0) == 0xE0) {
    const int c1 = cont(1), c2 = cont(2);
    if (c1 >= 0 && c2 >= 0) {
      len = 3;
      return (char32_t(b0 & 0x0F) << 12) | (char32_t(c1) << 6) | char32_t(c2);
    }
  } else if ((b0 & 0xF8) == 0xF0) {
    const int c1 = cont(1), c2 = cont(2), c3 = cont(3);
    if (c1 >= 0 && c2 >= 0 && c3 >= 0) {
      len = 4;
      return (char32_t(b0 & 0x07) << 18) | (char32_t(c1) << 12) | (char32_t(c2) << 6) |
             char32_t(c3);
    }
  }
  len = 1;
  return b0;
}

CharClass classify(char32_t cp) {
  if (cp < 0x80) {
    const char c = static_cast<char>(cp);
    if (c == '.' || c == '!' || c == '?') return CharClass::kTerminal;
    if (std::isspace(static_cast<unsigned char>(c))) return CharClass::kSeparator;
    if (c == '-' || c == '_' || c == '\'') return CharClass::kWord;
    if (std::ispunct(static_cast<unsigned char>(c)) || std::iscntrl(static_cast<unsigned char>(c))) {
      return CharClass::kSeparator;
    }
    return CharClass::kWord;
  }
  switch (cp) {
    case 0x3002:  // 。
    case 0xFF01:  // ！
    case 0xFF1F:  // ？
    case 0xFF0E:  // ．
    case 0x2026:  // …
      return CharClass::kTerminal;
    default:
      break;
  }
  if (cp == 0x00A0 || cp == 0x3000) return CharClass::kSeparator;
  if ((cp >= 0x2000 && cp <= 0x206F) || (cp >= 0x3001 && cp <= 0x303F) ||
      (cp >= 0xFF00 && cp <= 0xFF0F) || (cp >= 0xFF1A && cp <= 0xFF20) ||
      (cp >= 0xFF3B && cp <= 0xFF40) || (cp >= 0xFF5B && cp <= 0xFF65)) {
    return CharClass::kSeparator;
  }
  return CharClass::kWord;
}

}  // namespace

std::vector<Sentence> tokenize(std::string_view raw, const TokenizerOptions& options) {
  std::vector<Sentence> sentences;
  Sentence current;
  Token token;
  bool in_token = false;

  auto close_token = [&](std::size_t end) {
    if (!in_token) return;
    token.end = end;
    current.push_back(std::move(token));
    token = Token{};
    in_token = false;
  };
  auto close_sentence = [&] {
    if (!current.empty()) sentences.push_back(std::move(current));
    current.clear();
  };

  std::size_t i = 0;
  while (i < raw.size()) {
    std::size_t len = 1;
    const char32_t cp = decode(raw, i, len);
    switch (classify(cp)) {
      case CharClass::kWord:
        if (!in_token) {
          in_token = true;
          token.begin = i;
        }
        for (std::size_t k = 0; k < len; ++k) {
          char c = raw[i + k];
          if (options.lowercase && len == 1) {
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
          }
          token.text.push_back(c);
        }
        break;
      case CharClass::kSeparator:
        close_token(i);
        break;
      case CharClass::kTerminal:
        close_token(i);
        close_sentence();
        break;
    }
    i += len;
  }
  close_token(raw.size());
  close_sentence();
  return sentences;
}

Tokenizer reference_tokenizer(TokenizerOptions options) {
  return [options](std::string_view raw) { return tokenize(raw, options); };
}

std::vector<Token> flatten(const std::vector<Sentence>& sentences) {
  std::vector<Token> out;
  for (const auto& s : sentences) out.insert(out.end(), s.begin(), s.end());
  return out;
}

}  // namespace regevo
