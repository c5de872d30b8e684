#pragma once

// Tokenizer shared by the LTL and CaRet parsers.

#include "rrmon/error.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rrmon::detail {

enum class TokenKind { word, lparen, rparen, bang, amp, bar, arrow, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;
};

inline bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    switch (c) {
    case '(':
      out.push_back({TokenKind::lparen, "(", start});
      ++i;
      continue;
    case ')':
      out.push_back({TokenKind::rparen, ")", start});
      ++i;
      continue;
    case '!':
      out.push_back({TokenKind::bang, "!", start});
      ++i;
      continue;
    case '&':
      out.push_back({TokenKind::amp, "&", start});
      ++i;
      continue;
    case '|':
      out.push_back({TokenKind::bar, "|", start});
      ++i;
      continue;
    case '-':
      if (i + 1 < text.size() && text[i + 1] == '>') {
        out.push_back({TokenKind::arrow, "->", start});
        i += 2;
        continue;
      }
      break;
    default:
      if (is_word_char(c)) {
        while (i < text.size() && is_word_char(text[i]))
          ++i;
        out.push_back({TokenKind::word, std::string(text.substr(start, i - start)), start});
        continue;
      }
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' at position " + std::to_string(start), 0,
                     start);
  }
  out.push_back({TokenKind::end, "", text.size()});
  return out;
}

inline bool looks_like_operator(std::string_view w) {
  if (w.empty() || !std::isupper(static_cast<unsigned char>(w.front())))
    return false;
  return w.size() <= 2;
}

/// Cursor over a token vector with the error helpers both parsers need.
class TokenCursor {
public:
  explicit TokenCursor(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool at(TokenKind k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const { return peek().kind == TokenKind::word && peek().text == w; }

  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    throw ParseError(msg + " at position " + std::to_string(t.pos), 0, t.pos);
  }

  void expect(TokenKind k, std::string_view what) {
    if (!at(k))
      fail("expected " + std::string(what) + (at(TokenKind::end) ? " but reached end" : ", got '" + peek().text + "'"));
    next();
  }

  /// Called when a complete formula has been read.
  void expect_end() {
    if (at(TokenKind::end))
      return;
    if (at(TokenKind::word) && looks_like_operator(peek().text))
      fail("unknown operator '" + peek().text + "'");
    fail("unexpected '" + peek().text + "'");
  }

private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

} // namespace rrmon::detail
