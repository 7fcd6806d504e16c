#pragma once

// Tokenizer shared by the term, formula and equation readers.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mixlogic/error.hpp"

namespace mixlogic::detail {

enum class Tok { Ident, Number, Stack, Sigil, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  auto starts = [&](std::string_view s) { return src.substr(i, s.size()) == s; };
  auto is_ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  };
  static constexpr std::pair<std::string_view, std::string_view> kUnicode[] = {
      {"λ", "\\"}, {"μ", "mu"}, {"∀", "forall"}, {"⊥", "_|_"}, {"¬", "~"}, {"→", "->"}};

  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t l = line, cl = col;
    bool matched = false;
    for (auto [u, ascii] : kUnicode) {
      if (starts(u)) {
        out.push_back({ascii == "mu" || ascii == "forall" ? Tok::Ident : Tok::Punct, std::string(ascii), l, cl});
        advance(u.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (starts("_|_") || starts("->")) {
      out.push_back({Tok::Punct, std::string(src.substr(i, starts("->") ? 2 : 3)), l, cl});
      advance(out.back().text.size());
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
    } else if (c == '#' || c == '@') {
      std::size_t j = i + 1;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      if (j == i + 1) throw ParseError(l, cl, std::string("expected a name after '") + c + "'");
      out.push_back({c == '#' ? Tok::Stack : Tok::Sigil, std::string(src.substr(i + 1, j - i - 1)), l, cl});
      advance(j - i);
    } else if (std::string_view("\\.()[]{},=~*").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), l, cl});
      advance(1);
    } else {
      throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class TokenCursor {
 public:
  explicit TokenCursor(std::string_view src) : toks_(tokenize(src)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
  }
  bool at_ident(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }
  bool accept(std::string_view p) {
    if (!at_punct(p)) return false;
    next();
    return true;
  }
  void expect(std::string_view p) {
    if (!accept(p)) fail("expected '" + std::string(p) + "'");
  }
  std::string expect_ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what);
    return next().text;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, msg + ", got " + got);
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected trailing input");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace mixlogic::detail
