#include "sexpr.hpp"

#include <cctype>

#include "mixlogic/error.hpp"

namespace mixlogic::detail {

bool SExpr::is_form(std::string_view head) const {
  return is_list() && !items.empty() && items[0].kind == Kind::Atom && items[0].text == head;
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    skip();
    while (i_ < src_.size()) {
      out.push_back(one());
      skip();
    }
    return out;
  }

 private:
  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[i_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++i_;
  }

  void skip() {
    while (i_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[i_]))) {
        advance();
      } else if (src_[i_] == ';') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  SExpr one() {
    SExpr e;
    e.line = line_;
    e.column = col_;
    char c = src_[i_];
    if (c == '(') {
      e.kind = SExpr::Kind::List;
      advance();
      for (;;) {
        skip();
        if (i_ >= src_.size()) throw ParseError(e.line, e.column, "unclosed '('");
        if (src_[i_] == ')') break;
        e.items.push_back(one());
      }
      advance();
    } else if (c == ')') {
      throw ParseError(line_, col_, "unexpected ')'");
    } else if (c == '"') {
      e.kind = SExpr::Kind::String;
      advance();
      std::size_t start = i_;
      while (i_ < src_.size() && src_[i_] != '"') advance();
      if (i_ >= src_.size()) throw ParseError(e.line, e.column, "unterminated string");
      e.text = std::string(src_.substr(start, i_ - start));
      advance();
    } else {
      std::size_t start = i_;
      while (i_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[i_])) && src_[i_] != '(' &&
             src_[i_] != ')' && src_[i_] != '"' && src_[i_] != ';') {
        advance();
      }
      e.text = std::string(src_.substr(start, i_ - start));
    }
    return e;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) { return Reader(text).all(); }

}  // namespace mixlogic::detail
