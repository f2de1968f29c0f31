#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "conjcat/error.hpp"

namespace conjcat::detail {

struct Token {
  enum class Kind {
    kEnd,
    kIdent,
    kQuoted,    // 'x'
    kLParen,
    kRParen,
    kBackslash,
    kSlash,
    kAmp,
    kPlus,
    kDot,
    kComma,
    kArrow,     // ->
    kTurnstile, // |-
    kStar,
    kBar,
    kTilde,
    kColon,
    kSemicolon,
    kLBrace,
    kRBrace,
  };
  Kind kind = Kind::kEnd;
  std::string text;
  std::size_t position = 0;
};

// Tokenizer shared by the category, sequent, formula and grammar readers.
// `base` shifts reported positions when a sub-range of a larger text is lexed.
class Lexer {
 public:
  explicit Lexer(std::string_view text, std::size_t base = 0) : text_(text), base_(base) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  bool accept(Token::Kind kind) {
    if (current_.kind != kind) return false;
    advance();
    return true;
  }

  Token expect(Token::Kind kind, const char* what) {
    if (current_.kind != kind) fail(std::string("expected ") + what);
    return take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string got = current_.kind == Token::Kind::kEnd ? "end of input" : "'" + current_.text + "'";
    throw SyntaxError(message + ", got " + got, current_.position);
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_ = Token{};
    current_.position = base_ + pos_;
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    auto single = [&](Token::Kind kind) {
      current_.kind = kind;
      current_.text = std::string(1, c);
      ++pos_;
    };
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      current_.kind = Token::Kind::kIdent;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    switch (c) {
      case '\'': {
        if (pos_ + 2 < text_.size() && text_[pos_ + 2] == '\'') {
          current_.kind = Token::Kind::kQuoted;
          current_.text = std::string(1, text_[pos_ + 1]);
          pos_ += 3;
          return;
        }
        throw SyntaxError("malformed quoted symbol", base_ + pos_);
      }
      case '(': return single(Token::Kind::kLParen);
      case ')': return single(Token::Kind::kRParen);
      case '\\': return single(Token::Kind::kBackslash);
      case '/': return single(Token::Kind::kSlash);
      case '&': return single(Token::Kind::kAmp);
      case '+': return single(Token::Kind::kPlus);
      case '.': return single(Token::Kind::kDot);
      case ',': return single(Token::Kind::kComma);
      case '*': return single(Token::Kind::kStar);
      case '~': return single(Token::Kind::kTilde);
      case ':': return single(Token::Kind::kColon);
      case ';': return single(Token::Kind::kSemicolon);
      case '{': return single(Token::Kind::kLBrace);
      case '}': return single(Token::Kind::kRBrace);
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          current_.kind = Token::Kind::kArrow;
          current_.text = "->";
          pos_ += 2;
          return;
        }
        break;
      case '|':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
          current_.kind = Token::Kind::kTurnstile;
          current_.text = "|-";
          pos_ += 2;
          return;
        }
        return single(Token::Kind::kBar);
      default: break;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", base_ + pos_);
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
  Token current_;
};

}  // namespace conjcat::detail
