#include "lpod/parser.hpp"

#include <cctype>
#include <sstream>

#include "lpod/errors.hpp"

namespace lpod {

namespace {

enum class TokenKind { atom, kw_not, separator, arrow, comma, dot, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::atom: return "atom";
    case TokenKind::kw_not: return "'not'";
    case TokenKind::separator: return "'x'";
    case TokenKind::arrow: return "'<-'";
    case TokenKind::comma: return "','";
    case TokenKind::dot: return "'.'";
    case TokenKind::end: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blanks_and_comments();
    std::size_t line = line_, column = column_;
    if (pos_ >= text_.size()) return {TokenKind::end, "", line, column};

    char c = text_[pos_];
    if (c == '.') {
      advance();
      return {TokenKind::dot, ".", line, column};
    }
    if (c == ',') {
      advance();
      return {TokenKind::comma, ",", line, column};
    }
    if (c == '<' || c == ':') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        advance();
        advance();
        return {TokenKind::arrow, "<-", line, column};
      }
      throw ParseError(line, column, std::string("unexpected character '") + c + "'");
    }
    if (c >= 'a' && c <= 'z') {
      std::string word;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) {
        word.push_back(text_[pos_]);
        advance();
      }
      if (word == "x") return {TokenKind::separator, word, line, column};
      if (word == "not") return {TokenKind::kw_not, word, line, column};
      return {TokenKind::atom, word, line, column};
    }
    throw ParseError(line, column,
                     std::string("unexpected character '") + c +
                         "' (atoms start with a lowercase letter)");
  }

 private:
  static bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blanks_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  std::vector<Rule> parse() {
    std::vector<Rule> rules;
    while (current_.kind != TokenKind::end) {
      rules.push_back(parse_rule());
    }
    return rules;
  }

 private:
  void shift() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError(current_.line, current_.column,
                     "expected " + expected + ", found " +
                         describe(current_.kind) +
                         (current_.text.empty() ? "" : " '" + current_.text + "'"));
  }

  std::string expect_atom() {
    if (current_.kind != TokenKind::atom) fail("atom");
    std::string name = current_.text;
    shift();
    return name;
  }

  Rule parse_rule() {
    Rule rule;
    rule.head.push_back(expect_atom());
    while (current_.kind == TokenKind::separator) {
      shift();
      rule.head.push_back(expect_atom());
    }
    if (current_.kind == TokenKind::arrow) {
      shift();
      if (current_.kind != TokenKind::dot) {
        parse_literal(rule);
        while (current_.kind == TokenKind::comma) {
          shift();
          parse_literal(rule);
        }
      }
    }
    if (current_.kind != TokenKind::dot) fail("'.', 'x', '<-' or ','");
    shift();
    return rule;
  }

  void parse_literal(Rule& rule) {
    if (current_.kind == TokenKind::kw_not) {
      shift();
      rule.body_neg.push_back(expect_atom());
    } else {
      rule.body_pos.push_back(expect_atom());
    }
  }

  Lexer lexer_;
  Token current_{TokenKind::end, "", 1, 1};
};

}  // namespace

Program parse_program(std::string_view text) {
  return Program(Parser(text).parse());
}

std::string serialize_rule(const Rule& rule) {
  std::ostringstream out;
  for (std::size_t i = 0; i < rule.head.size(); ++i) {
    if (i > 0) out << " x ";
    out << rule.head[i];
  }
  if (!rule.is_fact()) {
    out << " <- ";
    bool first = true;
    for (const auto& atom : rule.body_pos) {
      if (!first) out << ", ";
      out << atom;
      first = false;
    }
    for (const auto& atom : rule.body_neg) {
      if (!first) out << ", ";
      out << "not " << atom;
      first = false;
    }
  }
  out << ".";
  return out.str();
}

std::string serialize_program(const Program& program) {
  std::ostringstream out;
  for (const auto& rule : program.rules()) {
    out << serialize_rule(rule) << "\n";
  }
  return out.str();
}

}  // namespace lpod
