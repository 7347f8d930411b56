#pragma once

// Lexer shared by the program, assertion and proof-script grammars, plus the
// concrete syntax for IMP programs.
//
// Program syntax (see docs/formats.md for the full grammar):
//   statements separated by ";", blocks in "{ }",
//   keywords skip / if / then / else / while / do / true / false,
//   assignment ":=", comparisons = < <= (plus > >= != sugar),
//   boolean ! &&, decimal integer literals, identifiers
//   [A-Za-z_][A-Za-z0-9_]*, and "//" line comments.
//
// The sugared comparisons normalize at parse time: a > b becomes b < a,
// a >= b becomes b <= a, and a != b becomes !(a = b).

#include <cctype>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "relic/errors.hpp"
#include "relic/imp.hpp"

namespace relic {

// ---------------------------------------------------------------------------
// Tokens

enum class Tok {
  End,
  Int,         // decimal literal
  Ident,       // identifier or keyword (keywords are contextual)
  TaggedIdent, // x<1> or x<2>, lexed as a single token
  Assign,      // :=
  Semi,        // ;
  Comma,       // ,
  Dot,         // .
  Colon,       // :
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Lt,          // <
  Leq,         // <=
  Gt,          // >
  Geq,         // >=
  Eq,          // =
  EqEq,        // ==
  Neq,         // !=
  Not,         // !
  AndAnd,      // &&
  OrOr,        // ||
  Implies,     // =>
  Plus,
  Minus,
  Star,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;       // identifier name / tagged name (without the tag)
  std::int64_t value = 0; // integer literals
  int side = 0;           // 1 or 2 for TaggedIdent
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { tokenize(); }

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_ident(std::string_view word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }
  std::optional<Token> accept(Tok k) {
    if (at(k)) return next();
    return std::nullopt;
  }
  bool accept_ident(std::string_view word) {
    if (at_ident(word)) {
      next();
      return true;
    }
    return false;
  }
  Token expect(Tok k, const std::string& what) {
    if (!at(k)) fail("expected " + what);
    return next();
  }
  void expect_ident(std::string_view word) {
    if (!accept_ident(word)) fail("expected '" + std::string(word) + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + describe(t) + "'";
    throw ParseError(msg + ", got " + got, t.line, t.column);
  }

  std::size_t mark() const { return pos_; }
  void rewind(std::size_t m) { pos_ = m; }

 private:
  static std::string describe(const Token& t) {
    if (t.kind == Tok::Int) return std::to_string(t.value);
    if (t.kind == Tok::Ident) return t.text;
    if (t.kind == Tok::TaggedIdent) return t.text + "<" + std::to_string(t.side) + ">";
    static const char* names[] = {"",   "",  "",  "",   ":=", ";",  ",", ".", ":", "(",
                                  ")",  "{", "}", "[",  "]",  "<",  "<=", ">", ">=", "=",
                                  "==", "!=", "!", "&&", "||", "=>", "+", "-", "*"};
    return names[static_cast<int>(t.kind)];
  }

  void tokenize() {
    std::size_t i = 0, line = 1, col = 1;
    auto advance = [&](std::size_t n) {
      for (std::size_t k = 0; k < n; ++k) {
        if (src_[i + k] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      i += n;
    };
    auto push = [&](Tok kind, std::size_t len, std::size_t l, std::size_t c) {
      Token t;
      t.kind = kind;
      t.line = l;
      t.column = c;
      tokens_.push_back(t);
      advance(len);
    };

    while (i < src_.size()) {
      char ch = src_[i];
      if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
        advance(1);
        continue;
      }
      if (ch == '/' && i + 1 < src_.size() && src_[i + 1] == '/') {
        while (i < src_.size() && src_[i] != '\n') advance(1);
        continue;
      }
      const std::size_t l = line, c = col;
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t j = i;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        Token t;
        t.kind = Tok::Int;
        t.line = l;
        t.column = c;
        try {
          t.value = std::stoll(std::string(src_.substr(i, j - i)));
        } catch (const std::exception&) {
          throw ParseError("integer literal out of range", l, c);
        }
        tokens_.push_back(t);
        advance(j - i);
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t j = i;
        while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) ||
                                   src_[j] == '_'))
          ++j;
        Token t;
        t.line = l;
        t.column = c;
        t.text = std::string(src_.substr(i, j - i));
        // x<1> / x<2> with no intervening spaces lexes as one tagged token.
        if (j + 2 < src_.size() && src_[j] == '<' && (src_[j + 1] == '1' || src_[j + 1] == '2') &&
            src_[j + 2] == '>') {
          t.kind = Tok::TaggedIdent;
          t.side = src_[j + 1] - '0';
          tokens_.push_back(t);
          advance(j + 3 - i);
        } else {
          t.kind = Tok::Ident;
          tokens_.push_back(t);
          advance(j - i);
        }
        continue;
      }
      auto two = [&](char a, char b) {
        return ch == a && i + 1 < src_.size() && src_[i + 1] == b;
      };
      if (two(':', '=')) { push(Tok::Assign, 2, l, c); continue; }
      if (two('<', '=')) { push(Tok::Leq, 2, l, c); continue; }
      if (two('>', '=')) { push(Tok::Geq, 2, l, c); continue; }
      if (two('=', '=')) { push(Tok::EqEq, 2, l, c); continue; }
      if (two('=', '>')) { push(Tok::Implies, 2, l, c); continue; }
      if (two('!', '=')) { push(Tok::Neq, 2, l, c); continue; }
      if (two('&', '&')) { push(Tok::AndAnd, 2, l, c); continue; }
      if (two('|', '|')) { push(Tok::OrOr, 2, l, c); continue; }
      switch (ch) {
        case ';': push(Tok::Semi, 1, l, c); continue;
        case ',': push(Tok::Comma, 1, l, c); continue;
        case '.': push(Tok::Dot, 1, l, c); continue;
        case ':': push(Tok::Colon, 1, l, c); continue;
        case '(': push(Tok::LParen, 1, l, c); continue;
        case ')': push(Tok::RParen, 1, l, c); continue;
        case '{': push(Tok::LBrace, 1, l, c); continue;
        case '}': push(Tok::RBrace, 1, l, c); continue;
        case '[': push(Tok::LBracket, 1, l, c); continue;
        case ']': push(Tok::RBracket, 1, l, c); continue;
        case '<': push(Tok::Lt, 1, l, c); continue;
        case '>': push(Tok::Gt, 1, l, c); continue;
        case '=': push(Tok::Eq, 1, l, c); continue;
        case '!': push(Tok::Not, 1, l, c); continue;
        case '+': push(Tok::Plus, 1, l, c); continue;
        case '-': push(Tok::Minus, 1, l, c); continue;
        case '*': push(Tok::Star, 1, l, c); continue;
        default:
          throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
      }
    }
    Token end;
    end.kind = Tok::End;
    end.line = line;
    end.column = col;
    tokens_.push_back(end);
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Program parser

namespace detail {

inline bool is_imp_keyword(const std::string& w) {
  return w == "skip" || w == "if" || w == "then" || w == "else" || w == "while" ||
         w == "do" || w == "true" || w == "false";
}

class ImpParser {
 public:
  // lookup resolves bare identifiers in command position to previously
  // defined program fragments (used by proof scripts); empty outside scripts.
  using ProgLookup = std::function<CommandPtr(const std::string&)>;
  explicit ImpParser(Lexer& lx, ProgLookup lookup = {}) : lx_(lx), lookup_(std::move(lookup)) {}

  CommandPtr parse_command() {
    CommandPtr first = parse_statement();
    if (!lx_.at(Tok::Semi) || !starts_statement(1)) return first;
    lx_.next();
    return c_seq(first, parse_command());
  }

  // A single statement: skip, assignment, if, while, block, or a named
  // program fragment.
  CommandPtr parse_statement() {
    if (lx_.accept(Tok::LBrace)) {
      CommandPtr inner = parse_command();
      lx_.accept(Tok::Semi);  // optional trailing separator
      lx_.expect(Tok::RBrace, "'}'");
      return inner;
    }
    if (lx_.accept_ident("skip")) return c_skip();
    if (lx_.at_ident("if")) {
      lx_.next();
      BExpPtr cond = parse_bexp();
      lx_.expect_ident("then");
      CommandPtr then_branch = parse_statement();
      lx_.expect_ident("else");
      CommandPtr else_branch = parse_statement();
      return c_if(std::move(cond), std::move(then_branch), std::move(else_branch));
    }
    if (lx_.at_ident("while")) {
      lx_.next();
      BExpPtr cond = parse_bexp();
      lx_.expect_ident("do");
      CommandPtr body = parse_statement();
      return c_while(std::move(cond), std::move(body));
    }
    if (lx_.at(Tok::Ident) && !is_imp_keyword(lx_.peek().text)) {
      Token name = lx_.next();
      if (lx_.accept(Tok::Assign)) return c_assign(name.text, parse_aexp());
      if (lookup_) {
        if (CommandPtr ref = lookup_(name.text)) return ref;
      }
      throw ParseError("expected ':=' after identifier '" + name.text + "'", name.line,
                       name.column);
    }
    lx_.fail("expected a statement");
  }

  BExpPtr parse_bexp() { return parse_conj(); }

  AExpPtr parse_aexp() {
    AExpPtr lhs = parse_term();
    while (lx_.at(Tok::Plus) || lx_.at(Tok::Minus)) {
      AOp op = lx_.next().kind == Tok::Plus ? AOp::Add : AOp::Sub;
      lhs = a_bin(op, std::move(lhs), parse_term());
    }
    return lhs;
  }

 private:
  bool starts_statement(std::size_t ahead) const {
    const Token& t = lx_.peek(ahead);
    if (t.kind == Tok::LBrace) return true;
    if (t.kind != Tok::Ident) return false;
    if (t.text == "skip" || t.text == "if" || t.text == "while") return true;
    return !is_imp_keyword(t.text) && !reserved_.count(t.text);
  }

  BExpPtr parse_conj() {
    BExpPtr lhs = parse_batom();
    while (lx_.accept(Tok::AndAnd)) lhs = b_and(std::move(lhs), parse_batom());
    return lhs;
  }

  BExpPtr parse_batom() {
    if (lx_.accept(Tok::Not)) return b_not(parse_batom());
    if (lx_.accept_ident("true")) return b_lit(true);
    if (lx_.accept_ident("false")) return b_lit(false);
    if (lx_.at(Tok::LParen)) {
      // Could be a parenthesized boolean or the left operand of a comparison.
      std::size_t m = lx_.mark();
      lx_.next();
      try {
        BExpPtr inner = parse_bexp();
        lx_.expect(Tok::RParen, "')'");
        return inner;
      } catch (const ParseError&) {
        lx_.rewind(m);
      }
    }
    return parse_comparison();
  }

  BExpPtr parse_comparison() {
    AExpPtr lhs = parse_aexp();
    if (lx_.accept(Tok::Eq)) return b_cmp(CmpOp::Eq, std::move(lhs), parse_aexp());
    if (lx_.accept(Tok::Lt)) return b_cmp(CmpOp::Less, std::move(lhs), parse_aexp());
    if (lx_.accept(Tok::Leq)) return b_cmp(CmpOp::Leq, std::move(lhs), parse_aexp());
    if (lx_.accept(Tok::Gt)) return b_cmp(CmpOp::Less, parse_aexp(), std::move(lhs));
    if (lx_.accept(Tok::Geq)) return b_cmp(CmpOp::Leq, parse_aexp(), std::move(lhs));
    if (lx_.accept(Tok::Neq)) return b_not(b_cmp(CmpOp::Eq, std::move(lhs), parse_aexp()));
    lx_.fail("expected a comparison operator (=, <, <=, >, >=, !=)");
  }

  AExpPtr parse_term() {
    AExpPtr lhs = parse_factor();
    while (lx_.accept(Tok::Star)) lhs = a_bin(AOp::Mul, std::move(lhs), parse_factor());
    return lhs;
  }

  AExpPtr parse_factor() {
    if (lx_.at(Tok::Int)) return a_lit(lx_.next().value);
    if (lx_.accept(Tok::Minus)) {
      Token t = lx_.expect(Tok::Int, "integer literal after unary '-'");
      return a_lit(-t.value);
    }
    if (lx_.at(Tok::Ident) && !is_imp_keyword(lx_.peek().text)) return a_var(lx_.next().text);
    if (lx_.accept(Tok::LParen)) {
      AExpPtr inner = parse_aexp();
      lx_.expect(Tok::RParen, "')'");
      return inner;
    }
    lx_.fail("expected an arithmetic expression");
  }

  Lexer& lx_;
  ProgLookup lookup_;

 public:
  // Extra identifiers the surrounding grammar reserves (proof scripts).
  std::set<std::string> reserved_;
};

}  // namespace detail

inline CommandPtr parse_command(std::string_view text) {
  Lexer lx(text);
  detail::ImpParser p(lx);
  CommandPtr c = p.parse_command();
  lx.accept(Tok::Semi);
  if (!lx.at(Tok::End)) lx.fail("expected end of program");
  return c;
}

inline AExpPtr parse_aexp(std::string_view text) {
  Lexer lx(text);
  detail::ImpParser p(lx);
  AExpPtr e = p.parse_aexp();
  if (!lx.at(Tok::End)) lx.fail("expected end of expression");
  return e;
}

inline BExpPtr parse_bexp(std::string_view text) {
  Lexer lx(text);
  detail::ImpParser p(lx);
  BExpPtr b = p.parse_bexp();
  if (!lx.at(Tok::End)) lx.fail("expected end of expression");
  return b;
}

// ---------------------------------------------------------------------------
// Printing. parse_command(print_command(c)) reproduces c exactly.

namespace detail {
inline void print_aexp(std::ostream& os, const AExp& e, int parent_prec) {
  if (const auto* lit = std::get_if<ALit>(&e.node)) {
    os << lit->value;
    return;
  }
  if (const auto* var = std::get_if<AVar>(&e.node)) {
    os << var->name;
    return;
  }
  const auto& bin = std::get<ABin>(e.node);
  const int prec = bin.op == AOp::Mul ? 2 : 1;
  if (prec < parent_prec) os << "(";
  print_aexp(os, *bin.lhs, prec);
  os << (bin.op == AOp::Add ? " + " : bin.op == AOp::Sub ? " - " : " * ");
  // +,-,* are left-associative; the right operand needs one level more.
  print_aexp(os, *bin.rhs, prec + 1);
  if (prec < parent_prec) os << ")";
}

inline void print_bexp(std::ostream& os, const BExp& b, int parent_prec) {
  // precedence: atoms/! = 3, && = 1
  if (const auto* lit = std::get_if<BLit>(&b.node)) {
    os << (lit->value ? "true" : "false");
    return;
  }
  if (const auto* cmp = std::get_if<BCmp>(&b.node)) {
    print_aexp(os, *cmp->lhs, 0);
    os << (cmp->op == CmpOp::Eq ? " = " : cmp->op == CmpOp::Less ? " < " : " <= ");
    print_aexp(os, *cmp->rhs, 0);
    return;
  }
  if (const auto* neg = std::get_if<BNot>(&b.node)) {
    os << "!";
    bool paren = !std::holds_alternative<BLit>(neg->arg->node);
    if (paren) os << "(";
    print_bexp(os, *neg->arg, 0);
    if (paren) os << ")";
    return;
  }
  const auto& conj = std::get<BAnd>(b.node);
  if (parent_prec > 1) os << "(";
  print_bexp(os, *conj.lhs, 1);
  os << " && ";
  print_bexp(os, *conj.rhs, 2);
  if (parent_prec > 1) os << ")";
}

inline void print_command(std::ostream& os, const Command& c, int indent);

inline void print_branch(std::ostream& os, const Command& c, int indent) {
  // Compound branches need braces so the statement boundary survives a
  // round-trip.
  if (std::holds_alternative<CSeq>(c.node)) {
    os << "{\n";
    print_command(os, c, indent + 2);
    os << "\n" << std::string(indent, ' ') << "}";
  } else {
    os << "{ ";
    print_command(os, c, 0);
    os << " }";
  }
}

inline void print_command(std::ostream& os, const Command& c, int indent) {
  const std::string pad(indent, ' ');
  if (std::holds_alternative<CSkip>(c.node)) {
    os << pad << "skip";
    return;
  }
  if (const auto* assign = std::get_if<CAssign>(&c.node)) {
    os << pad << assign->var << " := ";
    print_aexp(os, *assign->value, 0);
    return;
  }
  if (const auto* seq = std::get_if<CSeq>(&c.node)) {
    // Right-nested sequences print flat; a left-nested head keeps braces.
    if (std::holds_alternative<CSeq>(seq->first->node)) {
      os << pad << "{\n";
      print_command(os, *seq->first, indent + 2);
      os << "\n" << pad << "};\n";
    } else {
      print_command(os, *seq->first, indent);
      os << ";\n";
    }
    print_command(os, *seq->second, indent);
    return;
  }
  if (const auto* cond = std::get_if<CIf>(&c.node)) {
    os << pad << "if ";
    print_bexp(os, *cond->cond, 0);
    os << " then ";
    print_branch(os, *cond->then_branch, indent);
    os << " else ";
    print_branch(os, *cond->else_branch, indent);
    return;
  }
  const auto& loop = std::get<CWhile>(c.node);
  os << pad << "while ";
  print_bexp(os, *loop.cond, 0);
  os << " do ";
  print_branch(os, *loop.body, indent);
}
}  // namespace detail

inline std::string print_aexp(const AExp& e) {
  std::ostringstream os;
  detail::print_aexp(os, e, 0);
  return os.str();
}

inline std::string print_bexp(const BExp& b) {
  std::ostringstream os;
  detail::print_bexp(os, b, 0);
  return os.str();
}

inline std::string print_command(const Command& c) {
  std::ostringstream os;
  detail::print_command(os, c, 0);
  return os.str();
}

}  // namespace relic
