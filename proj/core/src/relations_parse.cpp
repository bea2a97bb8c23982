#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tphs/errors.hpp"
#include "tphs/relations.hpp"

namespace tphs {

namespace {

// ---------------------------------------------------------------------------
// Tokens
// ---------------------------------------------------------------------------

enum class Tok {
  ident,    // D3, SQ, DBAR2, space, n, quat_proj, ...
  integer,  // 12
  punct,    // one of = >= == [ ] { } ( ) , * + - / :
  end,      // end of line
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t col;  // 1-based
};

std::vector<Token> lex(const std::string& line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;  // comment to end of line
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) ||
              line[j] == '_'))
        ++j;
      out.push_back({Tok::ident, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() &&
             std::isdigit(static_cast<unsigned char>(line[j])))
        ++j;
      out.push_back({Tok::integer, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    if ((c == '>' || c == '=') && i + 1 < line.size() && line[i + 1] == '=') {
      out.push_back({Tok::punct, line.substr(i, 2), col});
      i += 2;
      continue;
    }
    if (std::string("=[]{}(),*+-/:").find(c) != std::string::npos) {
      out.push_back({Tok::punct, std::string(1, c), col});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", lineno,
                     col);
  }
  out.push_back({Tok::end, "", line.size() + 1});
  return out;
}

// Canonical generator name: DBAR<k> -> D<k>, SQBAR[<k>] -> SQ[<k>];
// rejects anything that is not D<k> or SQ[<k>] shaped.
std::string canonical_name(const std::string& raw, std::size_t lineno,
                           std::size_t col) {
  std::string head, digits;
  std::size_t i = 0;
  while (i < raw.size() && std::isupper(static_cast<unsigned char>(raw[i])))
    ++i;
  head = raw.substr(0, i);
  digits = raw.substr(i);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("unknown identifier '" + raw + "'", lineno, col);
  if (head == "DBAR") head = "D";
  if (head == "SQBAR") head = "SQ";
  if (head == "D" && !digits.empty()) return head + digits;
  if (head == "SQ") return head + digits;
  throw ParseError("unknown identifier '" + raw + "'", lineno, col);
}

// ---------------------------------------------------------------------------
// Recursive-descent expression parser over one token line
// ---------------------------------------------------------------------------

class LineParser {
 public:
  LineParser(std::vector<Token> toks, std::size_t lineno)
      : toks_(std::move(toks)), lineno_(lineno) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_punct(std::string_view p) const {
    return peek().kind == Tok::punct && peek().text == p;
  }
  Token take() { return toks_[pos_++]; }
  void expect_punct(std::string_view p) {
    if (!at_punct(p))
      throw ParseError("expected '" + std::string(p) + "'", lineno_,
                       peek().col);
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Tok::end)
      throw ParseError("trailing input '" + peek().text + "'", lineno_,
                       peek().col);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, lineno_, peek().col);
  }

  Expr expr() {
    Expr acc = term();
    while (at_punct("+") || at_punct("-")) {
      const bool plus = take().text == "+";
      acc = Expr::binary(plus ? ExprKind::add : ExprKind::sub, std::move(acc),
                         term());
    }
    return acc;
  }

  long integer() {
    if (peek().kind != Tok::integer) fail("expected an integer");
    return std::stol(take().text);
  }

 private:
  Expr term() {
    Expr acc = factor();
    while (at_punct("*"))
      acc = (take(), Expr::binary(ExprKind::mul, std::move(acc), factor()));
    return acc;
  }

  Expr factor() {
    if (at_punct("-")) {
      take();
      return Expr::negate(atom());
    }
    return atom();
  }

  Expr atom() {
    const Token& t = peek();
    if (t.kind == Tok::integer) {
      const long num = integer();
      if (at_punct("/")) {
        take();
        const long den = integer();
        if (den == 0) fail("zero denominator");
        return Expr::number(Rational(num, den));
      }
      return Expr::number(Rational(num));
    }
    if (t.kind == Tok::ident) {
      if (t.text == "n") {
        take();
        return Expr::n();
      }
      Token id = take();
      return Expr::leaf(canonical_name(id.text, lineno_, id.col));
    }
    if (at_punct("[") || at_punct("{")) {
      const bool comm = take().text == "[";
      Expr a = expr();
      expect_punct(",");
      Expr b = expr();
      expect_punct(comm ? "]" : "}");
      return Expr::binary(
          comm ? ExprKind::commutator : ExprKind::anticommutator, std::move(a),
          std::move(b));
    }
    if (at_punct("(")) {
      take();
      Expr a = expr();
      expect_punct(")");
      return a;
    }
    fail("expected an expression");
  }

  std::vector<Token> toks_;
  std::size_t lineno_;
  std::size_t pos_ = 0;
};

struct Scope {
  Space space;
  int min_n;
  bool exact_n;
};

}  // namespace

std::vector<Relation> parse_relations(std::istream& in) {
  std::vector<Relation> out;
  std::optional<Scope> scope;
  std::map<std::string, int> seen;

  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    std::vector<Token> toks = lex(line, lineno);
    if (toks.front().kind == Tok::end) continue;

    if (toks.front().kind == Tok::ident && toks.front().text == "space") {
      // space <name>(n >= k):   or   space <name>(n == k):
      LineParser p(std::move(toks), lineno);
      p.take();  // "space"
      if (p.peek().kind != Tok::ident) p.fail("expected a space name");
      Token name = p.take();
      Space space;
      try {
        space = space_from_name(name.text);
      } catch (const UnsupportedSpaceError&) {
        throw ParseError("unknown space '" + name.text + "'", lineno,
                         name.col);
      }
      p.expect_punct("(");
      if (p.peek().kind != Tok::ident || p.peek().text != "n")
        p.fail("expected 'n'");
      p.take();
      if (!p.at_punct(">=") && !p.at_punct("=="))
        p.fail("expected '>=' or '=='");
      const bool exact = p.take().text == "==";
      const long bound = p.integer();
      if (bound < 2) p.fail("n bound must be at least 2");
      p.expect_punct(")");
      p.expect_punct(":");
      p.expect_end();
      scope = Scope{space, static_cast<int>(bound), exact};
      continue;
    }

    if (!scope)
      throw ParseError("statement outside a space block", lineno,
                       toks.front().col);
    LineParser p(std::move(toks), lineno);
    Relation r;
    r.lhs = p.expr();
    p.expect_punct("=");
    r.rhs = p.expr();
    p.expect_end();
    r.space = scope->space;
    r.min_n = scope->min_n;
    r.exact_n = scope->exact_n;
    r.line = lineno;
    r.id = expr_str(r.lhs);
    const int k = ++seen[r.id];
    if (k > 1) r.id += "#" + std::to_string(k);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Relation> parse_relations_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_relations(in);
}

std::vector<Relation> load_relations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvariantError("cannot open relation file: " + path);
  return parse_relations(in);
}

Expr parse_expr_text(std::string_view text) {
  LineParser p(lex(std::string(text), 1), 1);
  Expr e = p.expr();
  p.expect_end();
  return e;
}

}  // namespace tphs
