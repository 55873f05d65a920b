#include "cgdl/error.hpp"
#include "cgdl/syntax.hpp"

#include <array>
#include <utility>

namespace cgdl {

namespace {

enum class Tok {
  ident, kw_true, kw_false,
  semi, amp, plus, star, bar, arrow, iff,
  langle, rangle, lbracket, rbracket, lparen, rparen,
  end,
};

std::string_view describe(Tok t) {
  switch (t) {
  case Tok::ident: return "identifier";
  case Tok::kw_true: return "'true'";
  case Tok::kw_false: return "'false'";
  case Tok::semi: return "';'";
  case Tok::amp: return "'&'";
  case Tok::plus: return "'+'";
  case Tok::star: return "'*'";
  case Tok::bar: return "'|'";
  case Tok::arrow: return "'->'";
  case Tok::iff: return "'<->'";
  case Tok::langle: return "'<'";
  case Tok::rangle: return "'>'";
  case Tok::lbracket: return "'['";
  case Tok::rbracket: return "']'";
  case Tok::lparen: return "'('";
  case Tok::rparen: return "')'";
  case Tok::end: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

// UTF-8 spellings read as ASCII tokens.
constexpr std::array<std::pair<std::string_view, Tok>, 11> kUnicode{{
    {"⊤", Tok::kw_true},
    {"⊥", Tok::kw_false},
    {"∧", Tok::amp},
    {"∩", Tok::amp},
    {"∨", Tok::bar},
    {"∪", Tok::plus},
    {"→", Tok::arrow},
    {"↔", Tok::iff},
    {"⟨", Tok::langle},
    {"⟩", Tok::rangle},
    {"∗", Tok::star},
}};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_head = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto is_tail = [&](char c) { return is_head(c) || (c >= '0' && c <= '9') || c == '\''; };
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (is_head(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && is_tail(s[j]))
        ++j;
      std::string word(s.substr(i, j - i));
      Tok kind = word == "true" ? Tok::kw_true : word == "false" ? Tok::kw_false : Tok::ident;
      out.push_back({kind, std::move(word), i});
      i = j;
      continue;
    }
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::iff, "<->", i});
      i += 3;
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::arrow, "->", i});
      i += 2;
      continue;
    }
    Tok single = Tok::end;
    switch (c) {
    case ';': single = Tok::semi; break;
    case '&': single = Tok::amp; break;
    case '+': single = Tok::plus; break;
    case '*': single = Tok::star; break;
    case '|': single = Tok::bar; break;
    case '<': single = Tok::langle; break;
    case '>': single = Tok::rangle; break;
    case '[': single = Tok::lbracket; break;
    case ']': single = Tok::rbracket; break;
    case '(': single = Tok::lparen; break;
    case ')': single = Tok::rparen; break;
    default: break;
    }
    if (single != Tok::end) {
      out.push_back({single, std::string(1, c), i});
      ++i;
      continue;
    }
    bool matched = false;
    for (const auto& [spelling, kind] : kUnicode) {
      if (s.substr(i, spelling.size()) == spelling) {
        out.push_back({kind, std::string(spelling), i});
        i += spelling.size();
        matched = true;
        break;
      }
    }
    if (!matched)
      throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  ProgramPtr whole_program() {
    auto p = program();
    expect_end();
    return p;
  }

  FormulaPtr whole_formula() {
    auto f = formula();
    expect_end();
    return f;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok t) const { return peek().kind == t; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::string_view wanted) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw ParseError("expected " + std::string(wanted) + ", found " + found, t.offset);
  }

  void expect(Tok t) {
    if (!at(t))
      fail(describe(t));
    ++pos_;
  }

  void expect_end() {
    if (at(Tok::rparen))
      throw ParseError("unbalanced ')'", peek().offset);
    if (!at(Tok::end))
      fail("end of input");
  }

  // Programs.

  ProgramPtr program() {
    auto p = par_program();
    while (at(Tok::plus)) {
      ++pos_;
      p = ast::choice(p, par_program());
    }
    return p;
  }

  ProgramPtr par_program() {
    auto p = seq_program();
    while (at(Tok::amp)) {
      ++pos_;
      p = ast::par(p, seq_program());
    }
    return p;
  }

  ProgramPtr seq_program() {
    auto p = postfix_program();
    while (at(Tok::semi)) {
      ++pos_;
      p = ast::seq(p, postfix_program());
    }
    return p;
  }

  ProgramPtr postfix_program() {
    auto p = primary_program();
    while (at(Tok::star)) {
      ++pos_;
      p = ast::star(p);
    }
    return p;
  }

  ProgramPtr primary_program() {
    if (at(Tok::ident))
      return ast::atomic(next().text);
    if (at(Tok::lparen)) {
      const std::size_t open = next().offset;
      auto p = program();
      if (!at(Tok::rparen)) {
        if (at(Tok::end))
          throw ParseError("unbalanced '('", open);
        fail("')'");
      }
      ++pos_;
      return p;
    }
    fail("a program");
  }

  // Formulas.

  FormulaPtr formula() {
    auto f = implication();
    while (at(Tok::iff)) {
      ++pos_;
      f = ast::iff(f, implication());
    }
    return f;
  }

  FormulaPtr implication() {
    auto f = disjunction();
    if (at(Tok::arrow)) {
      ++pos_;
      return ast::implies(f, implication());
    }
    return f;
  }

  FormulaPtr disjunction() {
    auto f = conjunction();
    while (at(Tok::bar)) {
      ++pos_;
      f = ast::disj(f, conjunction());
    }
    return f;
  }

  FormulaPtr conjunction() {
    auto f = unary();
    while (at(Tok::amp)) {
      ++pos_;
      f = ast::conj(f, unary());
    }
    return f;
  }

  FormulaPtr unary() {
    if (at(Tok::langle)) {
      ++pos_;
      auto p = program();
      expect(Tok::rangle);
      return ast::diamond(p, unary());
    }
    if (at(Tok::lbracket)) {
      ++pos_;
      auto p = program();
      expect(Tok::rbracket);
      return ast::box(p, unary());
    }
    return atom();
  }

  FormulaPtr atom() {
    switch (peek().kind) {
    case Tok::kw_true: ++pos_; return ast::top();
    case Tok::kw_false: ++pos_; return ast::bot();
    case Tok::ident: return ast::prop(next().text);
    case Tok::lparen: {
      const std::size_t open = next().offset;
      auto f = formula();
      if (!at(Tok::rparen)) {
        if (at(Tok::end))
          throw ParseError("unbalanced '('", open);
        fail("')'");
      }
      ++pos_;
      return f;
    }
    default: fail("a formula");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Binding strength; a child is parenthesised when it binds more loosely than
// its slot requires.
int level(const Program& p) {
  switch (p.kind) {
  case Program::Kind::choice: return 1;
  case Program::Kind::par: return 2;
  case Program::Kind::seq: return 3;
  case Program::Kind::star: return 4;
  case Program::Kind::atomic: return 5;
  }
  return 5;
}

int level(const Formula& f) {
  switch (f.kind) {
  case Formula::Kind::iff: return 1;
  case Formula::Kind::implies: return 2;
  case Formula::Kind::disj: return 3;
  case Formula::Kind::conj: return 4;
  case Formula::Kind::diamond:
  case Formula::Kind::box: return 5;
  default: return 6;
  }
}

void emit(const Program& p, int need, std::string& out);
void emit(const Formula& f, int need, std::string& out);

void emit(const Program& p, int need, std::string& out) {
  const int own = level(p);
  const bool wrap = own < need;
  if (wrap)
    out += '(';
  switch (p.kind) {
  case Program::Kind::atomic: out += p.name; break;
  case Program::Kind::star:
    emit(*p.left, 4, out);
    out += '*';
    break;
  default: {
    const char* op = p.kind == Program::Kind::seq ? " ; " : p.kind == Program::Kind::par ? " & " : " + ";
    emit(*p.left, own, out);
    out += op;
    emit(*p.right, own + 1, out);
  }
  }
  if (wrap)
    out += ')';
}

void emit(const Formula& f, int need, std::string& out) {
  const int own = level(f);
  const bool wrap = own < need;
  if (wrap)
    out += '(';
  switch (f.kind) {
  case Formula::Kind::top: out += "true"; break;
  case Formula::Kind::bot: out += "false"; break;
  case Formula::Kind::prop: out += f.name; break;
  case Formula::Kind::diamond:
  case Formula::Kind::box:
    out += f.kind == Formula::Kind::diamond ? '<' : '[';
    emit(*f.program, 1, out);
    out += f.kind == Formula::Kind::diamond ? '>' : ']';
    emit(*f.left, 5, out);
    break;
  case Formula::Kind::implies:
    emit(*f.left, own + 1, out);
    out += " -> ";
    emit(*f.right, own, out);
    break;
  default: {
    const char* op = f.kind == Formula::Kind::iff ? " <-> " : f.kind == Formula::Kind::disj ? " | " : " & ";
    emit(*f.left, own, out);
    out += op;
    emit(*f.right, own + 1, out);
  }
  }
  if (wrap)
    out += ')';
}

} // namespace

ProgramPtr parse_program(std::string_view text) { return Parser(text).whole_program(); }

FormulaPtr parse_formula(std::string_view text) { return Parser(text).whole_formula(); }

std::string render(const Program& p) {
  std::string out;
  emit(p, 0, out);
  return out;
}

std::string render(const Formula& f) {
  std::string out;
  emit(f, 0, out);
  return out;
}

} // namespace cgdl
