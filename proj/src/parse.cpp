#include "condlog/parse.hpp"

#include <cctype>
#include <vector>

namespace condlog {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error("at " + std::to_string(position) + ": " + message), kind_(kind), position_(position) {}

namespace {

enum class Tok {
  Ident, Number, LParen, RParen, Comma, Tilde, CondArrow, CondLevelOpen, RBracket,
  Amp, Bar, Implies, Iff, Eq, Neq, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto syntax = [&](const std::string& m) { return ParseError(ParseError::Kind::Syntax, i, m); };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '.' || s[i] == '/' ||
                              ((s[i] == '-' || s[i] == '+') && (s[i - 1] == 'e' || s[i - 1] == 'E'))))
        ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
    if (starts("<=>")) { out.push_back({Tok::Iff, "<=>", start}); i += 3; continue; }
    if (starts("~>[")) { out.push_back({Tok::CondLevelOpen, "~>[", start}); i += 3; continue; }
    if (starts("~>")) { out.push_back({Tok::CondArrow, "~>", start}); i += 2; continue; }
    if (starts("=>")) { out.push_back({Tok::Implies, "=>", start}); i += 2; continue; }
    if (starts("!=")) { out.push_back({Tok::Neq, "!=", start}); i += 2; continue; }
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", start}); break;
      case ')': out.push_back({Tok::RParen, ")", start}); break;
      case ',': out.push_back({Tok::Comma, ",", start}); break;
      case '~': out.push_back({Tok::Tilde, "~", start}); break;
      case ']': out.push_back({Tok::RBracket, "]", start}); break;
      case '&': out.push_back({Tok::Amp, "&", start}); break;
      case '|': out.push_back({Tok::Bar, "|", start}); break;
      case '=': out.push_back({Tok::Eq, "=", start}); break;
      default: throw syntax(std::string("unexpected character '") + c + "'");
    }
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "true" || s == "false" || s == "N";
}

class Parser {
 public:
  Parser(std::string_view text, Vocabulary& vocab, SymbolPolicy policy)
      : tokens_(lex(text)), vocab_(vocab), policy_(policy) {}

  Formula formula_to_end() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  Term term_to_end() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(ParseError::Kind kind, const std::string& msg) const {
    throw ParseError(kind, peek().pos, msg);
  }
  [[noreturn]] void fail_at(ParseError::Kind kind, std::size_t pos, const std::string& msg) const {
    throw ParseError(kind, pos, msg);
  }

  const Token& expect(Tok k, const std::string& what) {
    if (!at(k)) {
      const auto& t = peek();
      fail(ParseError::Kind::Syntax, "expected " + what + ", found " + (t.kind == Tok::End ? "end of input" : "'" + t.text + "'"));
    }
    return next();
  }

  Formula formula() {
    Formula f = implication();
    while (at(Tok::Iff)) {
      next();
      f = Formula::equivalence(f, implication());
    }
    return f;
  }

  Formula implication() {
    Formula f = disjunction();
    if (at(Tok::Implies)) {
      next();
      return Formula::implication(f, implication());
    }
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (at(Tok::Bar)) {
      next();
      f = Formula::disjunction(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (at(Tok::Amp)) {
      next();
      f = Formula::conjunction(f, unary());
    }
    return f;
  }

  Formula unary() {
    const Token& t = peek();
    if (t.kind == Tok::Tilde) {
      next();
      return Formula::negation(unary());
    }
    if (t.kind == Tok::LParen) return parenthesized();
    if (t.kind == Tok::Ident) {
      if (t.text == "N") {
        next();
        return almost_surely(unary());
      }
      if (t.text == "forall" || t.text == "exists") return quantified();
      if (t.text == "true" || t.text == "false") {
        next();
        return t.text == "true" ? Formula::truth() : Formula::falsum();
      }
      return atomic();
    }
    fail(ParseError::Kind::Syntax, t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  Formula parenthesized() {
    expect(Tok::LParen, "'('");
    Formula a = formula();
    if (at(Tok::CondArrow)) {
      next();
      Formula b = formula();
      expect(Tok::RParen, "')'");
      return Formula::cond(a, b);
    }
    if (at(Tok::CondLevelOpen)) {
      next();
      const Token& num = expect(Tok::Number, "a rational level");
      Level level;
      try {
        level = Level::parse(num.text);
      } catch (const std::exception& e) {
        fail_at(ParseError::Kind::Syntax, num.pos, e.what());
      }
      expect(Tok::RBracket, "']'");
      Formula b = formula();
      expect(Tok::RParen, "')'");
      return Formula::cond(a, b, level);
    }
    expect(Tok::RParen, "')'");
    return a;
  }

  Formula quantified() {
    const bool universal = next().text == "forall";
    const Token& v = expect(Tok::Ident, "a variable");
    if (is_keyword(v.text)) fail_at(ParseError::Kind::Syntax, v.pos, "keyword '" + v.text + "' used as a variable");
    if (vocab_.declares(v.text))
      fail_at(ParseError::Kind::Syntax, v.pos, "'" + v.text + "' is a declared symbol and cannot be bound");
    bound_.push_back(v.text);
    Formula body = formula();
    bound_.pop_back();
    return universal ? Formula::forall(v.text, body) : Formula::exists(v.text, body);
  }

  bool is_bound(const std::string& name) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (*it == name) return true;
    return false;
  }

  // Identifier in formula position: predicate atom, or the left side of an equation.
  Formula atomic() {
    const Token& id = peek();
    if (is_keyword(id.text)) fail(ParseError::Kind::Syntax, "unexpected keyword '" + id.text + "'");
    const bool applied = peek(1).kind == Tok::LParen;
    const bool term_like = is_bound(id.text) || vocab_.functions.count(id.text) || vocab_.constants.count(id.text) ||
                           (!applied && (peek(1).kind == Tok::Eq || peek(1).kind == Tok::Neq));
    if (term_like) return equation(term());
    next();
    std::vector<Term> args;
    if (applied) args = arguments();
    if (at(Tok::Eq) || at(Tok::Neq)) {
      // f(t..) = s : the identifier was a function after all.
      if (vocab_.predicates.count(id.text))
        fail_at(ParseError::Kind::Syntax, id.pos, "predicate '" + id.text + "' used as a term");
      return equation(make_apply(id, std::move(args)));
    }
    declare_predicate(id, static_cast<int>(args.size()));
    return Formula::atom(id.text, std::move(args));
  }

  Formula equation(Term lhs) {
    if (at(Tok::Eq)) {
      next();
      return Formula::equal(std::move(lhs), term());
    }
    if (at(Tok::Neq)) {
      next();
      return Formula::negation(Formula::equal(std::move(lhs), term()));
    }
    fail(ParseError::Kind::Syntax, "expected '=' or '!=' after a term");
  }

  std::vector<Term> arguments() {
    expect(Tok::LParen, "'('");
    std::vector<Term> args{term()};
    while (at(Tok::Comma)) {
      next();
      args.push_back(term());
    }
    expect(Tok::RParen, "')'");
    return args;
  }

  Term term() {
    const Token& id = expect(Tok::Ident, "a term");
    if (is_keyword(id.text)) fail_at(ParseError::Kind::Syntax, id.pos, "keyword '" + id.text + "' used as a term");
    if (at(Tok::LParen)) return make_apply(id, arguments());
    if (is_bound(id.text)) return Term::variable(id.text);
    if (vocab_.constants.count(id.text)) return Term::constant(id.text);
    if (vocab_.functions.count(id.text))
      fail_at(ParseError::Kind::ArityMismatch, id.pos, "function '" + id.text + "' used without arguments");
    if (vocab_.predicates.count(id.text))
      fail_at(ParseError::Kind::Syntax, id.pos, "predicate '" + id.text + "' used as a term");
    if (is_variable_name(id.text)) return Term::variable(id.text);
    if (policy_ == SymbolPolicy::Strict)
      fail_at(ParseError::Kind::UndeclaredSymbol, id.pos, "undeclared constant '" + id.text + "'");
    vocab_.declare_constant(id.text);
    return Term::constant(id.text);
  }

  Term make_apply(const Token& id, std::vector<Term> args) {
    const int arity = static_cast<int>(args.size());
    if (auto it = vocab_.functions.find(id.text); it != vocab_.functions.end()) {
      if (it->second != arity)
        fail_at(ParseError::Kind::ArityMismatch, id.pos,
                "function '" + id.text + "' expects " + std::to_string(it->second) + " arguments, got " +
                    std::to_string(arity));
    } else if (vocab_.declares(id.text)) {
      fail_at(ParseError::Kind::Syntax, id.pos, "'" + id.text + "' is not a function symbol");
    } else if (policy_ == SymbolPolicy::Strict) {
      fail_at(ParseError::Kind::UndeclaredSymbol, id.pos, "undeclared function '" + id.text + "'");
    } else {
      vocab_.declare_function(id.text, arity);
    }
    return Term::apply(id.text, std::move(args));
  }

  void declare_predicate(const Token& id, int arity) {
    if (auto it = vocab_.predicates.find(id.text); it != vocab_.predicates.end()) {
      if (it->second != arity)
        fail_at(ParseError::Kind::ArityMismatch, id.pos,
                "predicate '" + id.text + "' expects " + std::to_string(it->second) + " arguments, got " +
                    std::to_string(arity));
      return;
    }
    if (vocab_.declares(id.text)) fail_at(ParseError::Kind::Syntax, id.pos, "'" + id.text + "' is not a predicate");
    if (policy_ == SymbolPolicy::Strict)
      fail_at(ParseError::Kind::UndeclaredSymbol, id.pos, "undeclared predicate '" + id.text + "'");
    vocab_.declare_predicate(id.text, arity);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Vocabulary& vocab_;
  SymbolPolicy policy_;
  std::vector<std::string> bound_;
};

void print(const Formula& f, bool tail, std::string& out);

void print_binary(const Formula& f, std::string_view op, std::string& out) {
  out += '(';
  print(f.lhs(), false, out);
  out += ' ';
  out += op;
  out += ' ';
  print(f.rhs(), true, out);
  out += ')';
}

// `tail` is true when nothing can follow the printed text before a closing
// parenthesis or the end, so an unparenthesized quantifier body is safe.
void print(const Formula& f, bool tail, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: out += "true"; return;
    case K::False: out += "false"; return;
    case K::Atom:
      out += f.predicate();
      if (!f.args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ", ";
          out += print_term(f.args()[i]);
        }
        out += ')';
      }
      return;
    case K::Equal:
      out += print_term(f.args()[0]) + " = " + print_term(f.args()[1]);
      return;
    case K::Not:
      if (f.operand().kind() == K::Equal) {
        out += print_term(f.operand().args()[0]) + " != " + print_term(f.operand().args()[1]);
        return;
      }
      out += '~';
      print(f.operand(), tail, out);
      return;
    case K::And: print_binary(f, "&", out); return;
    case K::Or: print_binary(f, "|", out); return;
    case K::Implies: print_binary(f, "=>", out); return;
    case K::Iff: print_binary(f, "<=>", out); return;
    case K::Cond: print_binary(f, "~>", out); return;
    case K::CondLevel: print_binary(f, "~>[" + f.level().to_string() + "]", out); return;
    case K::Forall:
    case K::Exists:
      if (!tail) out += '(';
      out += f.kind() == K::Forall ? "forall " : "exists ";
      out += f.variable();
      out += ' ';
      print(f.body(), true, out);
      if (!tail) out += ')';
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text, const Vocabulary& vocab) {
  Vocabulary copy = vocab;
  return Parser(text, copy, SymbolPolicy::Strict).formula_to_end();
}

Formula parse_formula(std::string_view text, Vocabulary& vocab, SymbolPolicy policy) {
  return Parser(text, vocab, policy).formula_to_end();
}

Term parse_term(std::string_view text, Vocabulary& vocab, SymbolPolicy policy) {
  return Parser(text, vocab, policy).term_to_end();
}

std::string print_term(const Term& t) {
  if (t.kind() != Term::Kind::Apply) return t.name();
  std::string out = t.name() + "(";
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ", ";
    out += print_term(t.args()[i]);
  }
  return out + ")";
}

std::string print_formula(const Formula& f) {
  std::string out;
  print(f, true, out);
  return out;
}

}  // namespace condlog
