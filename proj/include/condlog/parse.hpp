#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "condlog/formula.hpp"

namespace condlog {

// Concrete syntax, loosest to tightest binding:
//
//   formula := impl ("<=>" impl)*          (left associative)
//   impl    := or ("=>" impl)?             (right associative)
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | "N" unary | quant | "(" formula ")"
//            | "(" formula "~>" formula ")" | "(" formula "~>[" r "]" formula ")" | atom
//   quant   := ("forall" | "exists") IDENT formula   (body extends as far as possible)
//   atom    := IDENT | IDENT "(" term ("," term)* ")" | term "=" term | term "!=" term
//            | "true" | "false"
//
// A conditional must be parenthesized. In term position an identifier is a
// constant when declared (or, when declaring, when it does not start with
// u..z); bound identifiers and undeclared u..z identifiers are variables.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UndeclaredSymbol, ArityMismatch };

  ParseError(Kind kind, std::size_t position, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

enum class SymbolPolicy {
  Strict,   // every symbol must already be declared
  Declare,  // undeclared symbols are added to the vocabulary on first use
};

Formula parse_formula(std::string_view text, const Vocabulary& vocab);
Formula parse_formula(std::string_view text, Vocabulary& vocab, SymbolPolicy policy);
Term parse_term(std::string_view text, Vocabulary& vocab, SymbolPolicy policy);

// Canonical rendering; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);
std::string print_term(const Term& t);

}  // namespace condlog
