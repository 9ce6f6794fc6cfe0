#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "memotab/grammars.hpp"
#include "memotab/recognizer.hpp"

namespace memotab {

// Rule body tree. Seq and Alt children are non-empty; the empty phrase is
// the explicit Eps node.
struct Expr {
  enum class Kind { Terminal, NonTerm, Seq, Alt, Eps };

  Kind kind = Kind::Eps;
  std::string text;            // Terminal token or NonTerm name
  std::vector<Expr> children;  // Seq / Alt operands

  static Expr terminal(std::string tok) { return {Kind::Terminal, std::move(tok), {}}; }
  static Expr nonterm(std::string name) { return {Kind::NonTerm, std::move(name), {}}; }
  static Expr eps() { return {Kind::Eps, {}, {}}; }
  static Expr seq_of(std::vector<Expr> es);
  static Expr alt_of(std::vector<Expr> es);
};

struct Rule {
  std::string name;
  Expr expr;
};

// Ordered rule list; the first rule's name is the start symbol. Every
// referenced nonterminal is defined exactly once.
struct RuleSet {
  std::vector<Rule> rules;

  const std::string& start() const { return rules.front().name; }
};

// Grammar-text problem, carrying the 1-based source position it was
// detected at.
class DslError : public std::runtime_error {
 public:
  DslError(const std::string& msg, int line, int col);

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Parses grammar text in the format
//
//   # comment to end of line
//   name = expr ;
//
// where expr is alternatives (|) of juxtaposed factors, a factor is a
// double-quoted backslash-escaped terminal, a nonterminal name, or the
// keyword eps. Throws DslError on syntax errors, duplicate rules, and
// references to undefined nonterminals.
RuleSet parse_grammar(const std::string& text);

// Inverse printer: parse_grammar(render(rs)) defines the same language.
// Nested alternation inside a sequence is flattened into alternatives of
// sequences before printing, since the format has no grouping syntax.
std::string render(const RuleSet& rs);

// Compiles a rule set against a fresh session. Every nonterminal gets its
// own memo table, and all recursion (mutual and left) is closed through a
// bundle mapping names to memoised recognizers.
BuiltGrammar compile(Session& sess, const RuleSet& rs);

// parse_grammar + compile.
BuiltGrammar compile_text(Session& sess, const std::string& text);

}  // namespace memotab
