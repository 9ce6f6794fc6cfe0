#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "memotab/memo.hpp"
#include "memotab/recognizer.hpp"

namespace memotab {

// ---------------------------------------------------------------------
// Demo computations: Fibonacci and transitive closure.

// Open-recursive Fibonacci body. Negative n delivers nothing.
Comp<std::int64_t> fib_body(const Fix<int, std::int64_t>& self, const int& n);

// Memoised Fibonacci bound to a session.
MemoHandle<int, std::int64_t> make_fib(Session& sess);

using Node = std::string;

// Finite directed relation over text nodes.
struct EdgeSet {
  std::vector<std::pair<Node, Node>> edges;

  // Nondeterministic choice over the direct successors of x.
  Comp<Node> successors(const Node& x) const;
};

// The two-edge relation a->b, b->c used by the demos.
EdgeSet demo_edges();

// Open-recursive transitive closure: successors of x, plus everything
// reachable from those.
Comp<Node> path_body(const EdgeSet& es, const Fix<Node, Node>& self, const Node& x);

MemoHandle<Node, Node> make_path(Session& sess, EdgeSet es);

// ---------------------------------------------------------------------
// Built-in grammars.

enum class GrammarId { johnson, sm, sml, smml };

std::optional<GrammarId> grammar_id_from(const std::string& name);
const char* to_string(GrammarId id);

using ChartReader = std::function<Chart<Pos, Pos>()>;

// A grammar instantiated against a session: its start recognizer, the
// session-owned input slot it reads, and one chart reader per memoised
// rule. Use a fresh session per input.
struct BuiltGrammar {
  Input* input = nullptr;
  Recognizer start;
  std::vector<std::pair<std::string, ChartReader>> charts;
};

// Constructs a built-in grammar in the given (fresh) session:
//   johnson  noun-phrase grammar with a left-recursive np rule
//   sm       S -> "a" S S | eps
//   sml      S -> S S "a" | eps        (left recursive)
//   smml     S -> S A | eps, A -> S "a" (mutually recursive, left recursive)
BuiltGrammar build(Session& sess, GrammarId id);

// n copies of the token "a".
TokenSeq sentence(int n);

// Sets the grammar's input and runs it to acceptance.
bool run_accepts(Session& sess, const BuiltGrammar& g, TokenSeq toks);

// Reads every chart of the grammar, in declaration order.
std::vector<std::pair<std::string, Chart<Pos, Pos>>> read_charts(const BuiltGrammar& g);

}  // namespace memotab
