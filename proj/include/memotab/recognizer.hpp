#pragma once

#include <string>
#include <utility>
#include <vector>

#include "memotab/memo.hpp"
#include "memotab/nondet.hpp"

namespace memotab {

using Token = std::string;
using TokenSeq = std::vector<Token>;

// Index of the next token to consume, 0 <= pos <= input size. Cheaper than
// carrying suffix lists around; charts are converted to suffix form only
// for display.
using Pos = int;

// The token sequence a family of recognizers reads. Allocated when a
// grammar is built and filled in once per parse session, before running;
// memo tables are keyed by positions into it, so it must not change
// afterwards.
class Input {
 public:
  void set(TokenSeq toks) { toks_ = std::move(toks); }
  Pos size() const { return static_cast<Pos>(toks_.size()); }
  const Token& at(Pos i) const { return toks_[static_cast<std::size_t>(i)]; }
  const TokenSeq& tokens() const { return toks_; }

 private:
  TokenSeq toks_;
};

// A recognizer maps a position to the computation of every position
// reachable by consuming a well-formed phrase from there. Recognizers only
// consume forward: every delivered position is >= the input position.
using Recognizer = std::function<Comp<Pos>(Pos)>;

// Matches a single token: at p delivers p+1 iff tokens[p] == tok.
inline Recognizer term(const Input* in, Token tok) {
  return [in, tok = std::move(tok)](Pos p) -> Comp<Pos> {
    if (p < in->size() && in->at(p) == tok) return pure(p + 1);
    return fail<Pos>();
  };
}

// Matches the empty phrase: delivers the position unchanged.
inline Recognizer epsilon() {
  return [](Pos p) { return pure(p); };
}

// f followed by g.
inline Recognizer seq(Recognizer f, Recognizer g) {
  return [f = std::move(f), g = std::move(g)](Pos p) { return then(f(p), g); };
}

// f or g; delivers the union of both branches.
inline Recognizer alt(Recognizer f, Recognizer g) {
  return [f = std::move(f), g = std::move(g)](Pos p) { return choice(f(p), g(p)); };
}

// Whole-input acceptance: true iff running r from position 0 reaches the
// end of the input.
inline bool accepts(Session& s, const Recognizer& r, const Input& in) {
  const Pos n = in.size();
  for (Pos p : s.run(r(0)))
    if (p == n) return true;
  return false;
}

}  // namespace memotab
