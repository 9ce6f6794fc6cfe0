#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "memotab/grammars.hpp"
#include "memotab/recognizer.hpp"
#include "oracles.hpp"

using namespace memotab;
using oracles::sorted;

namespace {

std::vector<Pos> run_at(const Recognizer& r, Pos p) {
  Session s;
  return s.run(r(p));
}

// Random recognizer with no nonterminals: terminals over {a, b}, eps, seq, alt.
Recognizer gen_recognizer(std::mt19937& rng, const Input* in, int depth) {
  const int kinds = depth <= 0 ? 2 : 4;
  switch (std::uniform_int_distribution<int>(0, kinds - 1)(rng)) {
    case 0:
      return term(in, std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? "a" : "b");
    case 1:
      return epsilon();
    case 2:
      return seq(gen_recognizer(rng, in, depth - 1), gen_recognizer(rng, in, depth - 1));
    default:
      return alt(gen_recognizer(rng, in, depth - 1), gen_recognizer(rng, in, depth - 1));
  }
}

}  // namespace

TEST_SUITE("recognizer") {

TEST_CASE("term matches one token at the current position") {
  Input in;
  in.set({"a", "b"});
  CHECK(run_at(term(&in, "a"), 0) == std::vector<Pos>{1});
  CHECK(run_at(term(&in, "a"), 1).empty());
  Input johnson;
  johnson.set({"Kim", "likes", "Sandy"});
  CHECK(run_at(term(&johnson, "likes"), 1) == std::vector<Pos>{2});
}

TEST_CASE("epsilon stays put") {
  Input in;
  in.set({"a", "b"});
  CHECK(run_at(epsilon(), 0) == std::vector<Pos>{0});
  CHECK(run_at(epsilon(), in.size()) == std::vector<Pos>{in.size()});
  // unit law: seq(epsilon, r) behaves as r
  Recognizer r = term(&in, "b");
  CHECK(run_at(seq(epsilon(), r), 1) == run_at(r, 1));
  CHECK(run_at(seq(epsilon(), r), 0) == run_at(r, 0));
}

TEST_CASE("seq chains recognizers") {
  Input ab;
  ab.set({"a", "b"});
  CHECK(run_at(seq(term(&ab, "a"), term(&ab, "b")), 0) == std::vector<Pos>{2});
  Input aa;
  aa.set({"a", "a"});
  CHECK(run_at(seq(term(&aa, "a"), term(&aa, "b")), 0).empty());
  // both branches of the leading alternation survive the sequence
  CHECK(sorted(run_at(seq(alt(epsilon(), term(&aa, "a")), term(&aa, "a")), 0)) ==
        std::vector<Pos>{1, 2});
}

TEST_CASE("alt unions branches") {
  Input a;
  a.set({"a"});
  CHECK(run_at(alt(term(&a, "a"), term(&a, "b")), 0) == std::vector<Pos>{1});
  // two deliveries when unmemoised; memoisation would collapse them
  CHECK(run_at(alt(epsilon(), epsilon()), 0) == std::vector<Pos>{0, 0});
  Input sent;
  sent.set(oracles::johnson_sentence());
  CHECK(run_at(alt(term(&sent, "likes"), term(&sent, "knows")), 3) == std::vector<Pos>{4});
}

TEST_CASE("accepts checks for a whole-input parse") {
  {
    Session sess;
    Input in;
    in.set({});
    CHECK_FALSE(accepts(sess, term(&in, "a"), in));
  }
  {
    Session sess;
    BuiltGrammar g = build(sess, GrammarId::sml);
    CHECK(run_accepts(sess, g, sentence(4)));
  }
  {
    Session sess;
    BuiltGrammar g = build(sess, GrammarId::johnson);
    CHECK(run_accepts(sess, g, oracles::johnson_sentence()));
  }
}

TEST_CASE("recognizers only consume forward") {
  std::mt19937 rng(31);
  for (int i = 0; i < 60; ++i) {
    Input in;
    in.set(oracles::gen_input(rng, 6));
    Recognizer r = gen_recognizer(rng, &in, 3);
    const Pos n = in.size();
    for (Pos p = 0; p <= n; ++p) {
      for (Pos q : run_at(r, p)) {
        CHECK(q >= p);
        CHECK(q <= n);
      }
    }
  }
}

TEST_CASE("sequencing distributes over alternation on result multisets") {
  std::mt19937 rng(32);
  for (int i = 0; i < 60; ++i) {
    Input in;
    in.set(oracles::gen_input(rng, 6));
    Recognizer a = gen_recognizer(rng, &in, 2);
    Recognizer b = gen_recognizer(rng, &in, 2);
    Recognizer c = gen_recognizer(rng, &in, 2);
    CHECK(sorted(run_at(seq(alt(a, b), c), 0)) ==
          sorted(run_at(alt(seq(a, c), seq(b, c)), 0)));
  }
}

}  // TEST_SUITE
