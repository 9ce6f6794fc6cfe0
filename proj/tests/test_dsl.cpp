#include <doctest.h>

#include <string>
#include <vector>

#include "memotab/grammar_dsl.hpp"
#include "memotab/grammars.hpp"
#include "oracles.hpp"

using namespace memotab;

TEST_SUITE("dsl") {

TEST_CASE("parses the ambiguous grammars") {
  RuleSet sm = parse_grammar("S = \"a\" S S | eps ;");
  REQUIRE(sm.rules.size() == 1);
  CHECK(sm.start() == "S");
  REQUIRE(sm.rules[0].expr.kind == Expr::Kind::Alt);
  REQUIRE(sm.rules[0].expr.children.size() == 2);
  CHECK(sm.rules[0].expr.children[0].kind == Expr::Kind::Seq);
  CHECK(sm.rules[0].expr.children[0].children.size() == 3);
  CHECK(sm.rules[0].expr.children[1].kind == Expr::Kind::Eps);

  RuleSet sml = parse_grammar("S = S S \"a\" | eps ;");
  REQUIRE(sml.rules.size() == 1);
  const Expr& first = sml.rules[0].expr.children[0];
  REQUIRE(first.kind == Expr::Kind::Seq);
  CHECK(first.children[0].kind == Expr::Kind::NonTerm);
  CHECK(first.children[0].text == "S");
  CHECK(first.children[2].kind == Expr::Kind::Terminal);
  CHECK(first.children[2].text == "a");
}

TEST_CASE("reports undefined nonterminals with their position") {
  try {
    parse_grammar("S = X ;");
    FAIL("expected DslError");
  } catch (const DslError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 5);
    CHECK(std::string(e.what()).find("undefined nonterminal 'X'") != std::string::npos);
  }
}

TEST_CASE("reports duplicate rules") {
  try {
    parse_grammar("S = \"a\" ;\nS = \"b\" ;");
    FAIL("expected DslError");
  } catch (const DslError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 1);
    CHECK(std::string(e.what()).find("duplicate rule 'S'") != std::string::npos);
  }
}

TEST_CASE("reports syntax problems with positions") {
  CHECK_THROWS_AS(parse_grammar("S = ;"), DslError);
  CHECK_THROWS_AS(parse_grammar("S = \"a\""), DslError);       // missing ;
  CHECK_THROWS_AS(parse_grammar("S = \"a ;"), DslError);       // unterminated literal
  CHECK_THROWS_AS(parse_grammar("S = () ;"), DslError);        // stray character
  CHECK_THROWS_AS(parse_grammar("eps = \"a\" ;"), DslError);   // reserved word
  CHECK_THROWS_AS(parse_grammar(""), DslError);                // no rules
  CHECK_THROWS_AS(parse_grammar("= \"a\" ;"), DslError);       // missing name
}

TEST_CASE("comments and escapes") {
  RuleSet rs = parse_grammar(
      "# a grammar of one strange token\n"
      "S = \"a\\\"b\\\\\" ; # trailing comment\n");
  REQUIRE(rs.rules.size() == 1);
  CHECK(rs.rules[0].expr.kind == Expr::Kind::Terminal);
  CHECK(rs.rules[0].expr.text == "a\"b\\");
  // the printer escapes it back
  RuleSet again = parse_grammar(render(rs));
  CHECK(again.rules[0].expr.text == "a\"b\\");
}

TEST_CASE("compiled sm accepts a^5") {
  Session sess;
  BuiltGrammar g = compile_text(sess, oracles::sm_text());
  CHECK(run_accepts(sess, g, sentence(5)));
}

TEST_CASE("compiled sml matches the hand-built charts on a^4") {
  Session s1, s2;
  BuiltGrammar dsl = compile_text(s1, oracles::sml_text());
  BuiltGrammar hand = build(s2, GrammarId::sml);
  CHECK(run_accepts(s1, dsl, sentence(4)) == run_accepts(s2, hand, sentence(4)));
  CHECK(oracles::canon_charts(dsl) == oracles::canon_charts(hand));
}

TEST_CASE("compiled johnson accepts the worked sentence") {
  Session sess;
  BuiltGrammar g = compile_text(sess, oracles::johnson_text());
  CHECK(run_accepts(sess, g, oracles::johnson_sentence()));
}

TEST_CASE("every nonterminal gets a chart") {
  Session sess;
  BuiltGrammar g = compile_text(sess, "s = t t ;\nt = \"a\" ;");
  CHECK(run_accepts(sess, g, sentence(2)));
  auto charts = oracles::canon_charts(g);
  REQUIRE(charts.size() == 2);
  CHECK(charts.at("t").at(0) == std::set<int>{1});
  CHECK(charts.at("t").at(1) == std::set<int>{2});
  CHECK(charts.at("s").at(0) == std::set<int>{2});
}

TEST_CASE("render round-trips observationally") {
  std::mt19937 rng(808);
  for (int i = 0; i < 50; ++i) {
    RuleSet rs = oracles::gen_ruleset(rng);
    RuleSet reparsed = parse_grammar(render(rs));
    TokenSeq input = oracles::gen_input(rng, 6);

    Session s1, s2;
    BuiltGrammar g1 = compile(s1, rs);
    BuiltGrammar g2 = compile(s2, reparsed);
    const bool a1 = run_accepts(s1, g1, input);
    const bool a2 = run_accepts(s2, g2, input);
    INFO("grammar:\n" << render(rs));
    CHECK(a1 == a2);
    CHECK(oracles::canon_charts(g1) == oracles::canon_charts(g2));
  }
}

TEST_CASE("dsl grammars match the hand-built ones") {
  const std::vector<std::pair<GrammarId, std::string>> cases = {
      {GrammarId::sm, oracles::sm_text()},
      {GrammarId::sml, oracles::sml_text()},
      {GrammarId::smml, oracles::smml_text()},
  };
  for (const auto& [id, text] : cases) {
    for (int n : {0, 3, 7}) {
      Session s1, s2;
      BuiltGrammar dsl = compile_text(s1, text);
      BuiltGrammar hand = build(s2, id);
      CHECK(run_accepts(s1, dsl, sentence(n)) == run_accepts(s2, hand, sentence(n)));
      INFO(to_string(id) << " on a^" << n);
      CHECK(oracles::canon_charts(dsl) == oracles::canon_charts(hand));
    }
  }
}

}  // TEST_SUITE
