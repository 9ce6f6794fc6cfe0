#include "memotab/grammars.hpp"

namespace memotab {

Comp<std::int64_t> fib_body(const Fix<int, std::int64_t>& self, const int& n) {
  if (n < 0) return fail<std::int64_t>();
  if (n == 0 || n == 1) return pure(static_cast<std::int64_t>(n));
  return then(self(n - 1), [self, n](const std::int64_t& a) {
    return then(self(n - 2), [a](const std::int64_t& b) { return pure(a + b); });
  });
}

MemoHandle<int, std::int64_t> make_fib(Session& sess) {
  return memo_rec<int, std::int64_t>(sess, fib_body);
}

Comp<Node> EdgeSet::successors(const Node& x) const {
  std::vector<Comp<Node>> out;
  for (const auto& [src, dst] : edges)
    if (src == x) out.push_back(pure(dst));
  return sum(std::move(out));
}

EdgeSet demo_edges() {
  return EdgeSet{{{"a", "b"}, {"b", "c"}}};
}

Comp<Node> path_body(const EdgeSet& es, const Fix<Node, Node>& self, const Node& x) {
  return choice(es.successors(x),
                then(self(x), [self](const Node& y) { return self(y); }));
}

MemoHandle<Node, Node> make_path(Session& sess, EdgeSet es) {
  return memo_rec<Node, Node>(
      sess, [es = std::move(es)](const Fix<Node, Node>& self, const Node& x) {
        return path_body(es, self, x);
      });
}

std::optional<GrammarId> grammar_id_from(const std::string& name) {
  if (name == "johnson") return GrammarId::johnson;
  if (name == "sm") return GrammarId::sm;
  if (name == "sml") return GrammarId::sml;
  if (name == "smml") return GrammarId::smml;
  return std::nullopt;
}

const char* to_string(GrammarId id) {
  switch (id) {
    case GrammarId::johnson: return "johnson";
    case GrammarId::sm: return "sm";
    case GrammarId::sml: return "sml";
    case GrammarId::smml: return "smml";
  }
  return "?";
}

namespace {

using FixP = Fix<Pos, Pos>;
using FixPP = Fix2<Pos, Pos, Pos, Pos>;

BuiltGrammar build_johnson(Session& sess, Input* in) {
  Recognizer v = alt(term(in, "likes"), term(in, "knows"));
  Recognizer pn = alt(term(in, "Kim"), term(in, "Sandy"));
  Recognizer det = alt(term(in, "every"), term(in, "no"));
  Recognizer n = alt(term(in, "student"), term(in, "professor"));

  // np -> pn | det n | np "'s" n   (left recursive; memoised on its own)
  auto np = memo_rec<Pos, Pos>(sess, [=](const FixP& self, const Pos& p) {
    Recognizer npr = self;
    return alt(alt(pn, seq(det, n)), seq(seq(npr, term(in, "'s")), n))(p);
  });
  Recognizer npr = np.fn();

  // vp -> v np | v s ; s -> np vp   (memoised as a mutually recursive pair,
  // both parameterised over the memoised np)
  auto [vp, s] = memo_rec2<Pos, Pos, Pos, Pos>(
      sess,
      [=](const FixPP& fps, const Pos& p) {
        Recognizer sr = fps.second;
        return alt(seq(v, npr), seq(v, sr))(p);
      },
      [=](const FixPP& fps, const Pos& p) {
        Recognizer vpr = fps.first;
        return seq(npr, vpr)(p);
      });

  BuiltGrammar g;
  g.input = in;
  g.start = s.fn();
  g.charts = {{"s", [s = s]() { return s.chart(); }},
              {"np", [np]() { return np.chart(); }},
              {"vp", [vp = vp]() { return vp.chart(); }}};
  return g;
}

BuiltGrammar build_sm(Session& sess, Input* in) {
  // sm -> "a" sm sm | eps
  auto h = memo_rec<Pos, Pos>(sess, [in](const FixP& self, const Pos& p) {
    Recognizer s = self;
    return alt(seq(seq(term(in, "a"), s), s), epsilon())(p);
  });
  return BuiltGrammar{in, h.fn(), {{"sm", [h]() { return h.chart(); }}}};
}

BuiltGrammar build_sml(Session& sess, Input* in) {
  // sml -> sml sml "a" | eps
  auto h = memo_rec<Pos, Pos>(sess, [in](const FixP& self, const Pos& p) {
    Recognizer s = self;
    return alt(seq(seq(s, s), term(in, "a")), epsilon())(p);
  });
  return BuiltGrammar{in, h.fn(), {{"sml", [h]() { return h.chart(); }}}};
}

BuiltGrammar build_smml(Session& sess, Input* in) {
  // smml -> smml aux | eps ; aux -> smml "a"
  auto [smml, aux] = memo_rec2<Pos, Pos, Pos, Pos>(
      sess,
      [](const FixPP& fps, const Pos& p) {
        Recognizer smmlr = fps.first;
        Recognizer auxr = fps.second;
        return alt(seq(smmlr, auxr), epsilon())(p);
      },
      [in](const FixPP& fps, const Pos& p) {
        Recognizer smmlr = fps.first;
        return seq(smmlr, term(in, "a"))(p);
      });
  BuiltGrammar g;
  g.input = in;
  g.start = smml.fn();
  g.charts = {{"smml", [smml = smml]() { return smml.chart(); }},
              {"aux", [aux = aux]() { return aux.chart(); }}};
  return g;
}

}  // namespace

BuiltGrammar build(Session& sess, GrammarId id) {
  auto* in = sess.own(Input{});
  switch (id) {
    case GrammarId::johnson: return build_johnson(sess, in);
    case GrammarId::sm: return build_sm(sess, in);
    case GrammarId::sml: return build_sml(sess, in);
    case GrammarId::smml: return build_smml(sess, in);
  }
  throw std::logic_error("build: unknown grammar id");
}

TokenSeq sentence(int n) {
  return TokenSeq(static_cast<std::size_t>(n < 0 ? 0 : n), "a");
}

bool run_accepts(Session& sess, const BuiltGrammar& g, TokenSeq toks) {
  g.input->set(std::move(toks));
  return accepts(sess, g.start, *g.input);
}

std::vector<std::pair<std::string, Chart<Pos, Pos>>> read_charts(const BuiltGrammar& g) {
  std::vector<std::pair<std::string, Chart<Pos, Pos>>> out;
  out.reserve(g.charts.size());
  for (const auto& [name, reader] : g.charts) out.emplace_back(name, reader());
  return out;
}

}  // namespace memotab
