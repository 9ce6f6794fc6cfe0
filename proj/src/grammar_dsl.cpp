#include "memotab/grammar_dsl.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace memotab {

Expr Expr::seq_of(std::vector<Expr> es) {
  if (es.empty()) throw std::invalid_argument("Expr::seq_of: empty sequence");
  if (es.size() == 1) return std::move(es.front());
  return {Kind::Seq, {}, std::move(es)};
}

Expr Expr::alt_of(std::vector<Expr> es) {
  if (es.empty()) throw std::invalid_argument("Expr::alt_of: empty alternation");
  if (es.size() == 1) return std::move(es.front());
  return {Kind::Alt, {}, std::move(es)};
}

DslError::DslError(const std::string& msg, int line, int col)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                         ": " + msg),
      line_(line),
      col_(col) {}

namespace {

struct SrcTok {
  enum class Type { Ident, Str, Equals, Pipe, Semi, End };
  Type type = Type::End;
  std::string text;
  int line = 0;
  int col = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  SrcTok next() {
    skip_blank();
    SrcTok t;
    t.line = line_;
    t.col = col_;
    if (at_end()) {
      t.type = SrcTok::Type::End;
      return t;
    }
    char c = peek();
    if (c == '=') {
      advance();
      t.type = SrcTok::Type::Equals;
      return t;
    }
    if (c == '|') {
      advance();
      t.type = SrcTok::Type::Pipe;
      return t;
    }
    if (c == ';') {
      advance();
      t.type = SrcTok::Type::Semi;
      return t;
    }
    if (c == '"') return lex_string(t);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_ident(t);
    throw DslError(std::string("unexpected character '") + c + "'", line_, col_);
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek() const { return src_[i_]; }

  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_blank() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  SrcTok lex_string(SrcTok t) {
    advance();  // opening quote
    std::string out;
    while (true) {
      if (at_end()) throw DslError("unterminated terminal literal", t.line, t.col);
      char c = peek();
      advance();
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) throw DslError("dangling escape in terminal literal", t.line, t.col);
        out.push_back(peek());
        advance();
      } else {
        out.push_back(c);
      }
    }
    t.type = SrcTok::Type::Str;
    t.text = std::move(out);
    return t;
  }

  SrcTok lex_ident(SrcTok t) {
    std::string out;
    while (!at_end()) {
      char c = peek();
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') break;
      out.push_back(c);
      advance();
    }
    t.type = SrcTok::Type::Ident;
    t.text = std::move(out);
    return t;
  }

  const std::string& src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct NonTermRef {
  std::string name;
  int line;
  int col;
};

class GrammarParser {
 public:
  explicit GrammarParser(const std::string& src) : lex_(src) { shift(); }

  RuleSet parse() {
    RuleSet rs;
    if (tok_.type == SrcTok::Type::End)
      throw DslError("empty grammar: expected at least one rule", tok_.line, tok_.col);
    while (tok_.type != SrcTok::Type::End) rs.rules.push_back(parse_rule());
    check_names(rs);
    return rs;
  }

 private:
  void shift() { tok_ = lex_.next(); }

  [[noreturn]] void fail(const std::string& msg) { throw DslError(msg, tok_.line, tok_.col); }

  Rule parse_rule() {
    if (tok_.type != SrcTok::Type::Ident) fail("expected rule name");
    if (tok_.text == "eps") fail("'eps' is a reserved word and cannot name a rule");
    Rule r;
    r.name = tok_.text;
    name_pos_.push_back({r.name, tok_.line, tok_.col});
    shift();
    if (tok_.type != SrcTok::Type::Equals) fail("expected '=' after rule name");
    shift();
    r.expr = parse_alt();
    if (tok_.type != SrcTok::Type::Semi) fail("expected ';' at end of rule");
    shift();
    return r;
  }

  Expr parse_alt() {
    std::vector<Expr> branches;
    branches.push_back(parse_seq());
    while (tok_.type == SrcTok::Type::Pipe) {
      shift();
      branches.push_back(parse_seq());
    }
    return Expr::alt_of(std::move(branches));
  }

  Expr parse_seq() {
    std::vector<Expr> factors;
    factors.push_back(parse_factor());
    while (tok_.type == SrcTok::Type::Str ||
           (tok_.type == SrcTok::Type::Ident)) {
      factors.push_back(parse_factor());
    }
    return Expr::seq_of(std::move(factors));
  }

  Expr parse_factor() {
    if (tok_.type == SrcTok::Type::Str) {
      Expr e = Expr::terminal(tok_.text);
      shift();
      return e;
    }
    if (tok_.type == SrcTok::Type::Ident) {
      if (tok_.text == "eps") {
        shift();
        return Expr::eps();
      }
      refs_.push_back({tok_.text, tok_.line, tok_.col});
      Expr e = Expr::nonterm(tok_.text);
      shift();
      return e;
    }
    fail("expected a terminal, a nonterminal, or eps");
  }

  void check_names(const RuleSet& rs) const {
    std::unordered_set<std::string> defined;
    for (const auto& np : name_pos_) {
      if (!defined.insert(np.name).second)
        throw DslError("duplicate rule '" + np.name + "'", np.line, np.col);
    }
    (void)rs;
    for (const auto& ref : refs_) {
      if (!defined.count(ref.name))
        throw DslError("undefined nonterminal '" + ref.name + "'", ref.line, ref.col);
    }
  }

  Lexer lex_;
  SrcTok tok_;
  std::vector<NonTermRef> name_pos_;
  std::vector<NonTermRef> refs_;
};

// ---------------------------------------------------------------------
// Rendering.

std::string quote_terminal(const std::string& tok) {
  std::string out = "\"";
  for (char c : tok) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

using AtomSeq = std::vector<const Expr*>;

// Alternatives-of-sequences normal form. The format has no grouping
// syntax, so alternation nested under a sequence is distributed out; the
// result defines the same language.
std::vector<AtomSeq> to_alternatives(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Eps:
      return {{}};
    case Expr::Kind::Terminal:
    case Expr::Kind::NonTerm:
      return {{&e}};
    case Expr::Kind::Alt: {
      std::vector<AtomSeq> out;
      for (const Expr& c : e.children) {
        auto sub = to_alternatives(c);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      return out;
    }
    case Expr::Kind::Seq: {
      std::vector<AtomSeq> out = {{}};
      for (const Expr& c : e.children) {
        auto sub = to_alternatives(c);
        std::vector<AtomSeq> next;
        next.reserve(out.size() * sub.size());
        for (const AtomSeq& left : out)
          for (const AtomSeq& right : sub) {
            AtomSeq joined = left;
            joined.insert(joined.end(), right.begin(), right.end());
            next.push_back(std::move(joined));
          }
        out = std::move(next);
      }
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------
// Compilation.

using RuleBundle = std::unordered_map<std::string, Recognizer>;

Recognizer compile_expr(const Expr& e, const RuleBundle& rules, const Input* in) {
  switch (e.kind) {
    case Expr::Kind::Terminal:
      return term(in, e.text);
    case Expr::Kind::Eps:
      return epsilon();
    case Expr::Kind::NonTerm:
      return rules.at(e.text);
    case Expr::Kind::Seq: {
      Recognizer acc = compile_expr(e.children.front(), rules, in);
      for (std::size_t i = 1; i < e.children.size(); ++i)
        acc = seq(std::move(acc), compile_expr(e.children[i], rules, in));
      return acc;
    }
    case Expr::Kind::Alt: {
      Recognizer acc = compile_expr(e.children.front(), rules, in);
      for (std::size_t i = 1; i < e.children.size(); ++i)
        acc = alt(std::move(acc), compile_expr(e.children[i], rules, in));
      return acc;
    }
  }
  throw std::logic_error("compile_expr: bad expression kind");
}

void check_expr(const Expr& e, const std::unordered_set<std::string>& defined) {
  switch (e.kind) {
    case Expr::Kind::Terminal:
    case Expr::Kind::Eps:
      return;
    case Expr::Kind::NonTerm:
      if (!defined.count(e.text))
        throw DslError("undefined nonterminal '" + e.text + "'", 0, 0);
      return;
    case Expr::Kind::Seq:
    case Expr::Kind::Alt:
      if (e.children.empty()) throw DslError("empty sequence or alternation node", 0, 0);
      for (const Expr& c : e.children) check_expr(c, defined);
      return;
  }
}

void validate(const RuleSet& rs) {
  if (rs.rules.empty()) throw DslError("rule set has no rules", 0, 0);
  std::unordered_set<std::string> defined;
  for (const Rule& r : rs.rules) {
    if (r.name.empty() || r.name == "eps")
      throw DslError("bad rule name '" + r.name + "'", 0, 0);
    if (!defined.insert(r.name).second)
      throw DslError("duplicate rule '" + r.name + "'", 0, 0);
  }
  for (const Rule& r : rs.rules) check_expr(r.expr, defined);
}

}  // namespace

RuleSet parse_grammar(const std::string& text) {
  return GrammarParser(text).parse();
}

std::string render(const RuleSet& rs) {
  std::ostringstream out;
  for (const Rule& r : rs.rules) {
    out << r.name << " =";
    bool first_branch = true;
    for (const AtomSeq& branch : to_alternatives(r.expr)) {
      out << (first_branch ? " " : " | ");
      first_branch = false;
      if (branch.empty()) {
        out << "eps";
        continue;
      }
      bool first_atom = true;
      for (const Expr* atom : branch) {
        if (!first_atom) out << ' ';
        first_atom = false;
        out << (atom->kind == Expr::Kind::Terminal ? quote_terminal(atom->text) : atom->text);
      }
    }
    out << " ;\n";
  }
  return out.str();
}

BuiltGrammar compile(Session& sess, const RuleSet& rs) {
  validate(rs);
  auto* in = sess.own(Input{});
  auto* bundle = sess.own(RuleBundle{});
  BuiltGrammar g;
  g.input = in;
  for (const Rule& r : rs.rules) {
    auto h = memoize<RuleBundle*, Pos, Pos>(
        sess, [expr = r.expr, in](RuleBundle* const& rules, const Pos& p) {
          return compile_expr(expr, *rules, in)(p);
        });
    (*bundle)[r.name] = [fn = h.fn, bundle](Pos p) { return fn(bundle, p); };
    g.charts.emplace_back(r.name, [h]() { return h.chart(); });
  }
  g.start = bundle->at(rs.start());
  return g;
}

BuiltGrammar compile_text(Session& sess, const std::string& text) {
  return compile(sess, parse_grammar(text));
}

}  // namespace memotab
