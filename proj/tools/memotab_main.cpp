#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "memotab/bench.hpp"
#include "memotab/chart_io.hpp"
#include "memotab/grammar_dsl.hpp"
#include "memotab/grammars.hpp"

namespace mt = memotab;

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitError = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

mt::TokenSeq tokens_from_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot read input file '" + path + "'");
  mt::TokenSeq toks;
  std::string tok;
  while (file >> tok) toks.push_back(tok);
  return toks;
}

struct ParseRequest {
  std::string grammar;
  std::vector<std::string> tokens;
  std::string input_file;

  mt::TokenSeq resolve_tokens() const {
    if (!input_file.empty()) return tokens_from_file(input_file);
    return tokens;
  }
};

void add_parse_options(CLI::App* cmd, ParseRequest& req) {
  cmd->add_option("--grammar", req.grammar, "built-in grammar (johnson|sm|sml|smml) or DSL file")
      ->required();
  auto* pos = cmd->add_option("tokens", req.tokens, "input tokens");
  cmd->add_option("--input", req.input_file, "read whitespace-separated tokens from FILE")
      ->excludes(pos);
}

int cmd_recognize(const ParseRequest& req) {
  auto src = mt::BenchSource::resolve(req.grammar);
  mt::Session sess;
  mt::BuiltGrammar g = mt::instantiate(sess, src);
  g.input->set(req.resolve_tokens());
  const bool ok = mt::accepts(sess, g.start, *g.input);
  std::cout << (ok ? "accepted" : "rejected") << '\n';
  return ok ? kExitAccepted : kExitRejected;
}

int cmd_chart(const ParseRequest& req) {
  auto src = mt::BenchSource::resolve(req.grammar);
  mt::Session sess;
  mt::BuiltGrammar g = mt::instantiate(sess, src);
  g.input->set(req.resolve_tokens());
  const bool ok = mt::accepts(sess, g.start, *g.input);
  const auto doc = mt::chart_document(ok, g.input->tokens(), mt::read_charts(g));
  std::cout << doc.dump(2) << '\n';
  return ok ? kExitAccepted : kExitRejected;
}

struct BenchRequest {
  std::string grammars = "sm,sml,smml";
  std::string lengths = "12,24,48,96";
  int reps = 3;
  std::string format = "csv";
};

int cmd_bench(const BenchRequest& req) {
  std::vector<mt::BenchSource> sources;
  for (const auto& item : split(req.grammars, ','))
    sources.push_back(mt::BenchSource::resolve(item));
  std::vector<int> lengths;
  for (const auto& item : split(req.lengths, ',')) lengths.push_back(std::stoi(item));
  if (sources.empty() || lengths.empty())
    throw std::runtime_error("bench needs at least one grammar and one length");

  const auto records = mt::run_bench(sources, lengths, req.reps);
  const auto slopes = mt::bench_slopes(records);
  if (req.format == "table") {
    mt::write_table(std::cout, records);
    for (const auto& [name, slope] : slopes)
      std::cout << "log-log slope " << name << " " << slope << '\n';
  } else {
    mt::write_csv(std::cout, records);
    // keep stdout pure CSV; slopes go to stderr
    for (const auto& [name, slope] : slopes)
      std::cerr << "# log-log slope " << name << " " << slope << '\n';
  }
  return kExitAccepted;
}

struct DemoRequest {
  std::string name;
  std::string argument;
};

int cmd_demo(const DemoRequest& req) {
  mt::Session sess;
  std::vector<std::string> results;
  if (req.name == "fib") {
    std::size_t used = 0;
    long long n = 0;
    try {
      n = std::stoll(req.argument, &used);
    } catch (const std::exception&) {
      throw std::runtime_error("demo fib: argument must be a non-negative integer");
    }
    if (used != req.argument.size() || n < 0)
      throw std::runtime_error("demo fib: argument must be a non-negative integer");
    auto fib = mt::make_fib(sess);
    for (auto v : sess.run(fib(static_cast<int>(n)))) results.push_back(std::to_string(v));
  } else if (req.name == "path") {
    auto path = mt::make_path(sess, mt::demo_edges());
    for (auto& v : sess.run(path(req.argument))) results.push_back(v);
  } else {
    throw std::runtime_error("demo: unknown demo '" + req.name + "' (expected fib or path)");
  }
  for (std::size_t i = 0; i < results.size(); ++i)
    std::cout << (i ? " " : "") << results[i];
  std::cout << '\n';
  return kExitAccepted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"memotab: tabled nondeterministic recognition over left-recursive grammars"};
  app.require_subcommand(1);

  ParseRequest rec_req;
  auto* rec = app.add_subcommand("recognize", "report whether the grammar accepts the input");
  add_parse_options(rec, rec_req);

  ParseRequest chart_req;
  auto* chart = app.add_subcommand("chart", "dump the memo-table charts of a parse as JSON");
  add_parse_options(chart, chart_req);

  BenchRequest bench_req;
  auto* bench = app.add_subcommand("bench", "time the ambiguous-grammar benchmark, CSV output");
  bench->add_option("--grammars", bench_req.grammars, "comma-separated ids or DSL files");
  bench->add_option("--lengths", bench_req.lengths, "comma-separated input lengths");
  bench->add_option("--reps", bench_req.reps, "repetitions per cell; median is reported")
      ->check(CLI::PositiveNumber);
  bench->add_option("--format", bench_req.format, "csv or table")
      ->check(CLI::IsMember({"csv", "table"}));

  DemoRequest demo_req;
  auto* demo = app.add_subcommand("demo", "run a built-in demo (fib N | path NODE)");
  demo->add_option("name", demo_req.name, "fib or path")->required();
  demo->add_option("argument", demo_req.argument, "demo argument")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*rec) return cmd_recognize(rec_req);
    if (*chart) return cmd_chart(chart_req);
    if (*bench) return cmd_bench(bench_req);
    if (*demo) return cmd_demo(demo_req);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
