#include "memotab/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace memotab {

namespace {

// Keeps the chart traversal observable so the optimizer cannot drop it.
void consume(std::uint64_t value) {
  asm volatile("" : : "r"(value) : "memory");
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  if (n % 2 == 1) return xs[n / 2];
  return 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

}  // namespace

BenchSource BenchSource::resolve(const std::string& source) {
  BenchSource src;
  src.name = source;
  if (auto id = grammar_id_from(source)) {
    src.builtin = *id;
    return src;
  }
  std::ifstream file(source);
  if (!file) throw std::runtime_error("cannot read grammar file '" + source + "'");
  std::ostringstream text;
  text << file.rdbuf();
  src.rules = parse_grammar(text.str());
  return src;
}

BuiltGrammar instantiate(Session& sess, const BenchSource& src) {
  if (src.builtin) return build(sess, *src.builtin);
  return compile(sess, src.rules);
}

std::vector<BenchRecord> run_bench(const std::vector<BenchSource>& sources,
                                   const std::vector<int>& lengths, int reps) {
  if (reps < 1) throw std::invalid_argument("run_bench: reps must be >= 1");
  for (int n : lengths)
    if (n < 0) throw std::invalid_argument("run_bench: lengths must be >= 0");

  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> out;
  for (const BenchSource& src : sources) {
    for (int n : lengths) {
      std::vector<double> times;
      bool accepted = false;
      for (int rep = 0; rep < reps; ++rep) {
        Session sess;
        BuiltGrammar g = instantiate(sess, src);
        g.input->set(sentence(n));
        const auto t0 = clock::now();
        accepted = accepts(sess, g.start, *g.input);
        std::uint64_t traversed = 0;
        for (const auto& [name, chart] : read_charts(g)) {
          (void)name;
          for (const auto& [key, results] : chart)
            traversed += static_cast<std::uint64_t>(key) + results.size();
        }
        const auto t1 = clock::now();
        consume(traversed);
        times.push_back(std::chrono::duration<double>(t1 - t0).count());
      }
      out.push_back(BenchRecord{src.name, n, median(std::move(times)), accepted});
    }
  }
  return out;
}

std::optional<double> loglog_slope(const std::vector<std::pair<int, double>>& cells) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& [n, seconds] : cells) {
    if (n <= 0 || seconds <= 0.0) continue;
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) return std::nullopt;
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return (m * sxy - sx * sy) / denom;
}

std::vector<std::pair<std::string, double>> bench_slopes(const std::vector<BenchRecord>& records) {
  std::vector<std::string> order;
  for (const auto& r : records)
    if (std::find(order.begin(), order.end(), r.grammar) == order.end())
      order.push_back(r.grammar);
  std::vector<std::pair<std::string, double>> out;
  for (const auto& name : order) {
    std::vector<std::pair<int, double>> cells;
    for (const auto& r : records)
      if (r.grammar == name) cells.emplace_back(r.n, r.seconds);
    if (cells.size() >= 3)
      if (auto slope = loglog_slope(cells)) out.emplace_back(name, *slope);
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "grammar,n,seconds,accepted\n";
  for (const auto& r : records)
    out << r.grammar << ',' << r.n << ',' << std::fixed << std::setprecision(6) << r.seconds
        << ',' << (r.accepted ? "true" : "false") << '\n';
  out.flush();
}

void write_table(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << std::left << std::setw(16) << "grammar" << std::right << std::setw(6) << "n"
      << std::setw(12) << "seconds" << std::setw(10) << "accepted" << '\n';
  for (const auto& r : records)
    out << std::left << std::setw(16) << r.grammar << std::right << std::setw(6) << r.n
        << std::setw(12) << std::fixed << std::setprecision(6) << r.seconds << std::setw(10)
        << (r.accepted ? "true" : "false") << '\n';
  out.flush();
}

}  // namespace memotab
