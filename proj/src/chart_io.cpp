#include "memotab/chart_io.hpp"

namespace memotab {

TokenSeq remainder(const TokenSeq& toks, Pos p) {
  if (p < 0) p = 0;
  if (p > static_cast<Pos>(toks.size())) p = static_cast<Pos>(toks.size());
  return TokenSeq(toks.begin() + p, toks.end());
}

Chart<TokenSeq, TokenSeq> to_remainders(const Chart<Pos, Pos>& chart, const TokenSeq& toks) {
  Chart<TokenSeq, TokenSeq> out;
  out.reserve(chart.size());
  for (const auto& [key, results] : chart) {
    std::vector<TokenSeq> rs;
    rs.reserve(results.size());
    for (Pos r : results) rs.push_back(remainder(toks, r));
    out.emplace_back(remainder(toks, key), std::move(rs));
  }
  return out;
}

nlohmann::json chart_document(bool accepted, const TokenSeq& toks, const NamedCharts& charts) {
  nlohmann::json doc;
  doc["accepted"] = accepted;
  doc["tokens"] = toks;
  nlohmann::json table = nlohmann::json::object();
  for (const auto& [name, chart] : charts) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, results] : chart) {
      nlohmann::json entry;
      entry["key"] = key;
      entry["key_remainder"] = remainder(toks, key);
      entry["results"] = results;
      nlohmann::json rems = nlohmann::json::array();
      for (Pos r : results) rems.push_back(remainder(toks, r));
      entry["result_remainders"] = std::move(rems);
      entries.push_back(std::move(entry));
    }
    table[name] = std::move(entries);
  }
  doc["charts"] = std::move(table);
  return doc;
}

}  // namespace memotab
