#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "memotab/grammars.hpp"
#include "memotab/recognizer.hpp"

namespace memotab {

using NamedCharts = std::vector<std::pair<std::string, Chart<Pos, Pos>>>;

// The unconsumed suffix tokens[p..n): what a position looks like to a
// recognizer that carries remainder lists instead of indices.
TokenSeq remainder(const TokenSeq& toks, Pos p);

// Positions rewritten to suffix token lists, for display and for direct
// comparison with the remainder-list presentation of the same charts.
Chart<TokenSeq, TokenSeq> to_remainders(const Chart<Pos, Pos>& chart, const TokenSeq& toks);

// Self-describing document for one parse: acceptance verdict plus every
// chart, with keys and results rendered both as positions and as remainder
// token lists.
nlohmann::json chart_document(bool accepted, const TokenSeq& toks, const NamedCharts& charts);

}  // namespace memotab
