#pragma once

// Brute-force ground truth. Only circular words and pair relations are used
// here; nothing from the tree code.

#include "hellyca/graph.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace hca {

class OracleCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using WordSet = std::set<std::vector<Letter>>;

// Every arrangement of the 2n endpoints (first letter fixed) realizing the
// relation table, as canonical letter words. Throws past `cap` models.
WordSet enumerateByFilter(const RelationTable& rel, std::uint64_t cap = 1'000'000);
// Same search without threads; kept as the reference for the parallel one.
WordSet enumerateByFilterSerial(const RelationTable& rel, std::uint64_t cap = 1'000'000);
// Models of a reduced graph (relations forced by neighbourhoods).
WordSet enumerateByFilter(const Graph& g, std::uint64_t cap = 1'000'000);

// Some gap of the word lies on the arc of every member.
bool hellyInWord(int n, const std::vector<Letter>& word, const std::vector<int>& clique);

CliqueType oracleCliqueType(int n, const WordSet& models, const std::vector<int>& clique);
// A model realizing all cliques at once, if any.
std::optional<std::vector<Letter>> oracleHellyCliques(int n, const WordSet& models,
                                                      const std::vector<std::vector<int>>& cliques);

}  // namespace hca
