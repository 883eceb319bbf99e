#pragma once

#include "hellyca/pqm_tree.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hca {

class InvalidClique : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Throws InvalidClique unless the vertices pairwise intersect in g.
void requireClique(const Graph& g, const std::vector<int>& clique);

struct NonHellyStructure {
    std::vector<int> order;     // v_0 .. v_{k-1}
    std::vector<Letter> word;   // the model it was found in
};

bool isCliqueHellyInModel(const ChordModel& m, const std::vector<int>& clique);

// Restriction of the word to the clique equals
// v0^0 v2^1 v1^0 v3^1 ... v_{k-2}^0 v0^1 v_{k-1}^0 v1^1; returns the order.
std::optional<std::vector<int>> structureOrder(const std::vector<Letter>& word, const std::vector<int>& clique);

// An inclusion-minimal non-Helly subclique with its circular order.
std::optional<NonHellyStructure> findMinimalNonHelly(const ChordModel& m, const std::vector<int>& clique);

// Some subclique forms the non-Helly structure in every model.
bool isRigidNonHelly(const PqmTree& t, const std::vector<int>& clique);

enum class HellyVerdict : unsigned char { AllHelly, NoneHelly };

struct HellyDecision {
    HellyVerdict verdict = HellyVerdict::AllHelly;
    std::optional<NonHellyStructure> witness;  // in the checked model, vertex ids of the tree
    bool cliqueCapHit = false;
    bool reduced = false;  // twins or universal chords were set aside first
};

// Maximal cliques of the intersection graph; stops after `cap` cliques.
// Returns false when stopped early.
bool forEachMaximalClique(const Graph& g, std::size_t cap, const std::function<bool(const std::vector<int>&)>& visit);

// One model decides for all of them. Twins and universal chords are set
// aside first (they never change Hellyness) and the rest is normalized.
HellyDecision decideHellyGraph(const PqmTree& t);
// Hellyness of one concrete model by scanning its maximal cliques.
HellyDecision decideHellyModel(const ChordModel& m);

enum class CrossingCase : unsigned char { SameDirection, DifferentDirection };

// For a ~ b in M-node `node` whose slot words show a^0 b^0 (same direction)
// or a^1 b^0 (different direction): chords c ~ d of the node with
//   same:      c^1 a^0 d^1 b^0 in one slot, a^1 c^0 b^1 d^0 in the other;
//   different: a^1 c^0 d^1 b^0 in one slot, c^1 a^0 b^1 d^0 in the other.
// Throws std::invalid_argument if the premise does not hold in the model.
std::optional<std::pair<int, int>> technicalCrossingWitness(const PqmTree& t, const std::vector<Letter>& word,
                                                            int node, int a, int b, CrossingCase kind);

}  // namespace hca
