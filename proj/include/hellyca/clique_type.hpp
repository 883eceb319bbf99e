#pragma once

#include "hellyca/pqm_tree.hpp"

#include <array>
#include <vector>

namespace hca {

// Where the pipeline settled the clique.
enum class CliqueStage : unsigned char {
    Small,               // at most two chords after cleaning
    SeveralComponents,   // meets two overlap components
    Rigid,               // holds a rigid non-Helly subclique
    Public,              // no owner
    IncomparableOwners,  // owners not on one root path
    CoverPairOutside,    // two chords outside an owner cover the circle
    Private,             // decided by the slot constraints
};
const char* cliqueStageName(CliqueStage s);

// Children K of an owner (or CA-modules of Q) meeting C but not owning it,
// split by the orientation of C's chords inside K.
struct NodeSets {
    int node = -1;  // M-node id, or -1 for the Q-node
    std::vector<int> inner, left, right;
};

// What a clique needs so that its point sits in slot S^j.
struct SlotRequirement {
    bool fixedOk = true;                     // orders no choice can change
    std::vector<std::pair<int, int>> flips;  // prime M-node, required flipM
    std::vector<std::array<int, 3>> edges;   // serial M-node, child before, child after
    std::array<bool, 2> qOrdering{true, true};  // prime-like Q: flip values that work
};

struct AffectingNode {
    int node = -1;  // M-node id, or -1 for the Q-node
    bool bindsS0 = false;
    bool bindsS1 = false;
    bool nonHelly = false;
};

struct CliqueAnalysis {
    std::vector<int> clique;   // sorted input
    std::vector<int> cleaned;
    CliqueType type = CliqueType::AlwaysHelly;
    CliqueStage stage = CliqueStage::Small;
    int component = -1;        // Q-node index
    int module = -1;           // CA-module of the lowest owner
    std::vector<int> owners;   // from the module root down to the deepest owner
    std::vector<int> outside;  // chords of the cleaned clique outside the module
    std::vector<NodeSets> sets;
    std::array<SlotRequirement, 2> slots;
    std::vector<AffectingNode> affecting;
    // achievable[2 * a + b]: some model violates slot 0 iff a and slot 1 iff b
    std::array<bool, 4> achievable{};
};

// In slot side j, the letter of every chord of `first` precedes the letter
// of every chord of `second`; all chords in one CA-module.
SlotRequirement slotPrecedence(const PqmTree& t, const std::vector<int>& first, const std::vector<int>& second, int j);
// Chords whose arc starts in slot side j, and those ending there.
std::pair<std::vector<int>, std::vector<int>> startsAndEnds(const PqmTree& t, const std::vector<int>& vertices, int j);

// Drops every chord containing another chord of the clique.
std::vector<int> cleanClique(const PqmTree& t, const std::vector<int>& clique);

// Throws InvalidClique when the chords do not pairwise intersect.
CliqueAnalysis analyzeClique(const PqmTree& t, const std::vector<int>& clique);
CliqueType classify(const PqmTree& t, const std::vector<int>& clique);

const std::vector<AffectingNode>& affectingNodes(const CliqueAnalysis& a);

// Is S^j, as fixed by `choice`, a slot where the clique point fits?
// Needs a clique settled at the Private stage.
bool bindsInSlot(const PqmTree& t, const CliqueAnalysis& a, int j, const ModelChoice& choice);
bool bindsInSlot(const PqmTree& t, const std::vector<int>& clique, int j, const ModelChoice& choice);

// Does slot s lie strictly inside the arc of v under the circular slot order?
bool slotOnArc(const PqmTree& t, const std::vector<int>& slotOrder, int v, int s);

}  // namespace hca
