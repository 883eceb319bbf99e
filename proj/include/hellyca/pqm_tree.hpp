#pragma once

#include "hellyca/graph.hpp"
#include "hellyca/modules.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hca {

class NotConformal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EnumerationTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class RootCase : unsigned char { Empty, Serial, Prime, Parallel };
const char* rootCaseName(RootCase c);

// Slot id: 2 * module + side.
constexpr int slotOf(int module, int side) { return 2 * module + side; }
constexpr int slotModule(int slot) { return slot >> 1; }
constexpr int slotSide(int slot) { return slot & 1; }

struct CaModule {
    std::vector<int> vertices;
    int representative = -1;
    int component = -1;
    int mroot = -1;                 // M-node id of the module itself
    std::vector<Letter> slot[2];    // letters of S^0 / S^1, clockwise as read
};

struct MNode {
    ModuleType type = ModuleType::Leaf;
    std::vector<int> vertices;
    std::vector<int> children;  // M-node ids
    int parent = -1;            // -1 at a CA-module root
    int module = -1;
    int depth = 0;
    // Relations between children (by child position), as read from the
    // reference model: crossing = before in tau^0 and overlapping,
    // nested = before in tau^0 and not overlapping.
    Relation crossing;
    Relation nested;
};

// One item of a circular order around a PQ-node: a slot or a neighbouring node.
struct PqItem {
    bool node = false;  // false: slot id, true: P-node id (around Q) or Q-node id (around P)
    int id = -1;
    friend bool operator==(const PqItem&, const PqItem&) = default;
    friend auto operator<=>(const PqItem&, const PqItem&) = default;
};

struct QNode {
    std::vector<int> vertices;
    std::vector<int> modules;
    std::vector<int> pnodes;
    ModuleType type = ModuleType::Leaf;  // type of the component in the decomposition
    std::vector<PqItem> around;          // reference order around the node
    bool symmetric = false;              // reflection gives the same order
};

struct PNode {
    std::vector<int> qnodes;
    std::vector<int> around;  // reference circular order of Q-node ids
};

// A pick of one admissible ordering per node.
struct ModelChoice {
    std::vector<int> slotOrder;               // serial root: circular order of slot ids
    int flipRoot = 0;                         // prime root
    std::vector<int> flipQ;                   // parallel root, per Q-node
    std::vector<std::vector<int>> orderP;     // parallel root, per P-node
    std::vector<int> flipM;                   // prime M-nodes
    std::vector<std::vector<int>> orderM;     // serial M-nodes: children order
};

class PqmTree {
public:
    // The model must be conformal for its own relations; relations are
    // read from it.
    explicit PqmTree(const ChordModel& model);

    const ChordModel& reference() const { return model_; }
    const RelationTable& relations() const { return rel_; }
    const std::vector<Bits>& overlapAdjacency() const { return ov_; }
    int vertexCount() const { return model_.size(); }
    RootCase rootCase() const { return rootCase_; }
    const ModuleTree& overlapTree() const { return md_; }

    const std::vector<CaModule>& modules() const { return modules_; }
    const std::vector<MNode>& mnodes() const { return mnodes_; }
    const MNode& mnode(int id) const { return mnodes_[static_cast<std::size_t>(id)]; }
    const std::vector<QNode>& qnodes() const { return qnodes_; }
    const std::vector<PNode>& pnodes() const { return pnodes_; }

    int moduleOf(int v) const { return moduleOf_[static_cast<std::size_t>(v)]; }
    int componentOf(int v) const { return modules_[static_cast<std::size_t>(moduleOf(v))].component; }
    int leafOf(int v) const { return leaf_[static_cast<std::size_t>(v)]; }
    // Which end of v (0 or 1) lies in slot S^0 of its CA-module.
    int zeroEnd(int v) const { return zeroEnd_[static_cast<std::size_t>(v)]; }
    // v is (S^0,S^1)-oriented.
    bool forward(int v) const { return zeroEnd(v) == 0; }
    // Letter of v lying in slot side j of its module.
    Letter slotLetter(int v, int j) const { return letterOf(v, j == 0 ? zeroEnd(v) : 1 - zeroEnd(v)); }
    bool inMNode(int id, int v) const;
    // Child of M-node id containing v.
    int childToward(int id, int v) const;
    // Deepest M-node holding both (same CA-module required).
    int lowestCommonNode(int a, int b) const;
    // The metachord orientation x <_S y (x, y in one CA-module, not overlapping).
    bool nestedBefore(int x, int y) const;

    const std::vector<int>& referenceSlotOrder() const { return slotOrder_; }

    ModelChoice referenceChoice() const;
    // The choice generating the reflection of generate(c).
    ModelChoice reflectedChoice(const ModelChoice& c) const;
    std::vector<Letter> generate(const ModelChoice& c) const;
    ChordModel generateModel(const ModelChoice& c) const;
    std::vector<int> slotOrderFor(const ModelChoice& c) const;
    // Children of M-node id in pi^0 and pi^1 order under the given choice.
    std::pair<std::vector<int>, std::vector<int>> childOrders(int id, const ModelChoice& c) const;
    // tau^0, tau^1 of a CA-module under the choice.
    std::pair<std::vector<Letter>, std::vector<Letter>> admissibleWords(int module, const ModelChoice& c) const;

    // Number of models (saturating).
    std::uint64_t modelCount() const;
    // Visit every model once; returning false stops the walk.
    void forEachChoice(const std::function<bool(const ModelChoice&)>& visit) const;
    std::vector<ChordModel> enumerateModels(std::uint64_t cap) const;

    // Members of Pi(V) explicitly (prime root only); otherwise empty.
    std::vector<std::vector<int>> primeSlotOrders() const;

    // Owners of a clique: inner M-nodes holding two of its vertices with
    // different orientations.
    std::vector<int> owners(const std::vector<int>& clique) const;
    bool owns(int mnode, const std::vector<int>& clique) const;

private:
    bool validPermutationModel(const std::vector<int>& set, std::vector<Letter>* part0, std::vector<Letter>* part1) const;
    std::vector<std::vector<int>> caModulesOf(int mdNode) const;
    void buildModule(std::vector<int> vertices);
    int copyTree(const ModuleTree& t, int node, int parent, int module, int depth);
    void readSlotOrder();
    void buildPqTree();
    void slotWords(int id, const ModelChoice& c, int side, std::vector<Letter>& out) const;

    ChordModel model_;
    RelationTable rel_;
    std::vector<Bits> ov_;
    ModuleTree md_;
    RootCase rootCase_ = RootCase::Empty;
    std::vector<CaModule> modules_;
    std::vector<MNode> mnodes_;
    std::vector<QNode> qnodes_;
    std::vector<PNode> pnodes_;
    std::vector<int> moduleOf_;
    std::vector<int> leaf_;
    std::vector<int> zeroEnd_;
    std::vector<int> slotOrder_;
    std::vector<int> posInSlot_;  // per letter: offset inside its slot in the reference
    bool rootSymmetric_ = false;
};

std::vector<int> reflectSlotOrder(const std::vector<int>& order);
std::vector<PqItem> reflectAround(const std::vector<PqItem>& around);

// Gaps are indexed by the position they follow.
struct CliquePlacement {
    std::vector<std::vector<int>> gaps;  // per clique: admissible gap indices
    bool feasible() const;
};

// Placements of clique letters meeting the left-side rule and, for non-owner
// M-nodes, staying outside their contiguous groups.
CliquePlacement extendWithCliques(const PqmTree& t, const std::vector<Letter>& word,
                                  const std::vector<std::vector<int>>& cliques);

// Gaps of the word lying on every arc of the clique.
std::vector<int> commonGaps(int n, const std::vector<Letter>& word, const std::vector<int>& clique);

}  // namespace hca
