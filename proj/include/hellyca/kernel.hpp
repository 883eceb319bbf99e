#pragma once

#include "hellyca/clique_type.hpp"
#include "hellyca/instance.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace hca {

// An inner node of the tree: an M-node, or the Q-node of an overlap component.
struct KernelNode {
    bool qnode = false;
    int id = -1;
    friend bool operator==(const KernelNode&, const KernelNode&) = default;
    friend auto operator<=>(const KernelNode&, const KernelNode&) = default;
};

enum class Binding : unsigned char {
    Unbound,
    SameSide,
    DifferentSides,
    Conflicting,  // a serial node shows both kinds of evidence; no model exists
};
const char* bindingName(Binding b);

// Positions below refer to the list of ambiguous clique analyses handed in.
Binding bindingRelation(const PqmTree& t, KernelNode n, const std::vector<CliqueAnalysis>& cliques, int c1, int c2);

// Cliques private for the node (owned by it; for a Q-node, private in one of its
// CA-modules, or every clique at a serial root).
std::vector<int> privateCliques(const PqmTree& t, KernelNode n, const std::vector<CliqueAnalysis>& cliques);
// Cliques whose deepest owner is the node; public cliques count as introduced
// by a serial root.
std::vector<int> introducedCliques(const PqmTree& t, KernelNode n, const std::vector<CliqueAnalysis>& cliques);
// Children in processing order (least vertex first); Q-node children are
// the roots of its CA-modules.
std::vector<int> kernelChildren(const PqmTree& t, KernelNode n);
// Every inner node, children before parents.
std::vector<KernelNode> bottomUpNodes(const PqmTree& t);

struct Block {
    std::array<std::vector<int>, 2> sides;  // side 0 holds the least clique
    friend bool operator==(const Block&, const Block&) = default;
    friend auto operator<=>(const Block&, const Block&) = default;
};

struct NodeBlocks {
    KernelNode node;
    std::vector<int> priv;
    std::vector<int> introduced;
    std::vector<Block> blocks;                // sorted
    std::vector<std::pair<int, int>> merges;  // the pair each merge went through
    bool important = false;
};

struct BlockState {
    bool rejected = false;
    std::string reason;
    std::vector<NodeBlocks> nodes;  // nodes with private cliques, bottom-up
    const NodeBlocks* find(KernelNode n) const;
};

// Needs every clique ambiguous.
BlockState computeBlocks(const PqmTree& t, const std::vector<CliqueAnalysis>& cliques);

struct ImportantSet {
    std::vector<KernelNode> importantNodes;
    std::vector<int> weaklyImportant;  // M-node ids (children of serial nodes)
    std::vector<int> vertices;         // sorted
};

ImportantSet markImportant(const PqmTree& t, const std::vector<CliqueAnalysis>& cliques, const BlockState& blocks);

// Counting bounds for k cliques: important nodes, weakly important
// children and important vertices.
struct KernelBounds {
    std::uint64_t importantNodes = 0, weaklyImportant = 0, vertices = 0;
};
KernelBounds kernelBounds(int k);
// Signatures (A, B) over k private cliques with |A| + |B| <= 4.
std::uint64_t signatureCount(int k);

struct Reduct {
    ChordModel model;
    std::vector<int> fromOriginal;  // per vertex of the input: its id in the reduct, or -1
};

// A graph whose models restricted to `keep` are exactly those of m.
// Added chords are named _r0, _r1, ... (skipping names already taken).
Reduct reduct(const ChordModel& m, const std::vector<int>& keep);

struct KernelOptions {
    // Build the reduct even when 12 |R| >= |V| (otherwise the input is returned).
    bool alwaysReduce = false;
};

struct KernelResult {
    bool rejected = false;
    std::string reason;
    Instance kernel;                // a fixed NO instance when rejected
    bool unchanged = false;         // the input came back as its own kernel
    int ambiguous = 0;              // cliques left after dropping settled ones
    std::vector<int> important;     // R, as input vertex ids
    std::size_t importantNodes = 0;
    std::size_t weaklyImportant = 0;
};

KernelResult kernelize(const Instance& inst, const KernelOptions& options = {});

}  // namespace hca
