#pragma once

#include "hellyca/graph.hpp"

#include <stdexcept>
#include <vector>

namespace hca {

enum class ModuleType : unsigned char { Leaf, Serial, Parallel, Prime };

const char* moduleTypeName(ModuleType t);

struct ModuleNode {
    ModuleType type = ModuleType::Leaf;
    std::vector<int> vertices;  // sorted
    std::vector<int> children;  // ordered by least vertex
    int parent = -1;
};

// Strong-module tree of an undirected graph restricted to a vertex subset.
class ModuleTree {
public:
    ModuleTree() = default;
    ModuleTree(const std::vector<Bits>& adj, std::vector<int> subset);

    int root() const { return root_; }
    const ModuleNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
    int nodeCount() const { return static_cast<int>(nodes_.size()); }
    int leafOf(int v) const;
    // Child of `id` containing vertex v (v must lie in the node).
    int childContaining(int id, int v) const;
    bool contains(int id, int v) const;

private:
    int build(const std::vector<Bits>& adj, std::vector<int> vertices, int parent);

    std::vector<ModuleNode> nodes_;
    std::vector<int> leaf_;
    int root_ = -1;
};

// Exhaustive strong-module listing for small graphs (testing aid).
std::vector<std::vector<int>> strongModulesBrute(const std::vector<Bits>& adj, const std::vector<int>& subset);
bool isModule(const std::vector<Bits>& adj, const std::vector<int>& subset, const std::vector<int>& m);

class OrientationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Square 0/1 relation indexed by position in a vertex list.
struct Relation {
    int n = 0;
    std::vector<char> bits;
    explicit Relation(int size = 0) : n(size), bits(static_cast<std::size_t>(size * size), 0) {}
    bool operator()(int a, int b) const { return bits[static_cast<std::size_t>(a * n + b)] != 0; }
    void set(int a, int b, bool on = true) { bits[static_cast<std::size_t>(a * n + b)] = on ? 1 : 0; }
    Relation reversed() const;
    bool isTransitive() const;
    friend bool operator==(const Relation&, const Relation&) = default;
};

// Transitive orientations of the edges between the children of an inner
// node; relations are indexed by child position. Serial nodes yield every
// linear order of the children.
std::vector<Relation> transitiveOrientations(const ModuleTree& t, int id, const std::vector<Bits>& adj);

// The forced orientation of a prime quotient starting from child 0 before
// its first neighbour; the other orientation is its reverse.
Relation primeOrientation(const Relation& quotientEdges);

struct PermutationModel {
    std::vector<int> first;   // tau^0
    std::vector<int> second;  // tau^1
};

struct OrientationPair {
    std::vector<int> vertices;
    Relation crossing;  // x before y and x ~ y
    Relation nested;    // x before y and x || y
};

OrientationPair orientationsFromModel(const PermutationModel& p, const std::vector<Bits>& adj);
PermutationModel permutationModelFromOrientations(const OrientationPair& o);

}  // namespace hca
