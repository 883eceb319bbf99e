#pragma once

#include "hellyca/chord_model.hpp"

#include <boost/dynamic_bitset.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hca {

using Bits = boost::dynamic_bitset<>;

class PreprocessingRequired : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    int indexOf(const std::string& name) const;

    void addEdge(int u, int v);
    bool adjacent(int u, int v) const { return closed_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] && u != v; }
    // Closed neighbourhood N[v].
    const Bits& closed(int v) const { return closed_[static_cast<std::size_t>(v)]; }

    bool isUniversal(int v) const { return closed(v).all(); }
    bool areTwins(int u, int v) const { return u != v && closed(u) == closed(v); }
    bool hasTwinsOrUniversal() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.names_ == b.names_ && a.closed_ == b.closed_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Bits> closed_;
};

Graph graphFromModel(const ChordModel& m);

enum class PairRelation : unsigned char { Disjoint, Contains, ContainedIn, CoverCircle, Overlap };

const char* relationName(PairRelation r);

enum class CliqueType : unsigned char { AlwaysHelly, AlwaysNonHelly, Ambiguous };
const char* cliqueTypeName(CliqueType t);
PairRelation converse(PairRelation r);

// Neighbourhood-forced relation of (v,u); requires a twin-free graph
// without universal vertices.
PairRelation classifyPair(const Graph& g, int v, int u);
// The neighbourhood rule without the reduced-graph check; meaningless for
// twins and universal vertices.
PairRelation forcedRelation(const Graph& g, int v, int u);

class RelationTable {
public:
    RelationTable() = default;
    explicit RelationTable(int n);

    int size() const { return n_; }
    PairRelation at(int v, int u) const { return rel_[static_cast<std::size_t>(v * n_ + u)]; }
    void set(int v, int u, PairRelation r);
    bool overlap(int v, int u) const { return v != u && at(v, u) == PairRelation::Overlap; }

    // u in L(v): v contains u or they cover the circle.
    bool inLeft(int v, int u) const;
    // u in R(v): disjoint, or v contained in u.
    bool inRight(int v, int u) const;

    friend bool operator==(const RelationTable&, const RelationTable&) = default;

private:
    int n_ = 0;
    std::vector<PairRelation> rel_;
};

RelationTable relationsFromGraph(const Graph& g);
// Relations read geometrically off the chords of a model.
RelationTable relationsFromModel(const ChordModel& m);
PairRelation geometricRelation(const Geometry& geo, int v, int u);

struct SideSets {
    std::vector<Bits> left;
    std::vector<Bits> right;
};
SideSets leftRightSets(const RelationTable& rel);

struct Preprocessed {
    Graph graph;
    ChordModel model;
    std::vector<int> universal;                 // original indices
    std::vector<std::vector<int>> twinClasses;  // original indices, representative first
    std::vector<int> toReduced;                 // original index -> reduced index or -1
    std::vector<int> toOriginal;                // reduced index -> original index
};

Preprocessed preprocess(const Graph& g, const ChordModel& m);
// Clique on original vertices -> clique on representatives (sorted, deduplicated).
std::vector<int> mapClique(const Preprocessed& p, const std::vector<int>& clique);

struct ConformalCheck {
    bool ok = true;
    int v = -1;
    int u = -1;
    std::string expected;
    std::string actual;
    std::string message() const;
};

// The chords of m must realize g and the relations forced by g.
ConformalCheck validateConformal(const ChordModel& m, const Graph& g);
// The chords of m must realize exactly the relation table rel.
ConformalCheck validateAgainst(const ChordModel& m, const RelationTable& rel);

bool isClique(const Graph& g, const std::vector<int>& c);

}  // namespace hca
