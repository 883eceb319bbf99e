#pragma once

#include "hellyca/clique_type.hpp"
#include "hellyca/instance.hpp"
#include "hellyca/trapezoid.hpp"
#include "hellyca/two_sat.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hca {

// Orderings of M-nodes collected from slot requirements.
struct NodeOrders {
    bool ok = true;
    std::map<int, int> flips;                         // prime M-node -> flipM
    std::map<int, std::set<std::pair<int, int>>> edges;  // serial M-node -> child before child

    void add(const SlotRequirement& r);
    // Writes the orderings into the choice; false when some serial node has a cycle.
    bool applyTo(const PqmTree& t, ModelChoice& c) const;
};

struct SolveResult {
    bool helly = false;
    std::optional<Witness> witness;
    std::string reason;
    std::vector<CliqueAnalysis> analyses;  // per input clique
    std::uint64_t candidates = 0;          // slot tuples or skeleton words examined
    std::uint64_t rejectedWitnesses = 0;   // candidates whose model failed verification
};

// Decides whether one model of the tree realizes every clique at once.
SolveResult solveHellyCliques(const PqmTree& t, const std::vector<std::vector<int>>& cliques);

// Prime or parallel root: one slot side per clique, checked for all 2^k picks.
SolveResult solvePrimeParallel(const PqmTree& t, const std::vector<std::vector<int>>& cliques,
                               const std::vector<CliqueAnalysis>& analyses);
// Serial root: circular clique orders, stabilizer splits, trapezoids and 2-SAT.
SolveResult solveSerial(const PqmTree& t, const std::vector<std::vector<int>>& cliques,
                        const std::vector<CliqueAnalysis>& analyses);

// Clique points of one serial-root skeleton: line A (top, left to right) and
// line B (bottom, right to left) in clockwise order.
struct Skeleton {
    std::vector<int> lineA, lineB;  // positions in the clique list
    std::vector<int> line;          // per clique: 0 for A, 1 for B, -1 if not placed
    std::vector<Rational> point;    // per clique coordinate on its line
};

// Nothing when some module's private cliques are split on a line.
std::optional<Skeleton> buildSkeleton(const std::vector<int>& privateModule, const std::vector<int>& lineA,
                                      const std::vector<int>& lineB);

// Region for the chord of module S when S^0 (x = 0) or S^1 (x = 1) is on line A.
SpannedTrapezoid buildTrapezoid(const PqmTree& t, const Skeleton& skel, const std::vector<std::vector<int>>& cleaned,
                                const std::vector<int>& privateModule, int module, int x);

// Orderings of module S placing the private cliques of line A (in order)
// in slot S^x and those of line B in the other slot.
std::optional<NodeOrders> admissibleModelForSides(const PqmTree& t, int module, const std::vector<int>& tauA,
                                                  const std::vector<int>& tauB, int x,
                                                  const std::vector<std::vector<int>>& cleaned,
                                                  const std::vector<CliqueAnalysis>& analyses);

// Every clique has a common gap and the word realizes the tree's relations.
std::optional<Witness> verifyWitness(const PqmTree& t, const std::vector<Letter>& word,
                                     const std::vector<std::vector<int>>& cliques);

}  // namespace hca
