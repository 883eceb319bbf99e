#pragma once

// Line-oriented instance files:
//   # comment
//   model: a^0 b^1 ...
//   clique: a b c
//   point: C1 4        (witness files: clique letter after word position 4)

#include "hellyca/chord_model.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hca {

struct Instance {
    ChordModel model;
    std::vector<std::vector<int>> cliques;  // sorted vertex ids
};

// A model together with one clique letter per clique, placed in a gap.
struct Witness {
    ChordModel model;
    std::vector<int> gaps;  // per clique: the letter follows word[gap]
};

Instance parseInstance(std::string_view text);
Instance readInstance(const std::string& path);
std::string formatInstance(const Instance& inst);

std::string formatWitness(const Witness& w);
Witness parseWitness(std::string_view text);

std::vector<int> cliqueFromNames(const ChordModel& m, const std::vector<std::string>& names);
std::string cliqueNames(const ChordModel& m, const std::vector<int>& clique);

}  // namespace hca
