#pragma once

#include "hellyca/pqm_tree.hpp"

#include <string>

namespace hca {

// Nodes, modules with their slot words, and Pi (the slot orders of a prime root).
std::string treeJson(const PqmTree& t);
// The same tree as a DOT digraph.
std::string treeDot(const PqmTree& t);

}  // namespace hca
