#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace hca {

// x_var == value
struct Literal {
    int var = 0;
    bool value = true;
    Literal operator!() const { return {var, !value}; }
    friend bool operator==(const Literal&, const Literal&) = default;
};

class TwoSatFormula {
public:
    explicit TwoSatFormula(int variables = 0) : vars_(variables) {}

    int variableCount() const { return vars_; }
    int addVariable() { return vars_++; }

    void require(Literal a) { units_.push_back(a); }
    // not (a and b)
    void forbid(Literal a, Literal b) { binary_.emplace_back(a, b); }
    // a or b
    void either(Literal a, Literal b) { binary_.emplace_back(!a, !b); }

    const std::vector<Literal>& units() const { return units_; }
    const std::vector<std::pair<Literal, Literal>>& forbidden() const { return binary_; }

    bool satisfiedBy(const std::vector<bool>& assignment) const;

private:
    int vars_ = 0;
    std::vector<Literal> units_;
    std::vector<std::pair<Literal, Literal>> binary_;
};

// Implication graph and strongly connected components.
std::optional<std::vector<bool>> solveTwoSat(const TwoSatFormula& f);

}  // namespace hca
