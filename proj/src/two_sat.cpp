#include "hellyca/two_sat.hpp"

#include <algorithm>
#include <stdexcept>

namespace hca {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

int node(Literal l) { return 2 * l.var + (l.value ? 0 : 1); }

}  // namespace

bool TwoSatFormula::satisfiedBy(const std::vector<bool>& a) const {
    auto holds = [&](Literal l) { return a[sz(l.var)] == l.value; };
    for (Literal u : units_)
        if (!holds(u)) return false;
    for (auto [x, y] : binary_)
        if (holds(x) && holds(y)) return false;
    return true;
}

std::optional<std::vector<bool>> solveTwoSat(const TwoSatFormula& f) {
    const int n = f.variableCount();
    auto check = [n](Literal l) {
        if (l.var < 0 || l.var >= n) throw std::out_of_range("two-sat literal references an undeclared variable");
    };
    std::vector<std::vector<int>> out(sz(2 * n));
    for (Literal u : f.units()) {
        check(u);
        out[sz(node(!u))].push_back(node(u));
    }
    for (auto [a, b] : f.forbidden()) {
        check(a);
        check(b);
        out[sz(node(a))].push_back(node(!b));
        out[sz(node(b))].push_back(node(!a));
    }

    // Iterative Tarjan; components come out in reverse topological order.
    const int m = 2 * n;
    std::vector<int> index(sz(m), -1), low(sz(m), 0), comp(sz(m), -1), stack;
    std::vector<char> onStack(sz(m), 0);
    int counter = 0, comps = 0;
    for (int root = 0; root < m; ++root) {
        if (index[sz(root)] >= 0) continue;
        std::vector<std::pair<int, std::size_t>> call{{root, 0}};
        index[sz(root)] = low[sz(root)] = counter++;
        stack.push_back(root);
        onStack[sz(root)] = 1;
        while (!call.empty()) {
            auto& [v, next] = call.back();
            if (next < out[sz(v)].size()) {
                int w = out[sz(v)][next++];
                if (index[sz(w)] < 0) {
                    index[sz(w)] = low[sz(w)] = counter++;
                    stack.push_back(w);
                    onStack[sz(w)] = 1;
                    call.emplace_back(w, 0);
                } else if (onStack[sz(w)]) {
                    low[sz(v)] = std::min(low[sz(v)], index[sz(w)]);
                }
                continue;
            }
            if (low[sz(v)] == index[sz(v)]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    onStack[sz(w)] = 0;
                    comp[sz(w)] = comps;
                } while (w != v);
                ++comps;
            }
            int done = v;
            call.pop_back();
            if (!call.empty()) low[sz(call.back().first)] = std::min(low[sz(call.back().first)], low[sz(done)]);
        }
    }
    std::vector<bool> a(sz(n));
    for (int x = 0; x < n; ++x) {
        int t = comp[sz(2 * x)], fl = comp[sz(2 * x + 1)];
        if (t == fl) return std::nullopt;
        a[sz(x)] = t < fl;
    }
    if (!f.satisfiedBy(a)) throw std::logic_error("two-sat assignment check failed");
    return a;
}

}  // namespace hca
