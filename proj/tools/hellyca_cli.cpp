#include "hellyca/clique_type.hpp"
#include "hellyca/generators.hpp"
#include "hellyca/helly_analysis.hpp"
#include "hellyca/instance.hpp"
#include "hellyca/kernel.hpp"
#include "hellyca/oracle.hpp"
#include "hellyca/pqm_tree.hpp"
#include "hellyca/solver.hpp"
#include "hellyca/tree_export.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

using namespace hca;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInvalid = 2;

// Bad input of any kind; main turns it into exit code 2.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Instance load(const std::string& path) {
    Instance inst = readInstance(path);
    const Graph g = graphFromModel(inst.model);
    for (const auto& c : inst.cliques) requireClique(g, c);
    return inst;
}

void writeFile(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int runTree(const std::string& path, bool dot) {
    const Instance inst = load(path);
    PqmTree t(inst.model);
    if (dot)
        std::cout << treeDot(t);
    else
        std::cout << treeJson(t) << "\n";
    return kYes;
}

int runCliqueType(const std::string& path) {
    const Instance inst = load(path);
    PqmTree t(inst.model);
    for (const auto& c : inst.cliques) std::cout << cliqueNames(inst.model, c) << ": " << cliqueTypeName(classify(t, c)) << "\n";
    return kYes;
}

int runSolve(const std::string& path, const std::string& witnessPath) {
    const Instance inst = load(path);
    PqmTree t(inst.model);
    const auto r = solveHellyCliques(t, inst.cliques);
    if (!r.helly) {
        std::cout << "NO";
        if (!r.reason.empty()) std::cout << ": " << r.reason;
        std::cout << "\n";
        return kNo;
    }
    std::cout << "YES\n";
    if (!witnessPath.empty() && r.witness) writeFile(witnessPath, formatWitness(*r.witness));
    return kYes;
}

int runKernelize(const std::string& path, const std::string& outPath, bool always) {
    const Instance inst = load(path);
    const auto r = kernelize(inst, KernelOptions{always});
    writeFile(outPath, formatInstance(r.kernel));
    if (r.rejected) std::cout << "rejected: " << r.reason << "\n";
    std::cout << "k " << r.ambiguous << "\n"
              << "R " << r.important.size() << "\n"
              << "V(G*) " << r.kernel.model.size() << "\n"
              << "unchanged " << (r.unchanged ? "yes" : "no") << "\n";
    return kYes;
}

int runOracle(const std::string& path, const std::string& mode, std::uint64_t cap) {
    const Instance inst = load(path);
    const int n = inst.model.size();
    const WordSet models = enumerateByFilter(relationsFromModel(inst.model), cap);
    if (mode == "models") {
        std::cout << "models " << models.size() << "\n";
        for (const auto& w : models) std::cout << ChordModel{inst.model.names, w}.str() << "\n";
        return kYes;
    }
    if (mode == "type") {
        for (const auto& c : inst.cliques)
            std::cout << cliqueNames(inst.model, c) << ": " << cliqueTypeName(oracleCliqueType(n, models, c)) << "\n";
        return kYes;
    }
    const auto w = oracleHellyCliques(n, models, inst.cliques);
    if (!w) {
        std::cout << "NO\n";
        return kNo;
    }
    std::cout << "YES " << ChordModel{inst.model.names, *w}.str() << "\n";
    return kYes;
}

Triple parseTriple(const std::string& s) {
    Triple t{};
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> t[0] >> c1 >> t[1] >> c2 >> t[2]) || c1 != ',' || c2 != ',' || !in.eof())
        throw InvalidInput("triple '" + s + "' is not a,b,c");
    return t;
}

// Instance with `count` cliques drawn from the maximal cliques and their subsets.
Instance withRandomCliques(const ChordModel& m, int count, std::uint64_t seed) {
    Instance inst{m, {}};
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> pool;
    forEachMaximalClique(graphFromModel(m), 1000, [&](const std::vector<int>& c) {
        pool.push_back(c);
        return true;
    });
    for (int i = 0; i < count && !pool.empty(); ++i) {
        std::vector<int> c = pool[rng() % pool.size()], sub;
        for (int v : c)
            if (rng() % 4 != 0) sub.push_back(v);
        inst.cliques.push_back(sub.size() >= 2 ? sub : c);
    }
    return inst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circular-arc models, PQM-trees and the Helly cliques problem"};
    app.require_subcommand(1);
    int jobs = 0;
    app.add_option("--jobs", jobs, "threads for the parallel solver loops (0: OpenMP default)");

    std::string input, output, witness, mode = "models";
    bool json = false, dot = false, always = false;
    std::uint64_t cap = 1'000'000;

    auto* tree = app.add_subcommand("tree", "print the PQM-tree");
    tree->add_option("instance", input)->required();
    auto* jsonFlag = tree->add_flag("--json", json, "JSON output (default)");
    tree->add_flag("--dot", dot, "DOT output")->excludes(jsonFlag);

    auto* type = app.add_subcommand("clique-type", "classify every clique");
    type->add_option("instance", input)->required();

    auto* solve = app.add_subcommand("helly-solve", "decide whether one model realizes all cliques");
    solve->add_option("instance", input)->required();
    solve->add_option("--witness", witness, "write the witness model here on YES");

    auto* kern = app.add_subcommand("kernelize", "write an equivalent small instance");
    kern->add_option("instance", input)->required();
    kern->add_option("-o,--output", output)->required();
    kern->add_flag("--always-reduce", always, "build the reduct even when it is not smaller");

    auto* orc = app.add_subcommand("oracle", "brute-force enumeration");
    orc->add_option("instance", input)->required();
    orc->add_option("--mode", mode)->check(CLI::IsMember({"models", "type", "solve"}));
    orc->add_option("--cap", cap, "give up past this many models");

    int n = 0, cliques = 0;
    std::uint64_t seed = 1;
    bool dense = false;
    std::vector<std::string> triples;
    auto* gen = app.add_subcommand("gen", "write a generated instance");
    gen->require_subcommand(1);
    auto* genTotal = gen->add_subcommand("total-ordering", "instance from a betweenness problem");
    genTotal->add_option("-n", n, "elements 1..n")->required();
    genTotal->add_option("--triple", triples, "a,b,c meaning b lies between a and c");
    genTotal->add_option("-o,--output", output)->required();
    auto* genMatching = gen->add_subcommand("matching", "complement of a perfect matching on 2n vertices");
    genMatching->add_option("-n", n)->required();
    genMatching->add_option("-o,--output", output)->required();
    auto* genRandom = gen->add_subcommand("random", "random normalized model");
    genRandom->add_option("-n", n)->required();
    genRandom->add_option("--seed", seed);
    genRandom->add_option("--cliques", cliques, "random cliques to attach");
    genRandom->add_flag("--dense", dense, "long arcs, no twins or universal chords");
    genRandom->add_option("-o,--output", output)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kYes : kInvalid;
    }
    if (jobs > 0) omp_set_num_threads(jobs);

    try {
        if (*tree) return runTree(input, dot);
        if (*type) return runCliqueType(input);
        if (*solve) return runSolve(input, witness);
        if (*kern) return runKernelize(input, output, always);
        if (*orc) return runOracle(input, mode, cap);
        if (*genTotal) {
            std::vector<Triple> ts;
            for (const auto& s : triples) ts.push_back(parseTriple(s));
            writeFile(output, formatInstance(fromTotalOrdering(n, ts)));
        } else if (*genMatching) {
            writeFile(output, formatInstance(Instance{matchingComplement(n), {}}));
        } else if (*genRandom) {
            const ChordModel m = dense ? randomDenseModel(n, seed) : randomModel(n, seed);
            writeFile(output, formatInstance(withRandomCliques(m, cliques, seed)));
        }
        return kYes;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
}
