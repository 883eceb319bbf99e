#include "hellyca/generators.hpp"
#include "hellyca/tree_export.hpp"

#include "helpers.hpp"

#include <doctest.h>
#include <json.hpp>

#include <regex>
#include <sstream>

using namespace hca;
using testing_helpers::model;

namespace {

// Accepts the DOT subset we emit: a digraph of node and edge statements,
// attribute lists with identifiers or quoted strings.
bool validDot(const std::string& text) {
    const std::string id = R"(([A-Za-z_][A-Za-z0-9_]*|-?[0-9]+|"([^"\\]|\\.)*"))";
    const std::string attr = id + R"(\s*=\s*)" + id;
    const std::string attrs = R"(\[\s*()" + attr + R"((\s*[,;]\s*)" + attr + R"()*)?\s*\])";
    const std::regex header(R"(\s*(strict\s+)?digraph\s+)" + id + R"(\s*\{\s*)");
    const std::regex nodeStmt(R"(\s*)" + id + R"(\s*()" + attrs + R"()?\s*;?\s*)");
    const std::regex defaults(R"(\s*(node|edge|graph)\s*)" + attrs + R"(\s*;?\s*)");
    const std::regex edgeStmt(R"(\s*)" + id + R"((\s*->\s*)" + id + R"()+\s*()" + attrs + R"()?\s*;?\s*)");
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || !std::regex_match(line, header)) return false;
    bool closed = false;
    while (std::getline(in, line)) {
        if (closed) {
            if (line.find_first_not_of(" \t") != std::string::npos) return false;
            continue;
        }
        if (std::regex_match(line, std::regex(R"(\s*\}\s*)"))) {
            closed = true;
            continue;
        }
        if (!std::regex_match(line, defaults) && !std::regex_match(line, edgeStmt) && !std::regex_match(line, nodeStmt))
            return false;
    }
    return closed;
}

}  // namespace

TEST_CASE("DOT checker rejects broken output") {
    CHECK(validDot("digraph g {\n  a -> b;\n}\n"));
    CHECK_FALSE(validDot("digraph g {\n  a -> ;\n}\n"));
    CHECK_FALSE(validDot("digraph g {\n  a -> b;\n"));
    CHECK_FALSE(validDot("graph g {\n}\n"));
}

TEST_CASE("tree exports parse") {
    const char* words[] = {"a^1 b^1 c^0 d^1 e^0 f^1 h^1 i^0 c^1 b^0 e^1 d^0 a^0 g^0 i^1 h^0 g^1 f^0",
                           "a^0 b^1 b^0 c^0 c^1 a^1", "a^0 b^1 c^0 a^1 b^0 c^1", "a^0 a^1"};
    for (const char* w : words) {
        PqmTree t(model(w));
        INFO(w);
        CHECK(validDot(treeDot(t)));
        auto j = nlohmann::json::parse(treeJson(t));
        CHECK(j["mnodes"].size() == t.mnodes().size());
        CHECK(j["modules"].size() == t.modules().size());
    }
    PqmTree random(randomModel(9, 4));
    CHECK(validDot(treeDot(random)));
}

TEST_CASE("four-module example lists pi and its reflection") {
    PqmTree t(model("a^1 b^1 c^0 d^1 e^0 f^1 h^1 i^0 c^1 b^0 e^1 d^0 a^0 g^0 i^1 h^0 g^1 f^0"));
    auto j = nlohmann::json::parse(treeJson(t));
    CHECK(j["root"] == "prime");
    REQUIRE(j["Pi"].size() == 2);
    auto rotated = [](std::vector<std::string> v, const std::string& first) {
        std::rotate(v.begin(), std::find(v.begin(), v.end(), first), v.end());
        return v;
    };
    const std::vector<std::string> pi{"S1^1", "S2^1", "S4^1", "S1^0", "S3^0", "S4^0", "S3^1", "S2^0"};
    const std::vector<std::string> piR{"S1^1", "S4^0", "S2^0", "S1^0", "S2^1", "S3^0", "S4^1", "S3^1"};
    CHECK(rotated(j["Pi"][0].get<std::vector<std::string>>(), "S1^1") == pi);
    CHECK(rotated(j["Pi"][1].get<std::vector<std::string>>(), "S1^1") == piR);
}
