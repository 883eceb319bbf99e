#include "hellyca/tree_export.hpp"

#include <json.hpp>

#include <sstream>

namespace hca {

using nlohmann::json;

namespace {

std::string token(const ChordModel& m, Letter l) {
    return m.names[static_cast<std::size_t>(vertexOf(l))] + "^" + std::to_string(endOf(l));
}

std::string slotName(int slot) { return "S" + std::to_string(slotModule(slot) + 1) + "^" + std::to_string(slotSide(slot)); }

json names(const ChordModel& m, const std::vector<int>& vs) {
    json out = json::array();
    for (int v : vs) out.push_back(m.names[static_cast<std::size_t>(v)]);
    return out;
}

json tokens(const ChordModel& m, const std::vector<Letter>& ls) {
    json out = json::array();
    for (Letter l : ls) out.push_back(token(m, l));
    return out;
}

std::string itemName(const PqItem& it, bool aroundQ) {
    if (!it.node) return slotName(it.id);
    return (aroundQ ? "P" : "Q") + std::to_string(it.id);
}

}  // namespace

std::string treeJson(const PqmTree& t) {
    const ChordModel& m = t.reference();
    json j;
    j["root"] = rootCaseName(t.rootCase());
    j["vertices"] = m.names;
    j["modelCount"] = t.modelCount();
    json mods = json::array();
    for (std::size_t i = 0; i < t.modules().size(); ++i) {
        const auto& s = t.modules()[i];
        mods.push_back({{"name", "S" + std::to_string(i + 1)},
                        {"vertices", names(m, s.vertices)},
                        {"component", s.component},
                        {"mnode", s.mroot},
                        {"slot0", tokens(m, s.slot[0])},
                        {"slot1", tokens(m, s.slot[1])}});
    }
    j["modules"] = mods;
    json ms = json::array();
    for (std::size_t i = 0; i < t.mnodes().size(); ++i) {
        const auto& n = t.mnodes()[i];
        ms.push_back({{"id", i},
                      {"type", moduleTypeName(n.type)},
                      {"vertices", names(m, n.vertices)},
                      {"children", n.children},
                      {"parent", n.parent},
                      {"module", n.module}});
    }
    j["mnodes"] = ms;
    json qs = json::array();
    for (std::size_t i = 0; i < t.qnodes().size(); ++i) {
        const auto& q = t.qnodes()[i];
        json around = json::array();
        for (const auto& it : q.around) around.push_back(itemName(it, true));
        qs.push_back({{"id", "Q" + std::to_string(i)},
                      {"type", moduleTypeName(q.type)},
                      {"vertices", names(m, q.vertices)},
                      {"around", around},
                      {"symmetric", q.symmetric}});
    }
    j["qnodes"] = qs;
    json ps = json::array();
    for (std::size_t i = 0; i < t.pnodes().size(); ++i) {
        json around = json::array();
        for (int q : t.pnodes()[i].around) around.push_back("Q" + std::to_string(q));
        ps.push_back({{"id", "P" + std::to_string(i)}, {"around", around}});
    }
    j["pnodes"] = ps;
    if (t.rootCase() == RootCase::Serial) {
        json order = json::array();
        for (int s : t.referenceSlotOrder()) order.push_back(slotName(s));
        j["slotOrder"] = order;
    }
    json pi = json::array();
    for (const auto& order : t.primeSlotOrders()) {
        json o = json::array();
        for (int s : order) o.push_back(slotName(s));
        pi.push_back(o);
    }
    j["Pi"] = pi;
    return j.dump(2);
}

namespace {

std::string dotString(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string treeDot(const PqmTree& t) {
    const ChordModel& m = t.reference();
    std::ostringstream out;
    out << "digraph pqm {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < t.pnodes().size(); ++i) {
        out << "  P" << i << " [shape=circle, label=\"P" << i << "\"];\n";
        for (int q : t.pnodes()[i].qnodes) out << "  P" << i << " -> Q" << q << ";\n";
    }
    for (std::size_t i = 0; i < t.qnodes().size(); ++i) {
        out << "  Q" << i << " [shape=diamond, label=\"Q" << i << "\"];\n";
        for (int s : t.qnodes()[i].modules) out << "  Q" << i << " -> M" << t.modules()[static_cast<std::size_t>(s)].mroot << ";\n";
    }
    for (std::size_t i = 0; i < t.mnodes().size(); ++i) {
        const auto& n = t.mnodes()[i];
        std::string label = n.type == ModuleType::Leaf ? m.names[static_cast<std::size_t>(n.vertices.front())]
                                                       : std::string(moduleTypeName(n.type));
        out << "  M" << i << " [label=" << dotString(label) << "];\n";
        for (int c : n.children) out << "  M" << i << " -> M" << c << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace hca
