#include "hellyca/instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hca {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> words(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

// Calls f(lineNumber, key, rest) for each non-comment line.
template <class F>
void forEachLine(std::string_view text, F&& f) {
    std::istringstream in{std::string(text)};
    int number = 0;
    for (std::string line; std::getline(in, line);) {
        ++number;
        auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        auto colon = body.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("line " + std::to_string(number) + ": expected 'key: value'");
        f(number, trim(body.substr(0, colon)), trim(body.substr(colon + 1)));
    }
}

ChordModel parseModelLine(int number, std::string_view rest) {
    try {
        return ChordModel::fromWord(CircularWord::parse(rest));
    } catch (const std::exception& e) {
        throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
}

}  // namespace

std::vector<int> cliqueFromNames(const ChordModel& m, const std::vector<std::string>& names) {
    std::vector<int> c;
    for (const auto& n : names) {
        auto it = std::find(m.names.begin(), m.names.end(), n);
        if (it == m.names.end()) throw ParseError("unknown vertex '" + n + "'");
        c.push_back(static_cast<int>(it - m.names.begin()));
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

std::string cliqueNames(const ChordModel& m, const std::vector<int>& clique) {
    std::string out;
    for (int v : clique) {
        if (!out.empty()) out += ' ';
        out += m.names[static_cast<std::size_t>(v)];
    }
    return out;
}

Instance parseInstance(std::string_view text) {
    Instance inst;
    bool haveModel = false;
    std::vector<std::pair<int, std::vector<std::string>>> pending;
    forEachLine(text, [&](int number, std::string_view key, std::string_view rest) {
        if (key == "model") {
            if (haveModel) throw ParseError("line " + std::to_string(number) + ": second model line");
            inst.model = parseModelLine(number, rest);
            haveModel = true;
        } else if (key == "clique") {
            pending.emplace_back(number, words(rest));
        } else if (key != "point") {
            throw ParseError("line " + std::to_string(number) + ": unknown key '" + std::string(key) + "'");
        }
    });
    if (!haveModel) throw ParseError("no model line");
    for (auto& [number, names] : pending) {
        if (names.empty()) throw ParseError("line " + std::to_string(number) + ": empty clique");
        try {
            inst.cliques.push_back(cliqueFromNames(inst.model, names));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(number) + ": " + e.what());
        }
    }
    return inst;
}

Instance readInstance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseInstance(ss.str());
}

std::string formatInstance(const Instance& inst) {
    std::string out = "model: " + inst.model.str() + "\n";
    for (const auto& c : inst.cliques) out += "clique: " + cliqueNames(inst.model, c) + "\n";
    return out;
}

std::string formatWitness(const Witness& w) {
    std::string out = "model: " + w.model.str() + "\n";
    for (std::size_t i = 0; i < w.gaps.size(); ++i)
        out += "point: C" + std::to_string(i + 1) + " " + std::to_string(w.gaps[i]) + "\n";
    return out;
}

Witness parseWitness(std::string_view text) {
    Witness w;
    bool haveModel = false;
    forEachLine(text, [&](int number, std::string_view key, std::string_view rest) {
        if (key == "model") {
            w.model = parseModelLine(number, rest);
            haveModel = true;
        } else if (key == "point") {
            auto parts = words(rest);
            if (parts.size() != 2) throw ParseError("line " + std::to_string(number) + ": expected 'point: C<i> <gap>'");
            w.gaps.push_back(std::stoi(parts[1]));
        }
    });
    if (!haveModel) throw ParseError("no model line");
    return w;
}

}  // namespace hca
