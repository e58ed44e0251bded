#include "homcount/json_io.hpp"

#include <fstream>

#include "homcount/error.hpp"

namespace homcount {

namespace {

std::vector<std::vector<int>> int_matrix(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw DomainError("bad_group_json", std::string(what) + " must be an array of arrays");
    std::vector<std::vector<int>> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw DomainError("bad_group_json", std::string(what) + " must be an array of arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw DomainError("bad_group_json", std::string(what) + " entries must be integers");
            r.push_back(v.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

GroupSpec group_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw DomainError("bad_group_json", "group spec needs a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "preset") {
        if (!j.contains("name") || !j["name"].is_string())
            throw DomainError("bad_group_json", "preset spec needs a string 'name'");
        return GroupSpec::preset(j["name"].get<std::string>());
    }
    if (kind == "permutation") {
        if (!j.contains("degree") || !j["degree"].is_number_integer())
            throw DomainError("bad_group_json", "permutation spec needs an integer 'degree'");
        return GroupSpec::permutation(j["degree"].get<int>(), int_matrix(j.value("generators", nlohmann::json::array()), "generators"));
    }
    if (kind == "cayley") {
        if (!j.contains("table")) throw DomainError("bad_group_json", "cayley spec needs a 'table'");
        return GroupSpec::cayley(int_matrix(j["table"], "table"));
    }
    if (kind == "product") {
        if (!j.contains("left") || !j.contains("right"))
            throw DomainError("bad_group_json", "product spec needs 'left' and 'right'");
        return GroupSpec::product(group_spec_from_json(j["left"]), group_spec_from_json(j["right"]));
    }
    throw DomainError("bad_group_json", "unknown group spec kind '" + kind + "'");
}

GroupSpec parse_group_arg(const std::string& arg) {
    if (arg.rfind("preset:", 0) == 0) return GroupSpec::preset(arg.substr(7));
    if (arg.rfind("file:", 0) == 0) {
        std::ifstream in(arg.substr(5));
        if (!in) throw DomainError("file_not_found", "cannot open group file '" + arg.substr(5) + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw DomainError("bad_group_json", std::string("group file is not valid JSON: ") + e.what());
        }
        return group_spec_from_json(j);
    }
    // bare names read as presets for convenience
    return GroupSpec::preset(arg);
}

MobiusGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rotation") || !j.contains("matching"))
        throw DomainError("bad_graph_json", "graph needs 'rotation' and 'matching'");
    auto cycles = int_matrix(j["rotation"], "rotation");
    auto pair_rows = int_matrix(j["matching"], "matching");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& row : pair_rows) {
        if (row.size() != 2) throw DomainError("bad_graph_json", "matching entries must be pairs");
        pairs.emplace_back(row[0], row[1]);
    }
    std::vector<int> twists(pairs.size(), 0);
    if (j.contains("twists")) {
        if (!j["twists"].is_array() || j["twists"].size() != pairs.size())
            throw DomainError("bad_graph_json", "twists must list one bit per matching pair");
        for (std::size_t i = 0; i < pairs.size(); ++i) twists[i] = j["twists"][i].get<int>();
    }
    return build_mobius_graph(cycles, pairs, twists);
}

MobiusGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("file_not_found", "cannot open graph file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("bad_graph_json", std::string("graph file is not valid JSON: ") + e.what());
    }
    return graph_from_json(j);
}

} // namespace homcount
