#pragma once

#include <string>

#include <json.hpp>

#include "homcount/group.hpp"
#include "homcount/mobius_graph.hpp"

namespace homcount {

// {"kind":"preset","name":"S3"} | {"kind":"permutation","degree":n,"generators":[[...],...]}
// | {"kind":"cayley","table":[[...],...]} | {"kind":"product","left":...,"right":...}
GroupSpec group_spec_from_json(const nlohmann::json& j);

// CLI mini-grammar: preset:<name>[:<n>] or file:<path> (JSON schema above).
GroupSpec parse_group_arg(const std::string& arg);

// {"rotation":[[0,1,2],[3,4,5]],"matching":[[0,3],[1,4],[2,5]],"twists":[0,0,0]}
MobiusGraph graph_from_json(const nlohmann::json& j);

MobiusGraph load_graph_file(const std::string& path);

} // namespace homcount
