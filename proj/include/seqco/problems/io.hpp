#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "seqco/problems/types.hpp"

namespace seqco::problems {

/// One instance as a single JSON line ({"kind","n","seed","payload":{...}},
/// matrices row-major). The exact byte output is deterministic.
std::string instance_to_json(const ProblemInstance& instance);
ProblemInstance instance_from_json(const std::string& line);

void write_instances_jsonl(const std::string& path,
                           const std::vector<ProblemInstance>& instances);
std::vector<ProblemInstance> read_instances_jsonl(const std::string& path);

}  // namespace seqco::problems
