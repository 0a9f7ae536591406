#pragma once

#include <string>
#include <vector>

#include "hlc/census.hpp"
#include "hlc/composites.hpp"

namespace hlc {

// TOML link pool: [[link]] tables with name, optional family, code or braid
// ([strands, letters...]), orbits, chiral; entries without a diagram give
// crossings and components instead
std::vector<LinkPoolEntry> load_link_pool(const std::string& path);

// named diagram file (see read_diagram_file) as pool entries
std::vector<PoolEntry> load_pool(const std::string& path);

// [census], [budgets] and [groups] tables; missing keys keep their defaults
CensusConfig load_census_config(const std::string& path);

}  // namespace hlc
