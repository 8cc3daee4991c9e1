#pragma once

#include <string>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci::testing {

struct NamedGraph {
    std::string name;
    Graph g;
};

// Generated once, shared between the unit and acceptance binaries.
const std::vector<NamedGraph>& base_corpus();

// Connected strongly regular members plus the 5-cycle; every edge of these
// graphs goes through the certified matching route in tests.
const std::vector<NamedGraph>& srg_corpus();

} // namespace ricci::testing
