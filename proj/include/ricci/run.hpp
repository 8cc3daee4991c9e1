#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ricci/rational.hpp"

namespace ricci::cli {

enum class Command { Curvature, Decompose, Matching, Spectrum, Verify, Scan, Generate };
enum class Format { Json, Csv, Text };

struct RunConfig {
    Command command = Command::Curvature;
    std::string graph_file;  // exactly one of graph_file / generator, except
    std::string generator;   // verify in random-corpus mode
    std::optional<std::pair<int, int>> edge;
    bool all_edges = false;
    std::optional<Rational> eps; // curvature at fixed laziness instead of the limit
    Format format = Format::Json;
    bool certify = false;
    std::vector<long long> paley; // scan targets
    int random_count = 0;         // verify: number of random graphs; 0 = single graph
    int random_max_n = 12;
    std::uint64_t seed = 1;
};

// Executes one configuration; report on out, diagnostics on err. Returns the
// process exit code: 0 success, 1 mathematical inconsistency, 2 usage or
// input error. Output is byte-identical across runs of the same config.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// argv-style front end (argv[0] excluded); parses into a RunConfig.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ricci::cli
