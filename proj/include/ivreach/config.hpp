#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ivreach/models.hpp"

namespace ivreach {

// One reachability run, as described by a config file. Boxes are stored
// fully resolved to the model's dimensions; parse_config fills anything the
// file omits from the model's catalog defaults.
struct RunConfig {
    std::string model;
    ParamMap params;
    std::string method;
    std::vector<double> initial_lower, initial_upper;
    std::vector<double> input_lower, input_upper;  // empty iff the model has no inputs
    double t0 = 0.0, t1 = 0.0, h = 0.0;
    std::size_t tube_stride = 0;  // 0 = final set only
    int workers = 0;              // 0 = all hardware threads
    // Monte Carlo settings; ignored by the other methods.
    double epsilon = 0.05;
    double delta = 0.01;
    std::uint64_t seed = 1;
    std::size_t samples = 0;  // 0 = derive from (epsilon, delta)
    std::string output = "ivreach-out";  // path stem for the result files
    std::string format = "json";         // tube file format: json | csv

    bool operator==(const RunConfig&) const = default;
};

// Line-oriented `key = value` text; `#` starts a comment; vector values are
// comma-separated and scalars broadcast across the box dimension. Unknown
// keys, malformed values, unknown models/methods/parameters, and box
// dimension mismatches all throw std::invalid_argument with the offending
// line number.
RunConfig parse_config(const std::string& text);

RunConfig parse_config_file(const std::string& path);

// Emits every field explicitly; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& cfg);

}  // namespace ivreach
