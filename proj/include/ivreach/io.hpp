#pragma once

#include <string>

#include "ivreach/reach.hpp"
#include "ivreach/rk4.hpp"

namespace ivreach {

// Tube as JSON: {"method", "times", "boxes": [{"lower", "upper"}, ...], "report"}.
std::string tube_to_json(const ReachTube& tube);
ReachTube tube_from_json(const std::string& text);

// Tube as CSV: header `t,lower0,upper0,lower1,upper1,...`, one row per entry,
// numbers printed with round-trip precision. Identical tubes give identical
// bytes, so worker-count determinism can be checked by file comparison.
std::string tube_to_csv(const ReachTube& tube);

std::string report_to_json(const RunReport& report);

// Trajectory as CSV (`t,x0,x1,...`) and JSON ({"times", "states"}).
std::string trajectory_to_csv(const Trajectory& traj);
std::string trajectory_to_json(const Trajectory& traj);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace ivreach
