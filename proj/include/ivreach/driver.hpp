#pragma once

#include <string>
#include <vector>

#include "ivreach/config.hpp"
#include "ivreach/reach.hpp"

namespace ivreach {

// Materialize the model and reach problem a config describes. Throws
// std::invalid_argument on inconsistencies the parser cannot see.
struct BuiltProblem {
    ReachProblem problem;  // owns its SystemModel copy
    MonteCarloSpec mc;
    std::string method;
};

BuiltProblem build_problem(const RunConfig& cfg);

// 0 means all hardware threads.
int resolve_workers(int requested);

struct RunOutputs {
    ReachTube tube;
    std::string tube_path;
    std::string report_path;
};

// Executes cfg's method and writes the tube (cfg.format) and the report
// (JSON) side by side under the cfg.output path stem.
RunOutputs run_config(const RunConfig& cfg);

struct BenchRow {
    std::size_t n = 0;
    int workers = 1;
    double median_seconds = 0.0;  // meaningless unless status == "ok"
    std::size_t steps = 0;
    std::string status = "ok";
};

// Dimension/worker sweep: for each requested dimension the model is rebuilt
// through its catalog size parameter with the catalog's default boxes, and
// cfg supplies method, t0/t1/h, and Monte Carlo settings. Repetitions are
// timed sequentially and the median is reported. Failures (including
// out-of-memory) become rows with a status instead of aborting the sweep.
std::vector<BenchRow> bench(const RunConfig& cfg, const std::vector<std::size_t>& dims,
                            const std::vector<int>& workers_list, std::size_t reps);

// CSV: `n,workers,median_seconds,steps,status` with one row per (n, workers).
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace ivreach
