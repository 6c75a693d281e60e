#include "ivreach/driver.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <new>
#include <optional>
#include <stdexcept>

#include "ivreach/io.hpp"
#include "ivreach/rk4.hpp"

namespace ivreach {

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

ReachTube dispatch(const std::string& method, const ReachProblem& problem,
                   const MonteCarloSpec& mc, int workers) {
    if (method == "growth-bound") return growth_bound(problem, workers);
    if (method == "mixed-monotonicity") return mixed_monotonicity(problem, workers);
    if (method == "monte-carlo") return monte_carlo(problem, mc, workers);
    throw std::invalid_argument("unknown method: " + method);
}

}  // namespace

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    return std::max(1, omp_get_max_threads());
}

BuiltProblem build_problem(const RunConfig& cfg) {
    const ModelCatalogEntry* entry = find_model(cfg.model);
    if (!entry) throw std::invalid_argument("unknown model: " + cfg.model);
    SystemModel model = entry->make(cfg.params);  // cfg.params is fully resolved

    BuiltProblem built{
        ReachProblem{std::move(model), IntervalVector(cfg.initial_lower, cfg.initial_upper),
                     std::nullopt, cfg.t0, cfg.t1, cfg.h, cfg.tube_stride},
        MonteCarloSpec{cfg.epsilon, cfg.delta, cfg.seed, cfg.samples},
        cfg.method};
    if (built.problem.model.input_dim > 0)
        built.problem.inputs = IntervalVector(cfg.input_lower, cfg.input_upper);
    validate(built.problem);
    return built;
}

RunOutputs run_config(const RunConfig& cfg) {
    BuiltProblem built = build_problem(cfg);
    const int workers = resolve_workers(cfg.workers);
    RunOutputs out;
    out.tube = dispatch(built.method, built.problem, built.mc, workers);
    const auto parent = std::filesystem::path(cfg.output).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    out.tube_path = cfg.output + (cfg.format == "csv" ? ".csv" : ".json");
    out.report_path = cfg.output + ".report.json";
    write_text_file(out.tube_path, cfg.format == "csv" ? tube_to_csv(out.tube)
                                                       : tube_to_json(out.tube));
    write_text_file(out.report_path, report_to_json(out.tube.report));
    return out;
}

std::vector<BenchRow> bench(const RunConfig& cfg, const std::vector<std::size_t>& dims,
                            const std::vector<int>& workers_list, std::size_t reps) {
    if (dims.empty()) throw std::invalid_argument("bench: no dimensions given");
    if (workers_list.empty()) throw std::invalid_argument("bench: no worker counts given");
    if (reps == 0) throw std::invalid_argument("bench: repetitions must be positive");
    const ModelCatalogEntry* entry = find_model(cfg.model);
    if (!entry) throw std::invalid_argument("unknown model: " + cfg.model);

    std::vector<BenchRow> rows;
    for (std::size_t dim : dims) {
        // Rebuild the model at this size with the catalog's default boxes;
        // only t0/t1/h and the method settings come from the config.
        std::optional<ReachProblem> problem;
        std::string build_error;
        try {
            ParamMap params = cfg.params;
            params[entry->size_param] = size_param_for_dim(*entry, dim);
            SystemModel model = entry->make(params);
            problem = entry->default_problem(model, params);
            problem->t0 = cfg.t0;
            problem->t1 = cfg.t1;
            problem->h = cfg.h;
            problem->tube_stride = cfg.tube_stride;
            validate(*problem);
        } catch (const std::bad_alloc&) {
            build_error = "oom";
        } catch (const std::exception& e) {
            build_error = std::string("error: ") + e.what();
        }

        const std::size_t planned_steps =
            build_error.empty() ? plan_steps(problem->t0, problem->t1, problem->h).total()
                                : 0;

        for (int workers : workers_list) {
            BenchRow row;
            row.n = build_error.empty() ? problem->model.dim : dim;
            row.workers = resolve_workers(workers);
            row.steps = planned_steps;
            if (!build_error.empty()) {
                row.status = build_error;
                rows.push_back(std::move(row));
                continue;
            }
            std::vector<double> seconds;
            try {
                MonteCarloSpec mc{cfg.epsilon, cfg.delta, cfg.seed, cfg.samples};
                for (std::size_t r = 0; r < reps; ++r) {
                    const auto start = std::chrono::steady_clock::now();
                    ReachTube tube = dispatch(cfg.method, *problem, mc, row.workers);
                    const auto stop = std::chrono::steady_clock::now();
                    seconds.push_back(std::chrono::duration<double>(stop - start).count());
                    row.steps = tube.report.steps;
                }
                row.median_seconds = median(seconds);
            } catch (const std::bad_alloc&) {
                row.status = "oom";
            } catch (const std::exception& e) {
                row.status = std::string("error: ") + e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out = "n,workers,median_seconds,steps,status\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n) + "," + std::to_string(row.workers) + ",";
        if (row.status == "ok") {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6f", row.median_seconds);
            out += buf;
        }
        out += "," + std::to_string(row.steps) + ",";
        // Commas would break the row format; statuses carry error text.
        std::string status = row.status;
        std::replace(status.begin(), status.end(), ',', ';');
        out += status + "\n";
    }
    return out;
}

}  // namespace ivreach
