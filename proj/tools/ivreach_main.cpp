// Command-line front end: run one reachability job from a config file,
// sweep dimensions/workers as a benchmark, or list the model catalog.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ivreach/config.hpp"
#include "ivreach/driver.hpp"
#include "ivreach/io.hpp"

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text, const char* what) {
    std::vector<std::size_t> out;
    for (const auto& item : split_list(text)) {
        try {
            std::size_t pos = 0;
            const unsigned long long v = std::stoull(item, &pos);
            if (pos != item.size() || v == 0) throw std::invalid_argument(item);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("invalid ") + what + " value '" +
                                        item + "'");
        }
    }
    if (out.empty())
        throw std::invalid_argument(std::string("empty ") + what + " list");
    return out;
}

int run_command(const std::string& config_path, int workers_override,
                const std::string& output_override) {
    ivreach::RunConfig cfg = ivreach::parse_config_file(config_path);
    if (workers_override >= 0) cfg.workers = workers_override;
    if (!output_override.empty()) cfg.output = output_override;
    const ivreach::RunOutputs out = ivreach::run_config(cfg);
    const auto& r = out.tube.report;
    std::printf("%s: n=%zu steps=%zu workers=%d %.3fs\n", r.method.c_str(), r.n, r.steps,
                r.workers,
                r.phases.setup_s + r.phases.integration_s + r.phases.reduction_s);
    std::printf("wrote %s\n", out.tube_path.c_str());
    std::printf("wrote %s\n", out.report_path.c_str());
    return 0;
}

int bench_command(const std::string& config_path, const std::string& dims_text,
                  const std::string& workers_text, std::size_t reps,
                  const std::string& out_path) {
    ivreach::RunConfig cfg = ivreach::parse_config_file(config_path);
    const auto dims = parse_size_list(dims_text, "dimension");
    std::vector<int> workers;
    for (std::size_t w : parse_size_list(workers_text, "workers"))
        workers.push_back(static_cast<int>(w));
    const auto rows = ivreach::bench(cfg, dims, workers, reps);
    const std::string csv = ivreach::bench_csv(rows);
    if (out_path.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        ivreach::write_text_file(out_path, csv);
        std::printf("wrote %s\n", out_path.c_str());
    }
    return 0;
}

int list_models_command() {
    for (const auto& entry : ivreach::model_catalog()) {
        std::printf("%s\n", entry.name.c_str());
        std::printf("  %s\n", entry.summary.c_str());
        std::printf("  dimension: %s\n", entry.dim_note.c_str());
        std::string methods;
        for (std::size_t i = 0; i < entry.methods.size(); ++i) {
            if (i) methods += ", ";
            methods += entry.methods[i];
        }
        std::printf("  methods: %s\n", methods.c_str());
        if (!entry.params.empty()) {
            std::printf("  parameters:\n");
            for (const auto& p : entry.params) {
                std::printf("    %-14s default %-12g [%s]%s%s\n", p.name.c_str(), p.value,
                            ivreach::provenance_label(p.provenance),
                            p.note.empty() ? "" : " ", p.note.c_str());
            }
        }
        std::printf("  validity: %s\n\n", entry.operating_note.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval reachability over fixed-step parallel simulation"};
    app.require_subcommand(1);

    std::string run_config_path;
    int run_workers = -1;
    std::string run_output;
    auto* run = app.add_subcommand("run", "execute one config file");
    run->add_option("config", run_config_path, "config file path")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--workers", run_workers, "override the config's worker count");
    run->add_option("--output", run_output, "override the config's output path stem");

    std::string bench_config_path, bench_dims, bench_workers = "1", bench_out;
    std::size_t bench_reps = 3;
    auto* bn = app.add_subcommand("bench", "dimension/worker scaling sweep");
    bn->add_option("config", bench_config_path, "config file path")
        ->required()
        ->check(CLI::ExistingFile);
    bn->add_option("--dims", bench_dims, "comma-separated state dimensions")->required();
    bn->add_option("--workers", bench_workers, "comma-separated worker counts");
    bn->add_option("--reps", bench_reps, "repetitions per cell (median is reported)");
    bn->add_option("--out", bench_out, "write the CSV here instead of stdout");

    auto* lm = app.add_subcommand("list-models", "print the model catalog");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_command(run_config_path, run_workers, run_output);
        if (bn->parsed())
            return bench_command(bench_config_path, bench_dims, bench_workers, bench_reps,
                                 bench_out);
        if (lm->parsed()) return list_models_command();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
