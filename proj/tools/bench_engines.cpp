// Compares the serial reference integrator with the OpenMP engine on the
// road-network model: wall time for each, speedup, and the largest absolute
// state difference at the final step. The engines evaluate identical
// expressions in identical order, so the difference must be exactly zero.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "ivreach/driver.hpp"
#include "ivreach/models.hpp"
#include "ivreach/rk4.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = 100000;
    std::size_t steps = 100;
    int workers = 0;  // 0 = all available
    if (argc > 1) n = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));
    if (argc > 2) steps = static_cast<std::size_t>(std::strtoull(argv[2], nullptr, 10));
    if (argc > 3) workers = std::atoi(argv[3]);

    const ivreach::SystemModel model = ivreach::make_traffic(n);
    const double h = 0.3;

    ivreach::IntegrationJob job;
    job.model = &model;
    job.x0.assign(n, 15.0);
    job.p.assign(model.input_dim, 5.0);
    job.t0 = 0.0;
    job.t1 = h * static_cast<double>(steps);
    job.h = h;

    const int resolved = ivreach::resolve_workers(workers);
    std::printf("model=traffic n=%zu steps=%zu workers=%d\n", n, steps, resolved);

    auto start = std::chrono::steady_clock::now();
    const ivreach::Trajectory serial = ivreach::reference::integrate(job);
    const double serial_s = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const ivreach::Trajectory parallel = ivreach::integrate(job, resolved);
    const double parallel_s = seconds_since(start);

    double max_diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d =
            std::fabs(serial.states.back()[i] - parallel.states.back()[i]);
        if (d > max_diff) max_diff = d;
    }

    std::printf("serial:   %.4f s\n", serial_s);
    std::printf("parallel: %.4f s\n", parallel_s);
    std::printf("speedup:  %.2fx\n", parallel_s > 0.0 ? serial_s / parallel_s : 0.0);
    std::printf("max|serial - parallel| = %.17g\n", max_diff);
    if (max_diff != 0.0) {
        std::fprintf(stderr, "error: engines disagree\n");
        return 1;
    }
    return 0;
}
