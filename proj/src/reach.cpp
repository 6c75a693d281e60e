#include "ivreach/reach.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>

#include "ivreach/rk4.hpp"
#include "ivreach/rng.hpp"

namespace ivreach {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Times at which the engine reports states for the given stride.
std::vector<std::pair<std::size_t, double>> record_schedule(double t0, double t1,
                                                            double h, std::size_t stride) {
    const StepPlan plan = plan_steps(t0, t1, h);
    std::vector<std::pair<std::size_t, double>> slots;
    if (stride > 0) {
        slots.emplace_back(0, t0);
        for (std::size_t k = stride; k < plan.total(); k += stride)
            slots.emplace_back(k, t0 + static_cast<double>(k) * h);
    }
    slots.emplace_back(plan.total(), t1);
    return slots;
}

std::vector<double> center_or_empty(const std::optional<IntervalVector>& box) {
    return box ? center(*box) : std::vector<double>{};
}

std::vector<double> half_width_or_empty(const std::optional<IntervalVector>& box) {
    return box ? half_width(*box) : std::vector<double>{};
}

constexpr std::size_t bytes_per_job(std::size_t dim) {
    return Rk4Engine::vectors_per_job * dim * sizeof(double);
}

} // namespace

std::size_t sample_count(std::size_t n, double epsilon, double delta) {
    if (n == 0) throw std::invalid_argument("sample_count: n must be positive");
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::invalid_argument("sample_count: epsilon must be in (0, 1)");
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("sample_count: delta must be in (0, 1)");
    const double nn = 2.0 * static_cast<double>(n);
    return static_cast<std::size_t>(std::ceil(nn / epsilon * std::log(nn / delta)));
}

ReachTube growth_bound(const ReachProblem& problem, int workers) {
    validate(problem);
    if (workers < 1) throw std::invalid_argument("growth_bound: workers must be >= 1");
    const SystemModel& model = problem.model;
    if (!model.has_growth())
        throw std::invalid_argument("growth_bound: model has no deviation dynamics");
    if (!model.input_affine)
        throw std::invalid_argument("growth_bound: model is not input-affine");

    const auto t_setup = Clock::now();
    const std::size_t n = model.dim;
    const std::vector<double> c0 = center(problem.initial);
    const std::vector<double> r0 = half_width(problem.initial);
    const std::vector<double> pc = center_or_empty(problem.inputs);
    const std::vector<double> w = half_width_or_empty(problem.inputs);

    SystemModel deviation;
    deviation.dim = n;
    deviation.input_dim = model.input_dim;
    deviation.rhs = model.growth_rhs;

    const auto slots = record_schedule(problem.t0, problem.t1, problem.h, problem.tube_stride);

    ReachTube tube;
    tube.method = "growth-bound";
    tube.report.method = tube.method;
    tube.report.n = n;
    tube.report.workers = workers;
    tube.report.steps = plan_steps(problem.t0, problem.t1, problem.h).total();
    tube.report.peak_state_bytes = bytes_per_job(n);
    tube.report.phases.setup_s = seconds_since(t_setup);

    const auto t_int = Clock::now();
    std::vector<std::vector<double>> centers, radii;
    centers.reserve(slots.size());
    radii.reserve(slots.size());
    Rk4Engine engine;
    try {
        engine.run(model, c0, pc, problem.t0, problem.t1, problem.h, problem.tube_stride,
                   workers, [&](std::size_t, double, std::span<const double> x) {
                       centers.emplace_back(x.begin(), x.end());
                   });
    } catch (const IntegrationError& e) {
        throw std::runtime_error(std::string("growth-bound center integration: ") + e.what());
    }
    try {
        engine.run(deviation, r0, w, problem.t0, problem.t1, problem.h, problem.tube_stride,
                   workers, [&](std::size_t, double, std::span<const double> x) {
                       radii.emplace_back(x.begin(), x.end());
                   });
    } catch (const IntegrationError& e) {
        throw std::runtime_error(std::string("growth-bound radius integration: ") + e.what());
    }
    tube.report.phases.integration_s = seconds_since(t_int);

    const auto t_red = Clock::now();
    for (std::size_t s = 0; s < slots.size(); ++s) {
        std::vector<double>& r = radii[s];
        for (std::size_t i = 0; i < n; ++i) {
            if (r[i] < 0.0) {
                if (r[i] < -1e-12)
                    throw std::runtime_error(
                        "growth-bound: deviation went negative (" + std::to_string(r[i]) +
                        ") at component " + std::to_string(i) +
                        "; contraction matrix is invalid");
                r[i] = 0.0;
            }
        }
        tube.entries.push_back({slots[s].second, from_center_radius(centers[s], r)});
    }
    tube.report.phases.reduction_s = seconds_since(t_red);
    return tube;
}

ReachTube mixed_monotonicity(const ReachProblem& problem, int workers) {
    validate(problem);
    if (workers < 1) throw std::invalid_argument("mixed_monotonicity: workers must be >= 1");
    const SystemModel& model = problem.model;
    if (!model.has_decomposition())
        throw std::invalid_argument("mixed_monotonicity: model has no decomposition function");

    const auto t_setup = Clock::now();
    const std::size_t n = model.dim;
    const SystemModel embedded = embed(model);

    std::vector<double> x0(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        x0[i] = problem.initial.lower(i);
        x0[n + i] = problem.initial.upper(i);
    }
    std::vector<double> p(2 * model.input_dim);
    if (problem.inputs) {
        for (std::size_t j = 0; j < model.input_dim; ++j) {
            p[j] = problem.inputs->lower(j);
            p[model.input_dim + j] = problem.inputs->upper(j);
        }
    }

    ReachTube tube;
    tube.method = "mixed-monotonicity";
    tube.report.method = tube.method;
    tube.report.n = n;
    tube.report.workers = workers;
    tube.report.steps = plan_steps(problem.t0, problem.t1, problem.h).total();
    tube.report.peak_state_bytes = bytes_per_job(2 * n);
    tube.report.phases.setup_s = seconds_since(t_setup);

    const auto t_int = Clock::now();
    double reduction_s = 0.0;
    Rk4Engine engine;
    try {
        engine.run(embedded, x0, p, problem.t0, problem.t1, problem.h, problem.tube_stride,
                   workers, [&](std::size_t step, double t, std::span<const double> xx) {
                       const auto t_box = Clock::now();
                       std::vector<double> lo(xx.begin(), xx.begin() + n);
                       std::vector<double> hi(xx.begin() + n, xx.end());
                       for (std::size_t i = 0; i < n; ++i)
                           if (lo[i] > hi[i])
                               throw std::runtime_error(
                                   "mixed-monotonicity: embedding order violated at step " +
                                   std::to_string(step) + ", t = " + std::to_string(t) +
                                   ", component " + std::to_string(i));
                       tube.entries.push_back({t, IntervalVector(std::move(lo), std::move(hi))});
                       reduction_s += seconds_since(t_box);
                   });
    } catch (const IntegrationError& e) {
        throw std::runtime_error(std::string("mixed-monotonicity embedding integration: ") + e.what());
    }
    tube.report.phases.integration_s = seconds_since(t_int) - reduction_s;
    tube.report.phases.reduction_s = reduction_s;
    return tube;
}

namespace {

// Draw sample s of (x0, p) for the problem; axes are indexed so that every
// (seed, sample, axis) triple maps to one fixed variate.
void draw_sample(const ReachProblem& problem, std::uint64_t seed, std::uint64_t s,
                 std::vector<double>& x0, std::vector<double>& p) {
    const std::size_t n = problem.model.dim;
    for (std::size_t i = 0; i < n; ++i)
        x0[i] = uniform_in(problem.initial.lower(i), problem.initial.upper(i),
                           u01(seed, s, i));
    if (problem.inputs)
        for (std::size_t j = 0; j < problem.model.input_dim; ++j)
            p[j] = uniform_in(problem.inputs->lower(j), problem.inputs->upper(j),
                              u01(seed, s, n + j));
}

struct HullAccumulator {
    std::vector<std::vector<double>> mins, maxs; // one pair of vectors per slot
    bool touched = false;

    void init(std::size_t slots, std::size_t n) {
        mins.assign(slots, std::vector<double>(n, std::numeric_limits<double>::infinity()));
        maxs.assign(slots, std::vector<double>(n, -std::numeric_limits<double>::infinity()));
    }
    void fold(std::size_t slot, std::span<const double> x) {
        touched = true;
        auto& lo = mins[slot];
        auto& hi = maxs[slot];
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] < lo[i]) lo[i] = x[i];
            if (x[i] > hi[i]) hi[i] = x[i];
        }
    }
    // Exact for min/max, so merge order cannot change the result.
    void merge(const HullAccumulator& o) {
        if (!o.touched) return;
        touched = true;
        for (std::size_t s = 0; s < mins.size(); ++s) {
            for (std::size_t i = 0; i < mins[s].size(); ++i) {
                if (o.mins[s][i] < mins[s][i]) mins[s][i] = o.mins[s][i];
                if (o.maxs[s][i] > maxs[s][i]) maxs[s][i] = o.maxs[s][i];
            }
        }
    }
};

} // namespace

ReachTube monte_carlo(const ReachProblem& problem, const MonteCarloSpec& spec,
                      int workers) {
    validate(problem);
    if (workers < 1) throw std::invalid_argument("monte_carlo: workers must be >= 1");

    const auto t_setup = Clock::now();
    const SystemModel& model = problem.model;
    const std::size_t n = model.dim;
    const std::size_t m = spec.samples_override > 0
                              ? spec.samples_override
                              : sample_count(n, spec.epsilon, spec.delta);
    const auto slots = record_schedule(problem.t0, problem.t1, problem.h, problem.tube_stride);
    const std::size_t n_slots = slots.size();

    // m >= workers: parallelize across samples; otherwise run samples
    // sequentially and let the engine parallelize across components.
    const bool across_samples = m >= static_cast<std::size_t>(workers);
    const int outer = across_samples ? workers : 1;
    const int inner = across_samples ? 1 : workers;

    ReachTube tube;
    tube.method = "monte-carlo";
    tube.report.method = tube.method;
    tube.report.n = n;
    tube.report.m = m;
    tube.report.workers = workers;
    tube.report.steps = plan_steps(problem.t0, problem.t1, problem.h).total();
    tube.report.peak_state_bytes =
        static_cast<std::size_t>(outer) * (bytes_per_job(n) + 2 * n_slots * n * sizeof(double)) +
        2 * n_slots * n * sizeof(double);
    tube.report.phases.setup_s = seconds_since(t_setup);

    const auto t_int = Clock::now();
    std::vector<HullAccumulator> acc(outer);
    for (auto& a : acc) a.init(n_slots, n);

    std::atomic<bool> failed{false};
    std::string first_error;

#pragma omp parallel num_threads(outer) if (outer > 1)
    {
        const int tid = omp_get_thread_num();
        Rk4Engine engine;
        std::vector<double> x0(n), p(model.input_dim);

#pragma omp for schedule(static)
        for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(m); ++s) {
            if (failed.load(std::memory_order_relaxed)) continue;
            draw_sample(problem, spec.seed, static_cast<std::uint64_t>(s), x0, p);
            std::size_t slot = 0;
            try {
                engine.run(model, x0, p, problem.t0, problem.t1, problem.h,
                           problem.tube_stride, inner,
                           [&](std::size_t, double, std::span<const double> x) {
                               acc[tid].fold(slot++, x);
                           });
            } catch (const std::exception& e) {
#pragma omp critical(ivreach_mc_error)
                {
                    if (!failed.exchange(true))
                        first_error = "monte-carlo sample " + std::to_string(s) +
                                      " integration: " + e.what();
                }
            }
        }
    }
    if (failed.load()) throw std::runtime_error(first_error);
    tube.report.phases.integration_s = seconds_since(t_int);

    const auto t_red = Clock::now();
    HullAccumulator total = std::move(acc[0]);
    for (int t = 1; t < outer; ++t) total.merge(acc[t]);
    for (std::size_t s = 0; s < n_slots; ++s)
        tube.entries.push_back(
            {slots[s].second, IntervalVector(std::move(total.mins[s]), std::move(total.maxs[s]))});
    tube.report.phases.reduction_s = seconds_since(t_red);
    return tube;
}

double coverage_estimate(const ReachProblem& problem, const MonteCarloSpec& /*spec*/,
                         const ReachTube& tube, std::size_t fresh_samples,
                         std::uint64_t seed) {
    validate(problem);
    if (tube.entries.empty())
        throw std::invalid_argument("coverage_estimate: tube has no entries");
    if (fresh_samples == 0)
        throw std::invalid_argument("coverage_estimate: fresh_samples must be positive");

    const SystemModel& model = problem.model;
    const std::size_t n = model.dim;
    const IntervalVector& final_box = tube.entries.back().box;
    if (final_box.dim() != n)
        throw std::invalid_argument("coverage_estimate: tube dimension mismatch");

    const int threads = omp_get_max_threads();
    std::size_t outside = 0;

#pragma omp parallel num_threads(threads) if (threads > 1) reduction(+ : outside)
    {
        Rk4Engine engine;
        std::vector<double> x0(n), p(model.input_dim), xf(n);
#pragma omp for schedule(static)
        for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(fresh_samples); ++s) {
            draw_sample(problem, seed, static_cast<std::uint64_t>(s), x0, p);
            engine.run(model, x0, p, problem.t0, problem.t1, problem.h, 0, 1,
                       [&](std::size_t, double, std::span<const double> x) {
                           std::copy(x.begin(), x.end(), xf.begin());
                       });
            if (!contains(final_box, xf)) ++outside;
        }
    }
    return static_cast<double>(outside) / static_cast<double>(fresh_samples);
}

} // namespace ivreach
