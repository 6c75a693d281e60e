#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ivreach/interval.hpp"
#include "ivreach/system_model.hpp"

namespace ivreach {

struct PhaseTimes {
    double setup_s = 0.0;
    double integration_s = 0.0;
    double reduction_s = 0.0;
};

// Per-run accounting. peak_state_bytes is the analytic estimate of
// integration-state memory (engine vectors plus, for Monte Carlo, the
// running min/max accumulators); recorded tube output is not included.
struct RunReport {
    std::string method;
    std::size_t n = 0;       // problem dimension
    std::size_t m = 0;       // Monte Carlo sample count, 0 for other methods
    int workers = 1;
    std::size_t steps = 0;   // full steps + 1 if a shortened remainder step exists
    std::size_t peak_state_bytes = 0;
    PhaseTimes phases;
};

struct TubeEntry {
    double t;
    IntervalVector box;
};

struct ReachTube {
    std::string method;
    std::vector<TubeEntry> entries; // strictly increasing times, last at t1
    RunReport report;
};

// Over-approximation for input-affine models with deviation dynamics:
// integrates the center trajectory under the center input and the
// componentwise deviation radius under the input half-widths, then forms
// center +/- radius boxes.  Radius values in [-1e-12, 0) are clamped to 0;
// anything more negative is an error.
ReachTube growth_bound(const ReachProblem& problem, int workers);

// Over-approximation via the 2n-dimensional embedding system: lower and
// upper corner trajectories evaluated through the decomposition function.
// Errors if the order x(t) <= xh(t) is violated at a recorded step.
ReachTube mixed_monotonicity(const ReachProblem& problem, int workers);

struct MonteCarloSpec {
    double epsilon = 0.05;
    double delta = 0.01;
    std::uint64_t seed = 1;
    std::size_t samples_override = 0; // 0 = use sample_count(n, epsilon, delta)
};

// ceil((2n/epsilon) * ln(2n/delta)); natural logarithm.
std::size_t sample_count(std::size_t n, double epsilon, double delta);

// Probabilistic under-approximation: elementwise min/max hull over m sampled
// trajectories.  With m = sample_count(n, epsilon, delta), the measure of
// trajectories ending outside the final box is at most epsilon with
// probability 1 - delta.  Sampling is counter-based per (seed, sample), so
// the result is bit-identical for a fixed seed regardless of worker count.
ReachTube monte_carlo(const ReachProblem& problem, const MonteCarloSpec& spec,
                      int workers);

// Fraction of fresh_samples new trajectories whose final state falls outside
// the tube's final box.  Uses its own seed; draws are disjoint from any
// tube's sampling when the seeds differ.
double coverage_estimate(const ReachProblem& problem, const MonteCarloSpec& spec,
                         const ReachTube& tube, std::size_t fresh_samples,
                         std::uint64_t seed);

} // namespace ivreach
