#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivreach/system_model.hpp"

namespace ivreach {

// Fixed-step classical RK4 over [t0, t1].  Stage arithmetic is evaluated
// per component, so results are bit-identical for every worker count.
struct IntegrationJob {
    const SystemModel* model = nullptr;
    std::vector<double> x0;
    std::vector<double> p;          // constant input vector, size model->input_dim
    double t0 = 0.0;
    double t1 = 0.0;
    double h = 0.0;
    std::size_t record_stride = 0;  // 0 = record only the final state
};

struct Trajectory {
    std::vector<double> times;                 // strictly increasing, last == t1
    std::vector<std::vector<double>> states;
};

// Step schedule: full_steps of size h plus an optional shortened remainder
// step that lands exactly on t1.
struct StepPlan {
    std::size_t full_steps = 0;
    bool has_remainder = false;
    std::size_t total() const { return full_steps + (has_remainder ? 1 : 0); }
};

StepPlan plan_steps(double t0, double t1, double h);

class IntegrationError : public std::runtime_error {
public:
    IntegrationError(std::size_t step, std::size_t component, double t);
    std::size_t step;
    std::size_t component;
    double t;
};

struct StageBuffers {
    std::vector<double> k0, k1, k2, k3, u1, u2;
    void resize(std::size_t n);
};

// One RK4 step of size h, in place.  Exactly four barrier-synchronized
// parallel sections; each stage writes only component i and reads the
// previous stage's full vector.  Throws IntegrationError (step = 0) if a
// non-finite value appears in the updated state.
void integrate_step(const SystemModel& model, double t, double h,
                    std::span<double> x, std::span<const double> p,
                    StageBuffers& buffers, int workers);

// Called for each recorded state; `step` is the number of completed steps.
using StepObserver =
    std::function<void(std::size_t step, double t, std::span<const double> x)>;

// Reusable engine: buffers are kept across run() calls so repeated
// integrations of the same dimension do not reallocate.
class Rk4Engine {
public:
    // Records the initial state (when record_stride > 0), every
    // record_stride-th step, and always the final state at exactly t1.
    void run(const SystemModel& model, std::span<const double> x0,
             std::span<const double> p, double t0, double t1, double h,
             std::size_t record_stride, int workers, const StepObserver& observe);

    // State vectors held by one engine instance, for memory accounting.
    static constexpr std::size_t vectors_per_job = 7;

private:
    StageBuffers buffers_;
    std::vector<double> x_;
};

Trajectory integrate(const IntegrationJob& job, int workers);
void integrate(const IntegrationJob& job, int workers, const StepObserver& observe);

namespace reference {
// Plain single-threaded RK4 kept as an independent implementation path.
// Tests compare it bit-for-bit against the parallel engine, and the
// dense-sampling soundness checks use it as their trajectory oracle.
Trajectory integrate(const IntegrationJob& job);
void integrate(const IntegrationJob& job, const StepObserver& observe);
} // namespace reference

} // namespace ivreach
