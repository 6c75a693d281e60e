#include "ivreach/rk4.hpp"

#include <cmath>

namespace ivreach::reference {

// Deliberately independent of Rk4Engine: same tableau, plain loops, no OpenMP.
// Stage expressions are written exactly as in integrate_step so that both
// paths round identically.
void integrate(const IntegrationJob& job, const StepObserver& observe) {
    if (!job.model) throw std::invalid_argument("integrate: job has no model");
    const SystemModel& model = *job.model;
    if (job.x0.size() != model.dim)
        throw std::invalid_argument("integrate: initial state dim mismatch");
    if (job.p.size() != model.input_dim)
        throw std::invalid_argument("integrate: input dim mismatch");

    const StepPlan plan = plan_steps(job.t0, job.t1, job.h);
    const std::size_t total = plan.total();
    const std::size_t n = model.dim;

    std::vector<double> x(job.x0);
    std::vector<double> k0(n), k1(n), k2(n), k3(n), u1(n), u2(n);

    if (job.record_stride > 0 && observe) observe(0, job.t0, x);

    for (std::size_t k = 0; k < total; ++k) {
        const double t = job.t0 + static_cast<double>(k) * job.h;
        const double hk = (k + 1 == total) ? job.t1 - t : job.h;
        const double h2 = 0.5 * hk;
        const double h6 = hk / 6.0;

        for (std::size_t i = 0; i < n; ++i) {
            k0[i] = model.rhs(i, t, x, job.p);
            u1[i] = x[i] + h2 * k0[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            k1[i] = model.rhs(i, t + h2, u1, job.p);
            u2[i] = x[i] + h2 * k1[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            k2[i] = model.rhs(i, t + h2, u2, job.p);
            u1[i] = x[i] + hk * k2[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            k3[i] = model.rhs(i, t + hk, u1, job.p);
            x[i] = x[i] + h6 * (k0[i] + 2.0 * k1[i] + 2.0 * k2[i] + k3[i]);
            if (!std::isfinite(x[i])) throw IntegrationError(k, i, t);
        }

        if (!observe) continue;
        if (k + 1 == total) {
            observe(total, job.t1, x);
        } else if (job.record_stride > 0 && (k + 1) % job.record_stride == 0) {
            observe(k + 1, job.t0 + static_cast<double>(k + 1) * job.h, x);
        }
    }
}

Trajectory integrate(const IntegrationJob& job) {
    Trajectory out;
    integrate(job, [&](std::size_t, double t, std::span<const double> x) {
        out.times.push_back(t);
        out.states.emplace_back(x.begin(), x.end());
    });
    return out;
}

} // namespace ivreach::reference
