#include "ivreach/rk4.hpp"

#include <cmath>
#include <stdexcept>

namespace ivreach {

StepPlan plan_steps(double t0, double t1, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("integrate: step size h must be positive");
    if (!(t0 < t1)) throw std::invalid_argument("integrate: t0 must be earlier than t1");
    const double span = t1 - t0;
    StepPlan plan;
    plan.full_steps = static_cast<std::size_t>(std::floor(span / h + 1e-9));
    const double remainder = span - static_cast<double>(plan.full_steps) * h;
    plan.has_remainder = remainder > 1e-9 * h;
    return plan;
}

IntegrationError::IntegrationError(std::size_t step_, std::size_t component_, double t_)
    : std::runtime_error("integration produced a non-finite value at step " +
                         std::to_string(step_) + ", component " + std::to_string(component_) +
                         ", t = " + std::to_string(t_)),
      step(step_), component(component_), t(t_) {}

void StageBuffers::resize(std::size_t n) {
    k0.resize(n); k1.resize(n); k2.resize(n); k3.resize(n);
    u1.resize(n); u2.resize(n);
}

void integrate_step(const SystemModel& model, double t, double h,
                    std::span<double> x, std::span<const double> p,
                    StageBuffers& b, int workers) {
    if (workers < 1) throw std::invalid_argument("integrate_step: workers must be >= 1");
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(model.dim);
    if (x.size() != model.dim) throw std::invalid_argument("integrate_step: state size mismatch");
    if (b.k0.size() < model.dim) throw std::invalid_argument("integrate_step: buffers not sized");

    const double h2 = 0.5 * h;
    const double h6 = h / 6.0;
    const std::span<const double> xc(x.data(), x.size());
    const std::span<const double> u1c(b.u1.data(), model.dim);
    const std::span<const double> u2c(b.u2.data(), model.dim);
    bool ok = true;

    // Mirrored by reference::integrate; keep the expressions identical so the
    // two paths agree bit-for-bit.
#pragma omp parallel num_threads(workers) if (workers > 1)
    {
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            b.k0[i] = model.rhs(i, t, xc, p);
            b.u1[i] = x[i] + h2 * b.k0[i];
        }
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            b.k1[i] = model.rhs(i, t + h2, u1c, p);
            b.u2[i] = x[i] + h2 * b.k1[i];
        }
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            b.k2[i] = model.rhs(i, t + h2, u2c, p);
            b.u1[i] = x[i] + h * b.k2[i];
        }
#pragma omp for schedule(static) reduction(&& : ok)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            b.k3[i] = model.rhs(i, t + h, u1c, p);
            x[i] = x[i] + h6 * (b.k0[i] + 2.0 * b.k1[i] + 2.0 * b.k2[i] + b.k3[i]);
            ok = ok && std::isfinite(x[i]);
        }
    }

    if (!ok) {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            if (!std::isfinite(x[i])) throw IntegrationError(0, static_cast<std::size_t>(i), t);
    }
}

void Rk4Engine::run(const SystemModel& model, std::span<const double> x0,
                    std::span<const double> p, double t0, double t1, double h,
                    std::size_t record_stride, int workers, const StepObserver& observe) {
    if (!model.rhs || model.dim == 0)
        throw std::invalid_argument("integrate: model has no dynamics");
    if (x0.size() != model.dim)
        throw std::invalid_argument("integrate: initial state dim " + std::to_string(x0.size()) +
                                    " does not match model dim " + std::to_string(model.dim));
    if (p.size() != model.input_dim)
        throw std::invalid_argument("integrate: input dim " + std::to_string(p.size()) +
                                    " does not match model input dim " + std::to_string(model.input_dim));
    if (workers < 1) throw std::invalid_argument("integrate: workers must be >= 1");

    const StepPlan plan = plan_steps(t0, t1, h);
    const std::size_t total = plan.total();
    buffers_.resize(model.dim);
    x_.assign(x0.begin(), x0.end());

    if (record_stride > 0 && observe) observe(0, t0, x_);

    for (std::size_t k = 0; k < total; ++k) {
        const double t = t0 + static_cast<double>(k) * h; // recomputed, never accumulated
        const double hk = (k + 1 == total) ? t1 - t : h;
        try {
            integrate_step(model, t, hk, x_, p, buffers_, workers);
        } catch (const IntegrationError& e) {
            throw IntegrationError(k, e.component, t);
        }
        if (!observe) continue;
        if (k + 1 == total) {
            observe(total, t1, x_);
        } else if (record_stride > 0 && (k + 1) % record_stride == 0) {
            observe(k + 1, t0 + static_cast<double>(k + 1) * h, x_);
        }
    }
}

void integrate(const IntegrationJob& job, int workers, const StepObserver& observe) {
    if (!job.model) throw std::invalid_argument("integrate: job has no model");
    Rk4Engine engine;
    engine.run(*job.model, job.x0, job.p, job.t0, job.t1, job.h,
               job.record_stride, workers, observe);
}

Trajectory integrate(const IntegrationJob& job, int workers) {
    Trajectory out;
    integrate(job, workers, [&](std::size_t, double t, std::span<const double> x) {
        out.times.push_back(t);
        out.states.emplace_back(x.begin(), x.end());
    });
    return out;
}

} // namespace ivreach
