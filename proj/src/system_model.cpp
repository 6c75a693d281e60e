#include "ivreach/system_model.hpp"

#include <cmath>
#include <stdexcept>

#include "ivreach/rng.hpp"

namespace ivreach {

void validate(const ReachProblem& problem) {
    const auto& m = problem.model;
    if (m.dim == 0 || !m.rhs)
        throw std::invalid_argument("problem: model has no dynamics");
    if (problem.initial.dim() != m.dim)
        throw std::invalid_argument("problem: initial box dim " + std::to_string(problem.initial.dim()) +
                                    " does not match model dim " + std::to_string(m.dim));
    if (m.input_dim == 0) {
        if (problem.inputs)
            throw std::invalid_argument("problem: model has no inputs but an input box was given");
    } else {
        if (!problem.inputs)
            throw std::invalid_argument("problem: model has " + std::to_string(m.input_dim) +
                                        " inputs but no input box was given");
        if (problem.inputs->dim() != m.input_dim)
            throw std::invalid_argument("problem: input box dim " + std::to_string(problem.inputs->dim()) +
                                        " does not match model input dim " + std::to_string(m.input_dim));
    }
    if (!(problem.t0 < problem.t1))
        throw std::invalid_argument("problem: t0 must be earlier than t1");
    if (!(problem.h > 0.0))
        throw std::invalid_argument("problem: step size h must be positive");
}

void eval_rhs_block(const SystemModel& model, std::size_t begin, std::size_t end,
                    double t, std::span<const double> x, std::span<const double> p,
                    std::span<double> out) {
    if (begin > end || end > model.dim)
        throw std::invalid_argument("eval_rhs_block: bad range [" + std::to_string(begin) +
                                    ", " + std::to_string(end) + ") for dim " + std::to_string(model.dim));
    if (out.size() < end - begin)
        throw std::invalid_argument("eval_rhs_block: output span too small");
    for (std::size_t i = begin; i < end; ++i)
        out[i - begin] = model.rhs(i, t, x, p);
}

EmbeddingState split_embedding(std::span<const double> packed) {
    if (packed.size() % 2 != 0)
        throw std::invalid_argument("split_embedding: packed size must be even");
    const std::size_t n = packed.size() / 2;
    return EmbeddingState{
        std::vector<double>(packed.begin(), packed.begin() + n),
        std::vector<double>(packed.begin() + n, packed.end()),
    };
}

SystemModel embed(const SystemModel& model) {
    if (!model.has_decomposition())
        throw std::invalid_argument("embed: model has no decomposition function");
    const std::size_t n = model.dim;
    const std::size_t ni = model.input_dim;
    SystemModel out;
    out.dim = 2 * n;
    out.input_dim = 2 * ni;
    out.input_affine = false;
    out.sparsity_note = "embedding of: " + model.sparsity_note;
    const DecompFn d = model.decomposition;
    out.rhs = [n, ni, d](std::size_t i, double t, std::span<const double> xx,
                         std::span<const double> pp) -> double {
        const auto x = xx.subspan(0, n);
        const auto xh = xx.subspan(n, n);
        const auto p = pp.subspan(0, ni);
        const auto ph = pp.subspan(ni, ni);
        if (i < n) return d(i, t, x, p, xh, ph);
        return d(i - n, t, xh, ph, x, p);
    };
    return out;
}

bool check_decomposition(const SystemModel& model,
                         const IntervalVector& x_box,
                         const std::optional<IntervalVector>& p_box,
                         double t0, double t1,
                         std::size_t samples, std::uint64_t seed) {
    if (!model.has_decomposition())
        throw std::invalid_argument("check_decomposition: model has no decomposition function");
    if (x_box.dim() != model.dim)
        throw std::invalid_argument("check_decomposition: box dim " + std::to_string(x_box.dim()) +
                                    " does not match model dim " + std::to_string(model.dim));
    const std::size_t n = model.dim;
    const std::size_t ni = model.input_dim;
    std::vector<double> x(n), p(ni);
    for (std::size_t s = 0; s < samples; ++s) {
        const double t = uniform_in(t0, t1, u01(seed, s, 0));
        for (std::size_t i = 0; i < n; ++i)
            x[i] = uniform_in(x_box.lower(i), x_box.upper(i), u01(seed, s, 1 + i));
        for (std::size_t j = 0; j < ni; ++j)
            p[j] = uniform_in(p_box->lower(j), p_box->upper(j), u01(seed, s, 1 + n + j));
        for (std::size_t i = 0; i < n; ++i) {
            const double f = model.rhs(i, t, x, p);
            const double dv = model.decomposition(i, t, x, p, x, p);
            if (std::abs(dv - f) > 1e-9 * (1.0 + std::abs(f))) return false;
        }
    }
    return true;
}

RhsFn growth_from_matrix(std::vector<std::vector<double>> C,
                         std::vector<std::vector<double>> B) {
    return [C = std::move(C), B = std::move(B)](std::size_t i, double /*t*/,
                                                std::span<const double> r,
                                                std::span<const double> w) -> double {
        double acc = 0.0;
        const auto& crow = C[i];
        for (std::size_t j = 0; j < crow.size(); ++j) acc += crow[j] * r[j];
        if (!B.empty()) {
            const auto& brow = B[i];
            for (std::size_t j = 0; j < brow.size(); ++j) acc += brow[j] * w[j];
        }
        return acc;
    };
}

} // namespace ivreach
