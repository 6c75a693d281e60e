#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ivreach/interval.hpp"

namespace ivreach {

// Component evaluator for dx/dt = f(t, x, p): value of f_i at (t, x, p).
// Evaluators must be pure and reentrant; the integrator calls them
// concurrently for disjoint component ranges.
using RhsFn = std::function<double(std::size_t i, double t,
                                   std::span<const double> x,
                                   std::span<const double> p)>;

// Decomposition evaluator d_i(t, x, p, xh, ph) with d(t,x,p,x,p) = f(t,x,p).
using DecompFn = std::function<double(std::size_t i, double t,
                                      std::span<const double> x,
                                      std::span<const double> p,
                                      std::span<const double> xh,
                                      std::span<const double> ph)>;

struct SystemModel {
    std::size_t dim = 0;
    std::size_t input_dim = 0;
    RhsFn rhs;
    // Optional: g_i(t, r, w) for the deviation dynamics dr/dt = C r + coupling * w,
    // where w is the input half-width vector. Present iff the model supports
    // the growth-bound method.
    RhsFn growth_rhs;
    // Optional: present iff the model supports mixed monotonicity.
    DecompFn decomposition;
    bool input_affine = false;
    std::string sparsity_note;

    bool has_growth() const { return static_cast<bool>(growth_rhs); }
    bool has_decomposition() const { return static_cast<bool>(decomposition); }
};

// One reachability question: bound all trajectories of the model that start
// in `initial` under constant inputs drawn from `inputs`, over [t0, t1].
struct ReachProblem {
    SystemModel model;
    IntervalVector initial;
    std::optional<IntervalVector> inputs; // absent iff model.input_dim == 0
    double t0 = 0.0;
    double t1 = 0.0;
    double h = 0.0;
    std::size_t tube_stride = 0; // 0 = record the final set only
};

// Throws std::invalid_argument naming the offending field/dimensions.
void validate(const ReachProblem& problem);

// Writes f_i(t, x, p) for i in [begin, end) into out[i - begin].
void eval_rhs_block(const SystemModel& model, std::size_t begin, std::size_t end,
                    double t, std::span<const double> x, std::span<const double> p,
                    std::span<double> out);

// Lower/upper halves of an embedding-system state vector of dimension 2n.
struct EmbeddingState {
    std::vector<double> x;
    std::vector<double> x_hat;
};

EmbeddingState split_embedding(std::span<const double> packed);

// Embedding system of dimension 2n with inputs (p, ph) packed as 2*input_dim:
//   component i < n:   d_i(t, x, p, xh, ph)
//   component i >= n:  d_{i-n}(t, xh, ph, x, p)
// Requires model.has_decomposition().
SystemModel embed(const SystemModel& model);

// Samples (t, x, p) tuples from the given ranges and checks
// |d(t,x,p,x,p) - f(t,x,p)| <= 1e-9 * (1 + |f|) on every component.
bool check_decomposition(const SystemModel& model,
                         const IntervalVector& x_box,
                         const std::optional<IntervalVector>& p_box,
                         double t0, double t1,
                         std::size_t samples, std::uint64_t seed);

// Dense deviation dynamics g(r, w) = C r + B w for small models:
// C is dim x dim, B is dim x input_dim (pass empty for no inputs).
RhsFn growth_from_matrix(std::vector<std::vector<double>> C,
                         std::vector<std::vector<double>> B);

} // namespace ivreach
