#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ivreach/interval.hpp"
#include "ivreach/system_model.hpp"

namespace ivreach {

// Benchmark and test systems, each packaged as a SystemModel constructor plus
// a catalog entry with documented defaults and an example reach problem.

// n-segment road, cell-transmission style. States are segment densities; the
// single input is the inflow demand at segment 0. Cooperative system, so a
// decomposition function is included.
SystemModel make_traffic(std::size_t segments, double v = 0.5, double w = 1.0 / 6.0,
                         double c = 40.0, double xbar = 320.0, double period = 30.0,
                         double beta = 0.75);

// K independent quadrotors, 12 states each: per block
//   [pn, pe, h, vn, ve, vh, phi, theta, psi, wphi, wtheta, wpsi].
// Inputs per block: [thrust, tau_phi, tau_theta, tau_psi]. thrust_bound is the
// largest |thrust| the contraction bounds assume; keep input boxes inside it.
SystemModel make_quadrotor_swarm(std::size_t quadrotors, double thrust_bound = 27.5,
                                 double mass = 1.4, double gravity = 9.81,
                                 double jx = 0.054, double jy = 0.054, double jz = 0.104);

// Swarm plus an artificial potential field: each quadrotor is repelled from
// its nearest neighbour (per axis, strength f_repel) and attracted to the
// origin (strength f_attract). Requires at least two quadrotors.
SystemModel make_quadrotor_apf(std::size_t quadrotors, double f_repel = 1.0,
                               double f_attract = 1.0, double thrust_bound = 27.5,
                               double mass = 1.4, double gravity = 9.81, double jx = 0.054,
                               double jy = 0.054, double jz = 0.104);

// Heat diffusion on the unit cube, grid*grid*grid nodes, 7-point stencil with
// spacing 1/(grid-1). Five faces are insulated (mirrored ghost nodes); the
// x=0 face exchanges heat with a zero-temperature environment through a
// Robin ghost-node term with coefficient exchange. Linear and cooperative.
SystemModel make_heat3d(std::size_t grid, double alpha = 1.0, double exchange = 1.0);

struct SingleTrackParams {
    double lwb = 2.5789;   // wheelbase
    double mass = 1093.3;
    double mu = 1.0489;    // friction coefficient
    double lf = 1.156;     // front axle to CoG
    double lr = 1.422;     // rear axle to CoG
    double hcg = 0.6137;   // CoG height
    double iz = 1791.6;    // yaw inertia
    double csf = 20.89;    // front cornering stiffness
    double csr = 20.89;    // rear cornering stiffness
    double gravity = 9.81;
    // Input saturation limits (steering angle/rate, velocity, acceleration).
    double delta_min = -1.066;
    double delta_max = 1.066;
    double vdelta_min = -0.4;
    double vdelta_max = 0.4;
    double v_min = -13.6;
    double v_max = 50.8;
    double v_switch = 7.319;
    double a_max = 11.5;
    // Operating box used by the contraction bounds (dynamic regime only).
    double op_v_lo = 5.0;
    double op_x3 = 0.2;    // |steering angle|
    double op_x6 = 1.0;    // |yaw rate|
    double op_x7 = 0.3;    // |slip angle|
};

// 7-state single-track vehicle: [x, y, steer, speed, heading, yaw rate, slip].
// Inputs: [steering rate, acceleration], both saturated. Below |speed| = 0.1
// the kinematic equations are used, otherwise the tyre-slip dynamics.
SystemModel make_single_track(const SingleTrackParams& p = {});

// Van der Pol oscillator, states (x, y). Contraction bounds hold on
// |x| <= op_x, |y| <= op_y.
SystemModel make_vdp(double mu = 1.0, double op_x = 2.5, double op_y = 3.0);

// Seven-state enzyme kinetics benchmark. Contraction bounds hold on [0, 5]^7.
SystemModel make_laub_loomis();

// Closed-loop 12-state quadrotor stabilizing to height 1. Body-frame
// velocities, Euler kinematics, PD feedback on thrust and attitude; no
// external inputs.
SystemModel make_arch_quadrotor(double mass = 1.4, double gravity = 9.81, double jx = 0.054,
                                double jy = 0.054, double jz = 0.104);

// Trivial test systems.
SystemModel make_zero(std::size_t dim = 2);        // f = 0
SystemModel make_scalar_decay();                   // xdot = -x + p
SystemModel make_scalar_linear(double a = 1.0);    // xdot = a x

// Where a default value comes from: printed in the source article, taken from
// a source it cites, or chosen here.
enum class Provenance { Benchmark, CitedSource, Chosen };

const char* provenance_label(Provenance p);

struct ParamSpec {
    std::string name;
    double value;
    Provenance provenance;
    std::string note;
};

using ParamMap = std::map<std::string, double>;

struct ModelCatalogEntry {
    std::string name;
    std::string summary;
    std::string dim_note;
    std::vector<std::string> methods;   // method names this model supports
    std::vector<ParamSpec> params;
    std::string operating_note;         // where the contraction bounds are valid
    // Size parameter scaled by benchmark sweeps; empty if the dimension is fixed.
    std::string size_param;
    std::function<SystemModel(const ParamMap&)> make;
    std::function<ReachProblem(const SystemModel&, const ParamMap&)> default_problem;
};

const std::vector<ModelCatalogEntry>& model_catalog();

// nullptr if the name is unknown.
const ModelCatalogEntry* find_model(const std::string& name);

// Merge overrides into the entry's defaults; unknown names throw
// std::invalid_argument listing the offender.
ParamMap resolve_params(const ModelCatalogEntry& entry, const ParamMap& overrides);

// Map a requested state dimension to the entry's size parameter value
// (segments, quadrotor count, grid edge). Throws if the model is not
// dimension-scalable.
double size_param_for_dim(const ModelCatalogEntry& entry, std::size_t dim);

}  // namespace ivreach
