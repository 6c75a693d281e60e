#include "ivreach/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ivreach {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

double sq(double a) { return a * a; }

int sgn(double a) { return (a > 0.0) - (a < 0.0); }

// Reuse the plain RHS as a decomposition for cooperative models, where
// d(t, x, p, xh, ph) = f(t, x, p) is a valid decomposition because every
// off-diagonal and input dependency is nondecreasing.
DecompFn cooperative(const RhsFn& rhs) {
    return [rhs](std::size_t i, double t, std::span<const double> x,
                 std::span<const double> p, std::span<const double>,
                 std::span<const double>) { return rhs(i, t, x, p); };
}

IntervalVector box_fill(std::size_t n, double lo, double hi) {
    return IntervalVector(std::vector<double>(n, lo), std::vector<double>(n, hi));
}

IntervalVector box_tile(std::size_t blocks, const std::vector<double>& lo,
                        const std::vector<double>& hi) {
    std::vector<double> l, u;
    l.reserve(blocks * lo.size());
    u.reserve(blocks * hi.size());
    for (std::size_t b = 0; b < blocks; ++b) {
        l.insert(l.end(), lo.begin(), lo.end());
        u.insert(u.end(), hi.begin(), hi.end());
    }
    return IntervalVector(std::move(l), std::move(u));
}

}  // namespace

SystemModel make_traffic(std::size_t segments, double v, double w, double c, double xbar,
                         double period, double beta) {
    require(segments >= 3, "traffic model needs at least 3 segments");
    require(v > 0 && w > 0 && c > 0 && xbar > 0 && period > 0,
            "traffic parameters must be positive");
    require(beta > 0 && beta <= 1, "traffic beta must lie in (0, 1]");

    const std::size_t n = segments;
    const double inv_t = 1.0 / period;

    // Flow from a segment into its successor: capacity, free-flow demand, or
    // congestion-limited supply of the receiving segment, whichever binds.
    auto flux = [v, w, c, xbar, beta](double from, double into) {
        return std::min(c, std::min(v * from, w * (xbar - into) / beta));
    };

    SystemModel m;
    m.dim = n;
    m.input_dim = 1;
    m.input_affine = true;
    m.sparsity_note = "tridiagonal";
    m.rhs = [n, inv_t, v, c, beta, flux](std::size_t i, double, std::span<const double> x,
                                         std::span<const double> p) {
        const double in = (i == 0) ? beta * p[0] : beta * flux(x[i - 1], x[i]);
        const double out =
            (i + 1 == n) ? std::min(c, v * x[i]) : flux(x[i], x[i + 1]);
        return inv_t * (in - out);
    };

    // Componentwise slope bounds of the flux terms: v on the sending segment,
    // w/beta on the receiving one. Self-dependence is never positive.
    const double a_prev = beta * v * inv_t;
    const double a_next = (w / beta) * inv_t;
    const double a_in = beta * inv_t;
    m.growth_rhs = [n, a_prev, a_next, a_in](std::size_t i, double,
                                             std::span<const double> r,
                                             std::span<const double> wid) {
        double g = (i == 0) ? a_in * wid[0] : a_prev * r[i - 1];
        if (i + 1 < n) g += a_next * r[i + 1];
        return g;
    };
    m.decomposition = cooperative(m.rhs);
    return m;
}

SystemModel make_heat3d(std::size_t grid, double alpha, double exchange) {
    require(grid >= 2, "heat3d model needs at least 2 grid points per axis");
    require(alpha > 0, "heat3d alpha must be positive");
    require(exchange >= 0, "heat3d exchange coefficient must be nonnegative");

    const std::size_t g = grid;
    const std::size_t g2 = g * g;
    const double delta = 1.0 / static_cast<double>(g - 1);
    const double k = alpha / (delta * delta);
    const double robin = 2.0 * delta * exchange;

    SystemModel m;
    m.dim = g * g * g;
    m.input_dim = 0;
    m.input_affine = true;
    m.sparsity_note = "7-point stencil";
    m.rhs = [g, g2, k, robin](std::size_t i, double, std::span<const double> x,
                              std::span<const double>) {
        const std::size_t ix = i % g;
        const std::size_t iy = (i / g) % g;
        const std::size_t iz = i / g2;
        const double self = x[i];
        double acc = 0.0;
        // x-minus: Robin ghost node on the exchange face, u_{-1} = u_1 - 2*delta*exchange*u_0.
        if (ix > 0)
            acc += x[i - 1] - self;
        else
            acc += (x[i + 1] - self) - robin * self;
        // Remaining faces are insulated: a mirrored ghost contributes nothing.
        if (ix + 1 < g) acc += x[i + 1] - self;
        if (iy > 0) acc += x[i - g] - self;
        if (iy + 1 < g) acc += x[i + g] - self;
        if (iz > 0) acc += x[i - g2] - self;
        if (iz + 1 < g) acc += x[i + g2] - self;
        return k * acc;
    };
    // Linear system with nonnegative off-diagonal entries: the deviation
    // dynamics are the stencil itself.
    m.growth_rhs = m.rhs;
    m.decomposition = cooperative(m.rhs);
    return m;
}

namespace {

// Shared 12-state quadrotor block. State layout per quadrotor:
//   0 pn   1 pe   2 h    3 vn    4 ve     5 vh
//   6 phi  7 theta  8 psi  9 wphi  10 wtheta  11 wpsi
// Inputs per quadrotor: 0 thrust, 1..3 body torques.
double quad_block_rhs(std::size_t r, std::span<const double> x, std::span<const double> p,
                      std::size_t b, std::size_t u, double mass, double gravity, double jx,
                      double jy, double jz) {
    switch (r) {
        case 0:
        case 1:
        case 2:
            return x[b + 3 + r];
        case 3: {
            const double a = p[u] / mass;
            return a * (-std::cos(x[b + 6]) * std::sin(x[b + 7]) * std::cos(x[b + 8]) -
                        std::sin(x[b + 6]) * std::sin(x[b + 8]));
        }
        case 4: {
            const double a = p[u] / mass;
            return a * (-std::cos(x[b + 6]) * std::sin(x[b + 7]) * std::sin(x[b + 8]) +
                        std::sin(x[b + 6]) * std::cos(x[b + 8]));
        }
        case 5:
            return gravity - p[u] / mass * std::cos(x[b + 6]) * std::cos(x[b + 7]);
        case 6:
        case 7:
        case 8:
            return x[b + 3 + r];
        case 9:
            return p[u + 1] / jx;
        case 10:
            return p[u + 2] / jy;
        default:
            return p[u + 3] / jz;
    }
}

double quad_block_growth(std::size_t r, std::span<const double> rad,
                         std::span<const double> wid, std::size_t b, std::size_t u,
                         double ang_h, double ang_v, double mass, double jx, double jy,
                         double jz) {
    switch (r) {
        case 0:
        case 1:
        case 2:
            return rad[b + 3 + r];
        case 3:
        case 4:
            return ang_h * (rad[b + 6] + rad[b + 7] + rad[b + 8]) + wid[u] / mass;
        case 5:
            return ang_v * (rad[b + 6] + rad[b + 7]) + wid[u] / mass;
        case 6:
        case 7:
        case 8:
            return rad[b + 3 + r];
        case 9:
            return wid[u + 1] / jx;
        case 10:
            return wid[u + 2] / jy;
        default:
            return wid[u + 3] / jz;
    }
}

void require_quad_params(double thrust_bound, double mass, double gravity, double jx,
                         double jy, double jz) {
    require(thrust_bound > 0 && mass > 0 && gravity > 0 && jx > 0 && jy > 0 && jz > 0,
            "quadrotor physical parameters must be positive");
}

}  // namespace

SystemModel make_quadrotor_swarm(std::size_t quadrotors, double thrust_bound, double mass,
                                 double gravity, double jx, double jy, double jz) {
    require(quadrotors >= 1, "quadrotor swarm needs at least 1 quadrotor");
    require_quad_params(thrust_bound, mass, gravity, jx, jy, jz);

    SystemModel m;
    m.dim = 12 * quadrotors;
    m.input_dim = 4 * quadrotors;
    m.input_affine = true;
    m.sparsity_note = "block-diagonal, 12-state blocks";
    m.rhs = [mass, gravity, jx, jy, jz](std::size_t i, double, std::span<const double> x,
                                        std::span<const double> p) {
        const std::size_t q = i / 12;
        return quad_block_rhs(i % 12, x, p, 12 * q, 4 * q, mass, gravity, jx, jy, jz);
    };
    // Angle sensitivities of the thrust direction: each horizontal component
    // is within 2*|F|/m per angle, the vertical one within |F|/m, for any
    // thrust magnitude up to thrust_bound.
    const double ang_h = 2.0 * thrust_bound / mass;
    const double ang_v = thrust_bound / mass;
    m.growth_rhs = [ang_h, ang_v, mass, jx, jy, jz](std::size_t i, double,
                                                    std::span<const double> r,
                                                    std::span<const double> w) {
        const std::size_t q = i / 12;
        return quad_block_growth(i % 12, r, w, 12 * q, 4 * q, ang_h, ang_v, mass, jx, jy,
                                 jz);
    };
    return m;
}

SystemModel make_quadrotor_apf(std::size_t quadrotors, double f_repel, double f_attract,
                               double thrust_bound, double mass, double gravity, double jx,
                               double jy, double jz) {
    require(quadrotors >= 2, "potential-field swarm needs at least 2 quadrotors");
    require(f_repel >= 0 && f_attract >= 0, "potential-field gains must be nonnegative");
    require_quad_params(thrust_bound, mass, gravity, jx, jy, jz);

    const std::size_t kq = quadrotors;

    // Per-axis force: repelled from the nearest other quadrotor on that axis
    // (ties broken toward the lowest index), attracted toward the origin.
    auto apf_force = [kq, f_repel, f_attract](std::span<const double> x, std::size_t q,
                                              std::size_t axis) {
        const double own = x[12 * q + axis];
        double best = std::numeric_limits<double>::infinity();
        double nearest = own;
        for (std::size_t j = 0; j < kq; ++j) {
            if (j == q) continue;
            const double d = std::abs(own - x[12 * j + axis]);
            if (d < best) {
                best = d;
                nearest = x[12 * j + axis];
            }
        }
        const double gap = own - nearest;
        return f_repel * sgn(gap) * std::exp(-std::abs(gap)) - f_attract * sgn(own);
    };

    SystemModel m;
    m.dim = 12 * quadrotors;
    m.input_dim = 4 * quadrotors;
    m.input_affine = true;
    m.sparsity_note = "dense position coupling through the potential field";
    m.rhs = [mass, gravity, jx, jy, jz, apf_force](std::size_t i, double,
                                                   std::span<const double> x,
                                                   std::span<const double> p) {
        const std::size_t q = i / 12;
        const std::size_t r = i % 12;
        double value =
            quad_block_rhs(r, x, p, 12 * q, 4 * q, mass, gravity, jx, jy, jz);
        if (r >= 3 && r <= 5) value += apf_force(x, q, r - 3);
        return value;
    };
    const double ang_h = 2.0 * thrust_bound / mass;
    const double ang_v = thrust_bound / mass;
    m.growth_rhs = [kq, ang_h, ang_v, mass, jx, jy, jz, f_repel](
                       std::size_t i, double, std::span<const double> r,
                       std::span<const double> w) {
        const std::size_t q = i / 12;
        const std::size_t rr = i % 12;
        double g = quad_block_growth(rr, r, w, 12 * q, 4 * q, ang_h, ang_v, mass, jx, jy,
                                     jz);
        if (rr >= 3 && rr <= 5) {
            // The force's position sensitivities are within f_repel almost
            // everywhere, against every quadrotor's coordinate on this axis.
            const std::size_t axis = rr - 3;
            double sum = 0.0;
            for (std::size_t j = 0; j < kq; ++j) sum += r[12 * j + axis];
            g += f_repel * sum;
        }
        return g;
    };
    return m;
}

SystemModel make_single_track(const SingleTrackParams& sp) {
    require(sp.lwb > 0 && sp.mass > 0 && sp.mu > 0 && sp.lf > 0 && sp.lr > 0 &&
                sp.hcg > 0 && sp.iz > 0 && sp.csf > 0 && sp.csr > 0 && sp.gravity > 0,
            "single-track physical parameters must be positive");
    require(sp.delta_min < sp.delta_max && sp.vdelta_min < sp.vdelta_max &&
                sp.v_min < sp.v_max && sp.v_switch > 0 && sp.a_max > 0,
            "single-track saturation limits are inconsistent");
    require(sp.op_v_lo > 0.1 && sp.op_v_lo < sp.v_max,
            "single-track operating speed range must stay in the tyre-slip regime");

    const SingleTrackParams p = sp;

    // Steering-rate limiter: rate limits always, and no pushing past the
    // steering-angle stops.
    auto sat1 = [p](double steer, double rate) {
        const double v = std::clamp(rate, p.vdelta_min, p.vdelta_max);
        if ((steer <= p.delta_min && v < 0.0) || (steer >= p.delta_max && v > 0.0))
            return 0.0;
        return v;
    };
    // Acceleration limiter: symmetric limit up to the switching speed, then a
    // power-limited ceiling, and no pushing past the velocity range.
    auto sat2 = [p](double speed, double accel) {
        double hi = p.a_max;
        if (std::abs(speed) > p.v_switch) hi = p.a_max * p.v_switch / std::abs(speed);
        const double a = std::clamp(accel, -p.a_max, hi);
        if ((speed <= p.v_min && a < 0.0) || (speed >= p.v_max && a > 0.0)) return 0.0;
        return a;
    };

    const double k6 = p.mu * p.mass / (p.iz * (p.lr + p.lf));
    // Axle load factors; linear in the acceleration input.
    auto af = [p](double a) { return p.csf * (p.gravity * p.lr - a * p.hcg); };
    auto ar = [p](double a) { return p.csr * (p.gravity * p.lf + a * p.hcg); };

    SystemModel m;
    m.dim = 7;
    m.input_dim = 2;
    m.input_affine = true;  // both limiters are monotone and 1-Lipschitz in the input
    m.sparsity_note = "dense in the slip states";
    m.rhs = [p, k6, af, ar, sat1, sat2](std::size_t i, double, std::span<const double> x,
                                        std::span<const double> u) {
        if (i == 2) return sat1(x[2], u[0]);
        if (i == 3) return sat2(x[3], u[1]);
        if (std::abs(x[3]) < 0.1) {
            // Kinematic regime: no tyre slip.
            switch (i) {
                case 0:
                    return x[3] * std::cos(x[4]);
                case 1:
                    return x[3] * std::sin(x[4]);
                case 4:
                    return x[3] / p.lwb * std::tan(x[2]);
                case 5:
                    return u[1] / p.lwb * std::tan(x[2]) +
                           x[3] / (p.lwb * sq(std::cos(x[2]))) * u[0];
                default:
                    return 0.0;
            }
        }
        switch (i) {
            case 0:
                return x[3] * std::cos(x[4] + x[6]);
            case 1:
                return x[3] * std::sin(x[4] + x[6]);
            case 4:
                return x[5];
            case 5: {
                const double fa = af(u[1]);
                const double ra = ar(u[1]);
                return k6 * (p.lf * fa * x[2] + (p.lr * ra - p.lf * fa) * x[6] -
                             (sq(p.lf) * fa + sq(p.lr) * ra) * x[5] / x[3]);
            }
            default: {
                const double fa = af(u[1]);
                const double ra = ar(u[1]);
                const double k7 = p.mu / (x[3] * (p.lr + p.lf));
                return k7 * (fa * x[2] + (ra + fa) * x[6] -
                             (p.lf * fa - p.lr * ra) * x[5] / x[3]) -
                       x[5];
            }
        }
    };

    // Sensitivity bounds over the documented operating box (tyre-slip regime
    // only). The axle load factors are linear in the acceleration input, so
    // extremes over [-a_max, a_max] occur at the endpoints.
    const double fa_abs = std::max(std::abs(af(p.a_max)), std::abs(af(-p.a_max)));
    const double ra_abs = std::max(std::abs(ar(p.a_max)), std::abs(ar(-p.a_max)));
    const double sum_hi =
        std::max(af(p.a_max) + ar(p.a_max), af(-p.a_max) + ar(-p.a_max));
    const double diff_abs = std::max(std::abs(p.lr * ar(p.a_max) - p.lf * af(p.a_max)),
                                     std::abs(p.lr * ar(-p.a_max) - p.lf * af(-p.a_max)));
    const double cross_abs =
        std::max(std::abs(p.lf * af(p.a_max) - p.lr * ar(p.a_max)),
                 std::abs(p.lf * af(-p.a_max) - p.lr * ar(-p.a_max)));
    const double quad_abs = std::max(std::abs(sq(p.lf) * af(p.a_max) + sq(p.lr) * ar(p.a_max)),
                                     std::abs(sq(p.lf) * af(-p.a_max) + sq(p.lr) * ar(-p.a_max)));
    const double k7_max = p.mu / (p.op_v_lo * (p.lr + p.lf));

    const double c63 = k6 * p.lf * fa_abs;
    const double c64 = k6 * quad_abs * p.op_x6 / sq(p.op_v_lo);
    const double c67 = k6 * diff_abs;
    const double c6p = k6 * p.hcg *
                       (p.csf * p.lf * p.op_x3 + (p.lr * p.csr + p.lf * p.csf) * p.op_x7 +
                        (sq(p.lf) * p.csf + sq(p.lr) * p.csr) * p.op_x6 / p.op_v_lo);
    const double bracket_max = fa_abs * p.op_x3 + (fa_abs + ra_abs) * p.op_x7 +
                               cross_abs * p.op_x6 / p.op_v_lo;
    const double c73 = k7_max * fa_abs;
    const double c74 = k7_max * bracket_max / p.op_v_lo +
                       k7_max * cross_abs * p.op_x6 / sq(p.op_v_lo);
    const double c76 = k7_max * cross_abs / p.op_v_lo + 1.0;
    const double c77 = std::max(0.0, k7_max * sum_hi);
    const double c7p = k7_max * p.hcg *
                       (p.csf * p.op_x3 + (p.csf + p.csr) * p.op_x7 +
                        (p.lf * p.csf + p.lr * p.csr) * p.op_x6 / p.op_v_lo);
    const double vhi = std::max(std::abs(p.v_min), std::abs(p.v_max));

    m.growth_rhs = [vhi, c63, c64, c67, c6p, c73, c74, c76, c77, c7p](
                       std::size_t i, double, std::span<const double> r,
                       std::span<const double> w) {
        switch (i) {
            case 0:
            case 1:
                return r[3] + vhi * (r[4] + r[6]);
            case 2:
                return w[0];
            case 3:
                return w[1];
            case 4:
                return r[5];
            case 5:
                return c63 * r[2] + c64 * r[3] + c67 * r[6] + c6p * w[1];
            default:
                return c73 * r[2] + c74 * r[3] + c76 * r[5] + c77 * r[6] + c7p * w[1];
        }
    };
    return m;
}

SystemModel make_vdp(double mu, double op_x, double op_y) {
    require(mu > 0, "van der Pol mu must be positive");
    require(op_x > 0 && op_y > 0, "van der Pol operating box must be positive");

    SystemModel m;
    m.dim = 2;
    m.input_dim = 0;
    m.input_affine = true;
    m.rhs = [mu](std::size_t i, double, std::span<const double> x,
                 std::span<const double>) {
        if (i == 0) return x[1];
        return mu * (1.0 - x[0] * x[0]) * x[1] - x[0];
    };
    // |d(ydot)/dx| <= 2 mu |x||y| + 1 and d(ydot)/dy <= mu on the operating box.
    const double c10 = 2.0 * mu * op_x * op_y + 1.0;
    m.growth_rhs = growth_from_matrix({{0.0, 1.0}, {c10, mu}}, {});
    return m;
}

SystemModel make_laub_loomis() {
    SystemModel m;
    m.dim = 7;
    m.input_dim = 0;
    m.input_affine = true;
    m.rhs = [](std::size_t i, double, std::span<const double> x,
               std::span<const double>) {
        switch (i) {
            case 0:
                return 1.4 * x[2] - 0.9 * x[0];
            case 1:
                return 2.5 * x[4] - 1.5 * x[1];
            case 2:
                return 0.6 * x[6] - 0.8 * x[1] * x[2];
            case 3:
                return 2.0 - 1.3 * x[2] * x[3];
            case 4:
                return 0.7 * x[0] - x[3] * x[4];
            case 5:
                return 0.3 * x[0] - 3.1 * x[5];
            default:
                return 1.8 * x[5] - 1.5 * x[1] * x[6];
        }
    };
    // Sensitivities over [0, 5]^7; bilinear self-terms are never expanding
    // there, so the diagonal entries are the linear decay rates or zero.
    const double xm = 5.0;
    m.growth_rhs = growth_from_matrix(
        {
            {-0.9, 0, 1.4, 0, 0, 0, 0},
            {0, -1.5, 0, 0, 2.5, 0, 0},
            {0, 0.8 * xm, 0, 0, 0, 0, 0.6},
            {0, 0, 1.3 * xm, 0, 0, 0, 0},
            {0.7, 0, 0, xm, 0, 0, 0},
            {0.3, 0, 0, 0, 0, -3.1, 0},
            {0, 1.5 * xm, 0, 0, 0, 1.8, 0},
        },
        {});
    return m;
}

SystemModel make_arch_quadrotor(double mass, double gravity, double jx, double jy,
                                double jz) {
    require_quad_params(1.0, mass, gravity, jx, jy, jz);

    const double kx = (jy - jz) / jx;
    const double ky = (jz - jx) / jy;
    const double kz = (jx - jy) / jz;

    SystemModel m;
    m.dim = 12;
    m.input_dim = 0;
    m.input_affine = true;
    // States: inertial position (x0..x2), body velocity (x3..x5), Euler
    // angles (x6..x8), body rates (x9..x11). Feedback stabilizes height 1
    // and level attitude; yaw is left uncontrolled.
    m.rhs = [mass, gravity, jx, jy, kx, ky, kz](std::size_t i, double,
                                                std::span<const double> x,
                                                std::span<const double>) {
        const double s7 = std::sin(x[6]), c7 = std::cos(x[6]);
        const double s8 = std::sin(x[7]), c8 = std::cos(x[7]);
        const double s9 = std::sin(x[8]), c9 = std::cos(x[8]);
        switch (i) {
            case 0:
                return c8 * c9 * x[3] + (s7 * s8 * c9 - c7 * s9) * x[4] +
                       (c7 * s8 * c9 + s7 * s9) * x[5];
            case 1:
                return c8 * s9 * x[3] + (s7 * s8 * s9 + c7 * c9) * x[4] +
                       (c7 * s8 * s9 - s7 * c9) * x[5];
            case 2:
                return s8 * x[3] - s7 * c8 * x[4] - c7 * c8 * x[5];
            case 3:
                return x[11] * x[4] - x[10] * x[5] - gravity * s8;
            case 4:
                return x[9] * x[5] - x[11] * x[3] + gravity * c8 * s7;
            case 5: {
                const double thrust = mass * gravity - 10.0 * (x[2] - 1.0) + 3.0 * x[5];
                return x[10] * x[3] - x[9] * x[4] + gravity * c8 * c7 - thrust / mass;
            }
            case 6:
                return x[9] + s7 * (s8 / c8) * x[10] + c7 * (s8 / c8) * x[11];
            case 7:
                return c7 * x[10] - s7 * x[11];
            case 8:
                return s7 / c8 * x[10] + c7 / c8 * x[11];
            case 9:
                return kx * x[10] * x[11] - (x[6] + x[9]) / jx;
            case 10:
                return ky * x[9] * x[11] - (x[7] + x[10]) / jy;
            default:
                return kz * x[9] * x[10];
        }
    };

    // Sensitivity bounds over the documented operating box: body velocities
    // within 5, Euler angles within 0.5, body rates within 2.
    const double vb = 5.0, ab = 0.5, rb = 2.0;
    const double tanb = std::tan(ab);
    const double secb = 1.0 / std::cos(ab);
    const double sec2b = secb * secb;
    const double akx = std::abs(kx), aky = std::abs(ky), akz = std::abs(kz);
    std::vector<std::vector<double>> c(12, std::vector<double>(12, 0.0));
    for (std::size_t row = 0; row < 3; ++row) {
        c[row][3] = c[row][4] = c[row][5] = 1.0;
        c[row][6] = c[row][7] = 6.0 * vb;
        if (row < 2) c[row][8] = 6.0 * vb;
    }
    c[3][4] = rb;
    c[3][5] = rb;
    c[3][7] = gravity;
    c[3][10] = vb;
    c[3][11] = vb;
    c[4][3] = rb;
    c[4][5] = rb;
    c[4][6] = gravity;
    c[4][7] = gravity;
    c[4][9] = vb;
    c[4][11] = vb;
    c[5][2] = 10.0 / mass;
    c[5][3] = rb;
    c[5][4] = rb;
    c[5][5] = -3.0 / mass;
    c[5][6] = gravity;
    c[5][7] = gravity;
    c[5][9] = vb;
    c[5][10] = vb;
    c[6][6] = 2.0 * tanb * rb;
    c[6][7] = 2.0 * sec2b * rb;
    c[6][9] = 1.0;
    c[6][10] = tanb;
    c[6][11] = tanb;
    c[7][6] = 2.0 * rb;
    c[7][10] = 1.0;
    c[7][11] = 1.0;
    c[8][6] = 2.0 * secb * rb;
    c[8][7] = 2.0 * secb * tanb * rb;
    c[8][10] = secb;
    c[8][11] = secb;
    c[9][6] = 1.0 / jx;
    c[9][9] = -1.0 / jx;
    c[9][10] = akx * rb;
    c[9][11] = akx * rb;
    c[10][7] = 1.0 / jy;
    c[10][9] = aky * rb;
    c[10][10] = -1.0 / jy;
    c[10][11] = aky * rb;
    c[11][9] = akz * rb;
    c[11][10] = akz * rb;
    m.growth_rhs = growth_from_matrix(std::move(c), {});
    return m;
}

SystemModel make_zero(std::size_t dim) {
    require(dim >= 1, "zero model needs at least 1 state");
    SystemModel m;
    m.dim = dim;
    m.input_dim = 0;
    m.input_affine = true;
    m.rhs = [](std::size_t, double, std::span<const double>, std::span<const double>) {
        return 0.0;
    };
    m.growth_rhs = m.rhs;
    m.decomposition = cooperative(m.rhs);
    return m;
}

SystemModel make_scalar_decay() {
    SystemModel m;
    m.dim = 1;
    m.input_dim = 1;
    m.input_affine = true;
    m.rhs = [](std::size_t, double, std::span<const double> x, std::span<const double> p) {
        return -x[0] + p[0];
    };
    m.growth_rhs = [](std::size_t, double, std::span<const double> r,
                      std::span<const double> w) { return -r[0] + w[0]; };
    m.decomposition = cooperative(m.rhs);
    return m;
}

SystemModel make_scalar_linear(double a) {
    SystemModel m;
    m.dim = 1;
    m.input_dim = 0;
    m.input_affine = true;
    m.rhs = [a](std::size_t, double, std::span<const double> x, std::span<const double>) {
        return a * x[0];
    };
    m.growth_rhs = [a](std::size_t, double, std::span<const double> r,
                       std::span<const double>) { return a * r[0]; };
    m.decomposition = cooperative(m.rhs);
    return m;
}

const char* provenance_label(Provenance p) {
    switch (p) {
        case Provenance::Benchmark:
            return "benchmark";
        case Provenance::CitedSource:
            return "cited-source";
        default:
            return "chosen";
    }
}

namespace {

double at(const ParamMap& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end())
        throw std::logic_error("catalog defaults missing parameter " + name);
    return it->second;
}

std::size_t count_at(const ParamMap& params, const std::string& name) {
    const double v = at(params, name);
    if (v < 0 || v != std::floor(v))
        throw std::invalid_argument("parameter " + name +
                                    " must be a nonnegative integer, got " +
                                    std::to_string(v));
    return static_cast<std::size_t>(v);
}

constexpr double kGravity = 9.81;

ReachProblem make_problem(const SystemModel& model, IntervalVector initial,
                          std::optional<IntervalVector> inputs, double t1, double h,
                          std::size_t stride = 0) {
    ReachProblem prob{model, std::move(initial), std::move(inputs), 0.0, t1, h, stride};
    return prob;
}

std::vector<ModelCatalogEntry> build_catalog() {
    std::vector<ModelCatalogEntry> cat;
    const std::vector<std::string> all3 = {"growth-bound", "mixed-monotonicity",
                                           "monte-carlo"};
    const std::vector<std::string> gb_mc = {"growth-bound", "monte-carlo"};

    cat.push_back(ModelCatalogEntry{
        "traffic",
        "road network densities, one state per segment, inflow demand as input",
        "n = segments",
        all3,
        {
            {"segments", 50, Provenance::Chosen, "size parameter, >= 3"},
            {"v", 0.5, Provenance::CitedSource, "free-flow rate"},
            {"w", 1.0 / 6.0, Provenance::CitedSource, "congestion wave rate"},
            {"c", 40, Provenance::CitedSource, "segment capacity"},
            {"xbar", 320, Provenance::CitedSource, "jam density"},
            {"period", 30, Provenance::CitedSource, "discretization period"},
            {"beta", 0.75, Provenance::CitedSource, "split ratio, in (0, 1]"},
        },
        "valid for all densities in [0, xbar]; the slope bounds cover every "
        "min-branch",
        "segments",
        [](const ParamMap& p) {
            return make_traffic(count_at(p, "segments"), at(p, "v"), at(p, "w"),
                                at(p, "c"), at(p, "xbar"), at(p, "period"),
                                at(p, "beta"));
        },
        [](const SystemModel& m, const ParamMap&) {
            return make_problem(m, box_fill(m.dim, 10.0, 20.0),
                                IntervalVector({4.0}, {6.0}), 30.0, 0.5);
        }});

    cat.push_back(ModelCatalogEntry{
        "heat3d",
        "heat diffusion on a unit cube, one state per grid node",
        "n = grid^3",
        all3,
        {
            {"grid", 8, Provenance::Chosen, "size parameter, nodes per axis, >= 2"},
            {"alpha", 1.0, Provenance::Chosen, "diffusivity"},
            {"exchange", 1.0, Provenance::Chosen, "exchange coefficient on the x=0 face"},
        },
        "linear system, bounds are global; step size must respect the stencil "
        "stiffness (h <~ 0.23 * (grid-1)^-2 / alpha)",
        "grid",
        [](const ParamMap& p) {
            return make_heat3d(count_at(p, "grid"), at(p, "alpha"), at(p, "exchange"));
        },
        [](const SystemModel& m, const ParamMap&) {
            return make_problem(m, box_fill(m.dim, 0.9, 1.1), std::nullopt, 0.05, 0.002);
        }});

    cat.push_back(ModelCatalogEntry{
        "quadrotor-swarm",
        "independent 12-state quadrotors with thrust and torque inputs",
        "n = 12 * quadrotors",
        gb_mc,
        {
            {"quadrotors", 2, Provenance::Chosen, "size parameter, >= 1"},
            {"thrust_bound", 27.5, Provenance::Chosen,
             "largest |thrust| assumed by the sensitivity bounds"},
            {"mass", 1.4, Provenance::Chosen, ""},
            {"gravity", kGravity, Provenance::Chosen, ""},
            {"jx", 0.054, Provenance::Chosen, ""},
            {"jy", 0.054, Provenance::Chosen, ""},
            {"jz", 0.104, Provenance::Chosen, ""},
        },
        "input boxes must keep |thrust| <= thrust_bound",
        "quadrotors",
        [](const ParamMap& p) {
            return make_quadrotor_swarm(count_at(p, "quadrotors"), at(p, "thrust_bound"),
                                        at(p, "mass"), at(p, "gravity"), at(p, "jx"),
                                        at(p, "jy"), at(p, "jz"));
        },
        [](const SystemModel& m, const ParamMap& p) {
            const std::size_t k = m.dim / 12;
            const double hover = at(p, "mass") * at(p, "gravity");
            auto initial = box_tile(
                k, {-0.1, -0.1, -0.1, -0.1, -0.1, -0.1, -0.05, -0.05, -0.05, -0.05, -0.05, -0.05},
                {0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05});
            auto inputs = box_tile(k, {hover - 0.15, -0.01, -0.01, -0.01},
                                   {hover + 0.15, 0.01, 0.01, 0.01});
            return make_problem(m, std::move(initial), std::move(inputs), 1.0, 0.01);
        }});

    cat.push_back(ModelCatalogEntry{
        "quadrotor-apf",
        "quadrotor swarm coupled by per-axis potential-field forces",
        "n = 12 * quadrotors",
        gb_mc,
        {
            {"quadrotors", 2, Provenance::Chosen, "size parameter, >= 2"},
            {"f_repel", 1.0, Provenance::Chosen, "nearest-neighbour repulsion gain"},
            {"f_attract", 1.0, Provenance::Chosen, "origin attraction gain"},
            {"thrust_bound", 27.5, Provenance::Chosen,
             "largest |thrust| assumed by the sensitivity bounds"},
            {"mass", 1.4, Provenance::Chosen, ""},
            {"gravity", kGravity, Provenance::Chosen, ""},
            {"jx", 0.054, Provenance::Chosen, ""},
            {"jy", 0.054, Provenance::Chosen, ""},
            {"jz", 0.104, Provenance::Chosen, ""},
        },
        "forces lie in [-(f_repel+f_attract), f_repel+f_attract]; position "
        "sensitivities within f_repel almost everywhere",
        "quadrotors",
        [](const ParamMap& p) {
            return make_quadrotor_apf(count_at(p, "quadrotors"), at(p, "f_repel"),
                                      at(p, "f_attract"), at(p, "thrust_bound"),
                                      at(p, "mass"), at(p, "gravity"), at(p, "jx"),
                                      at(p, "jy"), at(p, "jz"));
        },
        [](const SystemModel& m, const ParamMap& p) {
            const std::size_t k = m.dim / 12;
            const double hover = at(p, "mass") * at(p, "gravity");
            // Blocks spaced along pn so each quadrotor has a distinct neighbour.
            std::vector<double> lo, hi;
            for (std::size_t q = 0; q < k; ++q) {
                const double base = 2.0 * static_cast<double>(q);
                std::vector<double> bl = {base - 0.1, -0.1, -0.1, -0.1, -0.1, -0.1,
                                          -0.05, -0.05, -0.05, -0.05, -0.05, -0.05};
                std::vector<double> bh = {base + 0.1, 0.1, 0.1, 0.1, 0.1, 0.1,
                                          0.05, 0.05, 0.05, 0.05, 0.05, 0.05};
                lo.insert(lo.end(), bl.begin(), bl.end());
                hi.insert(hi.end(), bh.begin(), bh.end());
            }
            auto inputs = box_tile(k, {hover - 0.15, -0.01, -0.01, -0.01},
                                   {hover + 0.15, 0.01, 0.01, 0.01});
            return make_problem(m, IntervalVector(std::move(lo), std::move(hi)),
                                std::move(inputs), 1.0, 0.01);
        }});

    cat.push_back(ModelCatalogEntry{
        "single-track",
        "7-state vehicle with tyre slip; steering rate and acceleration inputs",
        "n = 7",
        gb_mc,
        {
            {"lwb", 2.5789, Provenance::Benchmark, "wheelbase"},
            {"mass", 1093.3, Provenance::Benchmark, ""},
            {"mu", 1.0489, Provenance::Benchmark, "friction"},
            {"lf", 1.156, Provenance::Benchmark, "front axle to CoG"},
            {"lr", 1.422, Provenance::Benchmark, "rear axle to CoG"},
            {"hcg", 0.6137, Provenance::Benchmark, "CoG height"},
            {"iz", 1791.6, Provenance::Benchmark, "yaw inertia"},
            {"csf", 20.89, Provenance::Benchmark, "front cornering stiffness"},
            {"csr", 20.89, Provenance::Benchmark, "rear cornering stiffness"},
            {"gravity", kGravity, Provenance::Chosen, ""},
            {"delta_min", -1.066, Provenance::CitedSource, "steering angle stop"},
            {"delta_max", 1.066, Provenance::CitedSource, "steering angle stop"},
            {"vdelta_min", -0.4, Provenance::CitedSource, "steering rate limit"},
            {"vdelta_max", 0.4, Provenance::CitedSource, "steering rate limit"},
            {"v_min", -13.6, Provenance::CitedSource, "velocity range"},
            {"v_max", 50.8, Provenance::CitedSource, "velocity range"},
            {"v_switch", 7.319, Provenance::CitedSource, "power-limit switch speed"},
            {"a_max", 11.5, Provenance::CitedSource, "acceleration limit"},
            {"op_v_lo", 5.0, Provenance::Chosen, "operating box: lowest speed"},
            {"op_x3", 0.2, Provenance::Chosen, "operating box: |steering angle|"},
            {"op_x6", 1.0, Provenance::Chosen, "operating box: |yaw rate|"},
            {"op_x7", 0.3, Provenance::Chosen, "operating box: |slip angle|"},
        },
        "sensitivity bounds hold in the tyre-slip regime only: speed in "
        "[op_v_lo, v_max], |steering| <= op_x3, |yaw rate| <= op_x6, |slip| <= op_x7",
        "",
        [](const ParamMap& p) {
            SingleTrackParams sp;
            sp.lwb = at(p, "lwb");
            sp.mass = at(p, "mass");
            sp.mu = at(p, "mu");
            sp.lf = at(p, "lf");
            sp.lr = at(p, "lr");
            sp.hcg = at(p, "hcg");
            sp.iz = at(p, "iz");
            sp.csf = at(p, "csf");
            sp.csr = at(p, "csr");
            sp.gravity = at(p, "gravity");
            sp.delta_min = at(p, "delta_min");
            sp.delta_max = at(p, "delta_max");
            sp.vdelta_min = at(p, "vdelta_min");
            sp.vdelta_max = at(p, "vdelta_max");
            sp.v_min = at(p, "v_min");
            sp.v_max = at(p, "v_max");
            sp.v_switch = at(p, "v_switch");
            sp.a_max = at(p, "a_max");
            sp.op_v_lo = at(p, "op_v_lo");
            sp.op_x3 = at(p, "op_x3");
            sp.op_x6 = at(p, "op_x6");
            sp.op_x7 = at(p, "op_x7");
            return make_single_track(sp);
        },
        [](const SystemModel& m, const ParamMap&) {
            IntervalVector initial({-0.1, -0.1, 0.0, 14.9, -0.05, 0.0, 0.0},
                                   {0.1, 0.1, 0.0, 15.1, 0.05, 0.0, 0.0});
            IntervalVector inputs({0.0, 0.0}, {0.0, 0.0});
            return make_problem(m, std::move(initial), std::move(inputs), 1.0, 0.005);
        }});

    cat.push_back(ModelCatalogEntry{
        "vdp",
        "van der Pol oscillator",
        "n = 2",
        gb_mc,
        {
            {"mu", 1.0, Provenance::CitedSource, "damping"},
            {"op_x", 2.5, Provenance::Chosen, "operating box: |x|"},
            {"op_y", 3.0, Provenance::Chosen, "operating box: |y|"},
        },
        "sensitivity bounds hold for |x| <= op_x, |y| <= op_y",
        "",
        [](const ParamMap& p) {
            return make_vdp(at(p, "mu"), at(p, "op_x"), at(p, "op_y"));
        },
        [](const SystemModel& m, const ParamMap&) {
            return make_problem(m, IntervalVector({1.25, 2.35}, {1.55, 2.45}),
                                std::nullopt, 1.0, 0.005);
        }});

    cat.push_back(ModelCatalogEntry{
        "laub-loomis",
        "7-state enzyme kinetics benchmark",
        "n = 7",
        gb_mc,
        {},
        "sensitivity bounds hold on [0, 5]^7",
        "",
        [](const ParamMap&) { return make_laub_loomis(); },
        [](const SystemModel& m, const ParamMap&) {
            const std::vector<double> c = {1.2, 1.05, 1.5, 2.4, 1.0, 0.1, 0.45};
            std::vector<double> lo(7), hi(7);
            for (std::size_t i = 0; i < 7; ++i) {
                lo[i] = c[i] - 0.05;
                hi[i] = c[i] + 0.05;
            }
            return make_problem(m, IntervalVector(std::move(lo), std::move(hi)),
                                std::nullopt, 1.0, 0.005);
        }});

    cat.push_back(ModelCatalogEntry{
        "arch-quadrotor",
        "closed-loop 12-state quadrotor stabilizing to height 1",
        "n = 12",
        gb_mc,
        {
            {"mass", 1.4, Provenance::CitedSource, ""},
            {"gravity", kGravity, Provenance::CitedSource, ""},
            {"jx", 0.054, Provenance::CitedSource, ""},
            {"jy", 0.054, Provenance::CitedSource, ""},
            {"jz", 0.104, Provenance::CitedSource, ""},
        },
        "sensitivity bounds hold for body velocities within 5, angles within "
        "0.5, rates within 2",
        "",
        [](const ParamMap& p) {
            return make_arch_quadrotor(at(p, "mass"), at(p, "gravity"), at(p, "jx"),
                                       at(p, "jy"), at(p, "jz"));
        },
        [](const SystemModel& m, const ParamMap&) {
            std::vector<double> lo(12, 0.0), hi(12, 0.0);
            for (std::size_t i = 0; i < 6; ++i) {
                lo[i] = -0.4;
                hi[i] = 0.4;
            }
            return make_problem(m, IntervalVector(std::move(lo), std::move(hi)),
                                std::nullopt, 1.0, 0.01);
        }});

    cat.push_back(ModelCatalogEntry{
        "zero",
        "f = 0 test system; every reach set equals the initial box",
        "n = dim",
        all3,
        {
            {"dim", 2, Provenance::Chosen, "size parameter, >= 1"},
        },
        "trivial",
        "dim",
        [](const ParamMap& p) { return make_zero(count_at(p, "dim")); },
        [](const SystemModel& m, const ParamMap&) {
            return make_problem(m, box_fill(m.dim, 0.0, 1.0), std::nullopt, 1.0, 0.1);
        }});

    cat.push_back(ModelCatalogEntry{
        "scalar-decay",
        "xdot = -x + p test system with a closed-form deviation solution",
        "n = 1",
        all3,
        {},
        "global",
        "",
        [](const ParamMap&) { return make_scalar_decay(); },
        [](const SystemModel& m, const ParamMap&) {
            return make_problem(m, IntervalVector({0.9}, {1.1}),
                                IntervalVector({0.0}, {0.0}), 1.0, 0.001);
        }});

    cat.push_back(ModelCatalogEntry{
        "scalar-linear",
        "xdot = a x test system with closed-form reach sets",
        "n = 1",
        all3,
        {
            {"a", 1.0, Provenance::Chosen, "growth rate"},
        },
        "global",
        "",
        [](const ParamMap& p) { return make_scalar_linear(at(p, "a")); },
        [](const SystemModel& m, const ParamMap&) {
            return make_problem(m, IntervalVector({1.0}, {2.0}), std::nullopt, 1.0,
                                0.001);
        }});

    return cat;
}

}  // namespace

const std::vector<ModelCatalogEntry>& model_catalog() {
    static const std::vector<ModelCatalogEntry> cat = build_catalog();
    return cat;
}

const ModelCatalogEntry* find_model(const std::string& name) {
    for (const auto& entry : model_catalog())
        if (entry.name == name) return &entry;
    return nullptr;
}

ParamMap resolve_params(const ModelCatalogEntry& entry, const ParamMap& overrides) {
    ParamMap out;
    for (const auto& spec : entry.params) out[spec.name] = spec.value;
    for (const auto& [name, value] : overrides) {
        if (out.find(name) == out.end())
            throw std::invalid_argument("model " + entry.name +
                                        " has no parameter named " + name);
        out[name] = value;
    }
    return out;
}

double size_param_for_dim(const ModelCatalogEntry& entry, std::size_t dim) {
    if (entry.size_param.empty())
        throw std::invalid_argument("model " + entry.name +
                                    " is not dimension-scalable");
    if (dim == 0) throw std::invalid_argument("requested dimension must be positive");
    if (entry.size_param == "quadrotors")
        return std::max(1.0, std::round(static_cast<double>(dim) / 12.0));
    if (entry.size_param == "grid")
        return std::max(2.0, std::round(std::cbrt(static_cast<double>(dim))));
    return static_cast<double>(dim);  // segments, dim: one state per unit
}

}  // namespace ivreach
