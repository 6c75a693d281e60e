#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "ivreach/models.hpp"
#include "ivreach/rk4.hpp"

using namespace ivreach;

namespace {

IntegrationJob exp_job(const SystemModel& m, double h) {
    IntegrationJob job;
    job.model = &m;
    job.x0 = {1.0};
    job.t0 = 0.0;
    job.t1 = 1.0;
    job.h = h;
    return job;
}

}  // namespace

TEST_CASE("plan_steps handles exact division, remainders, and oversize h") {
    SUBCASE("30 / 0.3 is one hundred full steps despite rounding") {
        const StepPlan plan = plan_steps(0.0, 30.0, 0.3);
        CHECK(plan.full_steps == 100);
        CHECK_FALSE(plan.has_remainder);
    }
    SUBCASE("remainder step appears when h does not divide the span") {
        const StepPlan plan = plan_steps(0.0, 1.0, 0.3);
        CHECK(plan.full_steps == 3);
        CHECK(plan.has_remainder);
        CHECK(plan.total() == 4);
    }
    SUBCASE("h larger than the span gives a single shortened step") {
        const StepPlan plan = plan_steps(0.0, 0.1, 0.5);
        CHECK(plan.full_steps == 0);
        CHECK(plan.has_remainder);
        CHECK(plan.total() == 1);
    }
}

TEST_CASE("one classical step of xdot = x matches the hand-computed value") {
    const SystemModel m = make_scalar_linear();
    IntegrationJob job = exp_job(m, 0.1);
    job.t1 = 0.1;
    const Trajectory traj = integrate(job, 1);
    REQUIRE(traj.states.size() == 1);
    CHECK(traj.states[0][0] == doctest::Approx(1.1051708333333332).epsilon(1e-15));
}

TEST_CASE("xdot = x over one unit lands within 1e-8 of e") {
    const SystemModel m = make_scalar_linear();
    const Trajectory traj = integrate(exp_job(m, 0.001), 1);
    CHECK(std::fabs(traj.states.back()[0] - 2.718281828459045) <= 1e-8);
}

TEST_CASE("error shrinks at fourth order when h is halved") {
    const SystemModel m = make_scalar_linear();
    const double exact = 2.718281828459045;
    double h = 0.05;
    double prev = 0.0;
    for (int k = 0; k < 4; ++k) {
        const Trajectory traj = integrate(exp_job(m, h), 1);
        const double err = std::fabs(traj.states.back()[0] - exact);
        if (k > 0) {
            const double ratio = prev / err;
            CHECK(ratio >= 12.0);
            CHECK(ratio <= 20.0);
        }
        prev = err;
        h *= 0.5;
    }
}

TEST_CASE("final step is shortened to land exactly on t1") {
    const SystemModel m = make_scalar_linear();
    IntegrationJob job = exp_job(m, 0.3);
    const Trajectory traj = integrate(job, 1);
    CHECK(traj.times.back() == 1.0);
    // three 0.3 steps plus a 0.1 remainder; the step error at h=0.3 is ~5e-5
    CHECK(traj.states.back()[0] == doctest::Approx(2.718281828459045).epsilon(2e-4));
}

TEST_CASE("recording follows the stride and always includes the final state") {
    const SystemModel m = make_scalar_linear();
    SUBCASE("stride that does not divide the step count") {
        IntegrationJob job = exp_job(m, 0.1);
        job.record_stride = 3;
        const Trajectory traj = integrate(job, 1);
        REQUIRE(traj.times.size() == 5);  // steps 0, 3, 6, 9 and the final step 10
        CHECK(traj.times.front() == 0.0);
        CHECK(traj.times[1] == 3 * 0.1);
        CHECK(traj.times.back() == 1.0);
    }
    SUBCASE("stride that divides the step count records the end once") {
        IntegrationJob job = exp_job(m, 0.1);
        job.record_stride = 5;
        const Trajectory traj = integrate(job, 1);
        REQUIRE(traj.times.size() == 3);  // steps 0, 5, 10
        CHECK(traj.times.back() == 1.0);
    }
    SUBCASE("stride zero records the final state only") {
        const Trajectory traj = integrate(exp_job(m, 0.1), 1);
        CHECK(traj.times.size() == 1);
        CHECK(traj.times[0] == 1.0);
    }
}

TEST_CASE("serial reference and parallel engine agree bit for bit") {
    const SystemModel m = make_traffic(1000);
    IntegrationJob job;
    job.model = &m;
    job.x0.resize(1000);
    for (std::size_t i = 0; i < 1000; ++i)
        job.x0[i] = 12.0 + 0.01 * static_cast<double>(i % 97);
    job.p = {5.0};
    job.t0 = 0.0;
    job.t1 = 10.0;
    job.h = 0.5;
    job.record_stride = 3;

    const Trajectory serial = reference::integrate(job);
    for (int workers : {1, 2, 8}) {
        const Trajectory par = integrate(job, workers);
        REQUIRE(par.states.size() == serial.states.size());
        CHECK(par.times == serial.times);
        for (std::size_t s = 0; s < serial.states.size(); ++s) {
            CHECK(std::memcmp(par.states[s].data(), serial.states[s].data(),
                              1000 * sizeof(double)) == 0);
        }
    }
}

TEST_CASE("non-finite states raise an error naming the step") {
    const SystemModel m = make_scalar_linear(5.0);
    IntegrationJob job;
    job.model = &m;
    job.x0 = {1.0};
    job.t0 = 0.0;
    job.t1 = 600.0;
    job.h = 10.0;  // wildly unstable for xdot = 5x
    try {
        integrate(job, 1);
        FAIL("expected an integration error");
    } catch (const IntegrationError& e) {
        CHECK(e.step > 0);
        CHECK(e.component == 0);
        CHECK(std::string(e.what()).find("step") != std::string::npos);
    }
}
