#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "anyonwalk/observables.hpp"

using namespace anyonwalk;

namespace {
PositionDistribution make(int site0, std::vector<double> p) {
    PositionDistribution d;
    d.site0 = site0;
    d.p = std::move(p);
    return d;
}
}  // namespace

TEST_CASE("variance") {
    CHECK(variance(make(0, {0, 1, 0}), 1) == 0.0);
    CHECK(variance(make(-1, {0.5, 0, 0.5}), 0) == doctest::Approx(1.0));
}

TEST_CASE("classify_scaling on exact laws") {
    std::vector<std::pair<int, double>> lin, quad;
    for (int t = 5; t <= 60; ++t) {
        lin.emplace_back(t, static_cast<double>(t));
        quad.emplace_back(t, 0.2929 * t * t);
    }
    auto f1 = classify_scaling(lin);
    CHECK(f1.exponent == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(f1.classification == Scaling::Diffusive);
    auto f2 = classify_scaling(quad);
    CHECK(f2.exponent == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(f2.classification == Scaling::Ballistic);
    CHECK(f2.k2 == doctest::Approx(0.2929).epsilon(1e-6));
}

TEST_CASE("hadamard walk is ballistic over t <= 200") {
    WalkConfig cfg;
    cfg.t_max = 200;
    auto traj = hadamard_reference(cfg);
    std::vector<std::pair<int, double>> series;
    for (int t = 10; t <= 200; ++t) series.emplace_back(t, variance(traj[t], 0));
    auto fit = classify_scaling(series);
    CHECK(fit.exponent == doctest::Approx(2.0).epsilon(0.025));
}

TEST_CASE("hadamard walk at t=100 is left-right asymmetric for coin |0>") {
    WalkConfig cfg;
    cfg.t_max = 100;
    auto traj = hadamard_reference(cfg);
    const auto& d = traj[100];
    double left = 0, right = 0;
    for (std::size_t i = 0; i < d.p.size(); ++i) {
        int s = d.site0 + static_cast<int>(i);
        if (s < 0) left += d.p[i];
        if (s > 0) right += d.p[i];
    }
    CHECK(std::abs(left - right) > 0.1);
}

TEST_CASE("total variation") {
    auto a = make(0, {1, 0});
    auto b = make(0, {0, 1});
    CHECK(total_variation(a, a) == 0.0);
    CHECK(total_variation(a, b) == doctest::Approx(2.0));  // L1, not halved
    CHECK(total_variation(make(0, {0.5, 0.5}), make(0, {1.0, 0.0})) == doctest::Approx(1.0));
    CHECK_THROWS(total_variation(a, make(1, {1, 0})));

    SUBCASE("metric properties on random triples") {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(0, 1);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<PositionDistribution> x(3, make(0, {0, 0, 0, 0}));
            for (auto& d : x) {
                double s = 0;
                for (auto& p : d.p) {
                    p = u(rng);
                    s += p;
                }
                for (auto& p : d.p) p /= s;
            }
            CHECK(total_variation(x[0], x[1]) ==
                  doctest::Approx(total_variation(x[1], x[0])));
            CHECK(total_variation(x[0], x[2]) <=
                  total_variation(x[0], x[1]) + total_variation(x[1], x[2]) + 1e-12);
        }
    }
}

TEST_CASE("time average") {
    std::vector<PositionDistribution> traj = {make(0, {1, 0}), make(0, {0, 1})};
    auto a0 = time_average(traj, 0);
    CHECK(a0.p[0] == 1.0);
    auto a1 = time_average(traj, 1);
    CHECK(a1.p[0] == doctest::Approx(0.5));
    CHECK(a1.p[0] + a1.p[1] == doctest::Approx(1.0));
}

TEST_CASE("mixing time") {
    auto pi = make(0, {0.5, 0.5});
    std::vector<PositionDistribution> at_pi(10, pi);
    CHECK(mixing_time(at_pi, pi, 0.01).value() == 0);

    std::vector<PositionDistribution> traj;
    for (int t = 0; t < 10; ++t)
        traj.push_back(t < 4 ? make(0, {1.0, 0.0}) : pi);
    CHECK(mixing_time(traj, pi, 0.01).value() == 4);
    CHECK(mixing_time(traj, pi, 3.0).value() == 0);  // eps above max distance

    SUBCASE("monotone in eps") {
        auto rw = classical_rw_reference(5, 1, 400, BoundaryCondition::Periodic);
        PositionDistribution uni = make(1, std::vector<double>(5, 0.2));
        auto m1 = mixing_time(rw.trajectory, uni, 0.01);
        auto m2 = mixing_time(rw.trajectory, uni, 0.1);
        REQUIRE(m1.has_value());
        REQUIRE(m2.has_value());
        CHECK(*m1 >= *m2);
        // O(N^2 log 1/eps) scaling window: generous bound
        CHECK(*m1 <= 25 * 5);
    }
}

TEST_CASE("distance to final") {
    auto rw = classical_rw_reference(5, 1, 50, BoundaryCondition::Periodic);
    auto d = distance_to_final(rw.trajectory, 50);
    CHECK(d[50] == 0.0);
    auto avgT = time_average(rw.trajectory, 50);
    CHECK(d[0] == doctest::Approx(total_variation(rw.trajectory[0], avgT)));
}

TEST_CASE("classical random walk references") {
    SUBCASE("line-like behaviour via a wide reflective chain") {
        auto rw = classical_rw_reference(41, 21, 2, BoundaryCondition::Reflective);
        CHECK(rw.trajectory[2].at(19) == doctest::Approx(0.25));
        CHECK(rw.trajectory[2].at(21) == doctest::Approx(0.5));
        CHECK(rw.trajectory[2].at(23) == doctest::Approx(0.25));
    }
    SUBCASE("variance is t on the (effectively infinite) line") {
        auto rw = classical_rw_reference(201, 101, 40, BoundaryCondition::Reflective);
        for (int t : {10, 25, 40})
            CHECK(variance(rw.trajectory[t], 101) == doctest::Approx(t).epsilon(1e-12));
    }
    SUBCASE("5-cycle converges to uniform") {
        auto rw = classical_rw_reference(5, 2, 300, BoundaryCondition::Periodic);
        PositionDistribution uni = make(1, std::vector<double>(5, 0.2));
        CHECK(total_variation(rw.trajectory[300], uni) < 1e-6);
    }
    SUBCASE("absorbing chain accumulates exit mass") {
        auto rw = classical_rw_reference(6, 3, 200, BoundaryCondition::Absorbing);
        CHECK(rw.exit_series.back() > 0.99);
        for (std::size_t i = 1; i < rw.exit_series.size(); ++i)
            CHECK(rw.exit_series[i] >= rw.exit_series[i - 1]);
    }
}

TEST_CASE("exit probability series") {
    WalkConfig cfg;
    cfg.model = AnyonModel::ising();
    cfg.boundary = BoundaryCondition::Absorbing;
    cfg.sites = 8;
    cfg.s0 = 4;
    cfg.t_max = 60;
    auto pex = exit_probability(cfg);
    REQUIRE(pex.size() == 60);
    CHECK(pex[0] == 0.0);  // interior start cannot reach a boundary in one step
    for (std::size_t i = 1; i < pex.size(); ++i) {
        CHECK(pex[i] >= pex[i - 1]);
        CHECK(pex[i] <= 1.0 + 1e-12);
    }
    cfg.boundary = BoundaryCondition::Periodic;
    CHECK_THROWS(exit_probability(cfg));
}
