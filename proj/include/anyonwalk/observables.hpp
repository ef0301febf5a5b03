#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anyonwalk/walk.hpp"

namespace anyonwalk {

/// <(s-s0)^2> of a distribution.
double variance(const PositionDistribution& dist, int s0);

enum class Scaling { Ballistic, Diffusive, Localized, Indeterminate };

struct ScalingFit {
    double exponent = 0.0;       // log-log least squares
    double k2 = 0.0, k1 = 0.0, k0 = 0.0;  // quadratic polynomial fit
    Scaling classification = Scaling::Indeterminate;
};

/// Fit of a (t, sigma^2) series.  Classification thresholds: exponent >= 1.7
/// ballistic; in [0.7, 1.3] diffusive; <= 0.2 with bounded values localized;
/// anything else indeterminate.
ScalingFit classify_scaling(const std::vector<std::pair<int, double>>& series);

/// Cesaro average over tau = 0..t of a trajectory of distributions.
PositionDistribution time_average(const std::vector<PositionDistribution>& traj, int t);

/// L1 distance sum_i |a_i - b_i| (not halved).  Domains must share site0/size.
double total_variation(const PositionDistribution& a, const PositionDistribution& b);

/// Smallest T with ||D_t - pi|| <= eps for all t >= T, or nullopt.
std::optional<int> mixing_time(const std::vector<PositionDistribution>& traj,
                               const PositionDistribution& pi, double eps);

/// D(t, T) = ||avg(t) - avg(T)|| for t = 0..T over time-averaged distributions.
std::vector<double> distance_to_final(const std::vector<PositionDistribution>& traj, int T);

/// Exact symmetric classical random walk.  boundary Periodic, Absorbing or
/// Reflective on a chain of N sites (Absorbing accumulates at sites 0, N+1).
struct ClassicalWalk {
    std::vector<PositionDistribution> trajectory;  // live distribution per step
    std::vector<double> exit_series;               // cumulative absorbed mass (Absorbing)
};

ClassicalWalk classical_rw_reference(int sites, int s0, int t_max,
                                     BoundaryCondition boundary);

/// The coined walk with trivial braiding (AbelianPhase 0) — the Hadamard walk.
std::vector<PositionDistribution> hadamard_reference(WalkConfig cfg);

/// Cumulative absorbed mass P_ex(t) for t = 1..t_max.  Throws unless the
/// configuration uses absorbing boundaries.
std::vector<double> exit_probability(const WalkConfig& cfg);

}  // namespace anyonwalk
