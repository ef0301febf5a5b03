#pragma once

#include <map>
#include <vector>

#include "anyonwalk/fusion.hpp"
#include "anyonwalk/walk.hpp"

namespace anyonwalk {

/// A walk trajectory: bit j = 1 means the walker moved right at step j+1.
using PathVector = std::vector<int>;

/// Number of consecutive right-move pairs, sum_j a_j a_{j+1}.
int z_count(const PathVector& a);

/// Braid word of a trajectory in site units: step tau moving right from site
/// s contributes b_s, moving left contributes b_{s-1} (the island actually
/// crossed).  Indices may be <= 0; map them into a strand range before use.
std::vector<int> braid_word_for_path(const PathVector& a, int s0);

struct PathSumOptions {
    Closure closure = Closure::Plat;
    int t_cap = 8;  // cost grows as 4^t
};

/// Trajectory-pair sum for p(s, t): (1/2^t) sum over pairs with equal
/// endpoint and equal last move of (-1)^{z+z'} <Phi0| B'^dag B |Phi0>.
/// Returns p for every reachable site s; imag_max reports the largest
/// imaginary part encountered before taking the real value.
struct PathSumResult {
    std::map<int, double> p;
    double imag_max = 0.0;
};

PathSumResult path_sum_distribution(const AnyonModel& model, int s0, int t,
                                    const PathSumOptions& opt = {});

/// Single-site convenience wrapper.
double path_sum_probability(const AnyonModel& model, int s, int s0, int t,
                            const PathSumOptions& opt = {});

}  // namespace anyonwalk
