#pragma once

#include <array>
#include <vector>

#include "anyonwalk/models.hpp"

namespace anyonwalk {

/// Two fusion qubits encoded in separated three-anyon trees (six anyons with
/// vacuum total), plus the charge-3/2 leakage state that exists for k >= 3.
/// Amplitude order: |00>, |01>, |10>, |11>, |leak>.
struct TwoTreeState {
    int k = 2;
    std::array<cplx, 5> amp{};

    double norm() const;
    double leakage_weight() const { return std::norm(amp[4]); }
};

struct EntropyReport {
    int k = 0;
    double q = 0.0;             // linear entropy 2(1 - tr(rho^2)/tr(rho)^2)
    double leakage = 0.0;
    double k2q = 0.0;           // k^2 * q, for the large-k comparison
};

/// Product state (alpha|0> + beta|1>)^(x2) with alpha, beta the first
/// F-matrix column; leakage amplitude zero.
TwoTreeState initial_two_tree_state(int k);

/// Square of the braid generator exchanging the adjacent inner anyons of the
/// two trees.  Monodromy eigenphases (-A^3)^2 and A^{-2}; for k >= 3 the
/// {|11>, |leak>} block is rotated by the F-matrix column into the vacuum
/// channel, which populates the leakage state.
TwoTreeState double_braid(const TwoTreeState& state);

/// Linear entropy of qubit i after projecting out the leakage sector and
/// tracing qubit j.  trace_first=false traces qubit i instead.
EntropyReport linear_entropy(const TwoTreeState& state, bool trace_second = true);

std::vector<EntropyReport> entropy_sweep(const std::vector<int>& levels);

}  // namespace anyonwalk
