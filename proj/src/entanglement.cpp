#include "anyonwalk/entanglement.hpp"

#include <cmath>
#include <stdexcept>

namespace anyonwalk {

double TwoTreeState::norm() const {
    double n = 0.0;
    for (const auto& a : amp) n += std::norm(a);
    return n;
}

TwoTreeState initial_two_tree_state(int k) {
    if (k < 1) throw std::invalid_argument("level must be >= 1");
    TwoTreeState s;
    s.k = k;
    const double d = 2.0 * std::cos(3.14159265358979323846 / (k + 2));
    const double alpha = 1.0 / d;
    const double beta = std::sqrt(std::max(0.0, d * d - 1.0)) / d;
    s.amp[0] = alpha * alpha;
    s.amp[1] = alpha * beta;
    s.amp[2] = beta * alpha;
    s.amp[3] = beta * beta;
    s.amp[4] = 0.0;
    return s;
}

TwoTreeState double_braid(const TwoTreeState& state) {
    const int k = state.k;
    const auto model = AnyonModel::su2k(k);
    const cplx A = model.tl_param();
    const cplx ph0 = std::pow(-A * A * A, 2);  // pair channel 0 monodromy
    const cplx ph1 = 1.0 / (A * A);            // pair channel 1 monodromy
    TwoTreeState out = state;
    out.amp[0] = ph0 * state.amp[0];
    out.amp[1] = ph1 * state.amp[1];
    out.amp[2] = ph1 * state.amp[2];
    if (k <= 2) {
        // no leakage sector in the truncated theory
        out.amp[3] = ph0 * state.amp[3];
        out.amp[4] = 0.0;
        return out;
    }
    const double d = 2.0 * std::cos(3.14159265358979323846 / (k + 2));
    const double c = 1.0 / d;
    const double s = std::sqrt(d * d - 1.0) / d;
    // block on {|11>, |leak>}: F-column (c, s) spans the vacuum channel
    const cplx b00 = c * c * ph0 + s * s * ph1;
    const cplx b01 = c * s * (ph0 - ph1);
    const cplx b11 = s * s * ph0 + c * c * ph1;
    out.amp[3] = b00 * state.amp[3] + b01 * state.amp[4];
    out.amp[4] = b01 * state.amp[3] + b11 * state.amp[4];
    return out;
}

EntropyReport linear_entropy(const TwoTreeState& state, bool trace_second) {
    // project onto the two-qubit sector and trace one qubit
    cplx m[2][2];
    if (trace_second) {
        // rho_i[e,e'] = sum_f psi[e,f] conj(psi[e',f])
        m[0][0] = state.amp[0] * std::conj(state.amp[0]) + state.amp[1] * std::conj(state.amp[1]);
        m[0][1] = state.amp[0] * std::conj(state.amp[2]) + state.amp[1] * std::conj(state.amp[3]);
        m[1][0] = std::conj(m[0][1]);
        m[1][1] = state.amp[2] * std::conj(state.amp[2]) + state.amp[3] * std::conj(state.amp[3]);
    } else {
        m[0][0] = state.amp[0] * std::conj(state.amp[0]) + state.amp[2] * std::conj(state.amp[2]);
        m[0][1] = state.amp[0] * std::conj(state.amp[1]) + state.amp[2] * std::conj(state.amp[3]);
        m[1][0] = std::conj(m[0][1]);
        m[1][1] = state.amp[1] * std::conj(state.amp[1]) + state.amp[3] * std::conj(state.amp[3]);
    }
    double tr = (m[0][0] + m[1][1]).real();
    if (tr < 1e-300) throw std::domain_error("projected state has zero norm");
    double tr2 = (m[0][0] * m[0][0] + m[0][1] * m[1][0] + m[1][0] * m[0][1] +
                  m[1][1] * m[1][1])
                     .real();
    EntropyReport r;
    r.k = state.k;
    r.q = 2.0 * (1.0 - tr2 / (tr * tr));
    r.leakage = state.leakage_weight();
    r.k2q = static_cast<double>(state.k) * state.k * r.q;
    return r;
}

std::vector<EntropyReport> entropy_sweep(const std::vector<int>& levels) {
    std::vector<EntropyReport> out;
    out.reserve(levels.size());
    for (int k : levels) {
        TwoTreeState psi2 = double_braid(initial_two_tree_state(k));
        out.push_back(linear_entropy(psi2));
    }
    return out;
}

}  // namespace anyonwalk
