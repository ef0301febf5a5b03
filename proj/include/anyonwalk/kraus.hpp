#pragma once

#include <map>
#include <vector>

#include "anyonwalk/models.hpp"

namespace anyonwalk {

/// Dense density matrix over a window of sites.
struct PositionDensityMatrix {
    int window = 0;
    std::vector<cplx> m;  // row-major window x window

    static PositionDensityMatrix delta(int window, int site);
    cplx& at(int r, int c) { return m[static_cast<std::size_t>(r) * window + c]; }
    cplx at(int r, int c) const { return m[static_cast<std::size_t>(r) * window + c]; }
    double trace() const;
    std::vector<double> diagonal() const;
    double variance(int s0) const;
};

/// One Kraus generator of the two-step model: a banded shift-covariant
/// operator E = sum_d amp[d] S^d with d in {-2, 0, +2}.
struct KrausOp {
    std::map<int, cplx> amp;
};

/// The W^2 decoherence channel: two exact walk steps against a fresh local
/// fusion register and a refreshed (traced-out, i.e. maximally mixed) coin,
/// then fusion and coin are traced away.  Operators are labelled by the
/// local fusion basis and the in/out coin states.
struct KrausSet {
    AnyonModel model;
    std::vector<KrausOp> ops;
};

KrausSet build_w2_kraus(const AnyonModel& model);

/// rho <- sum_fc E rho E^dag; transitions leaving the window are dropped
/// (absorbing edges), so size the window to keep support interior.
void apply_channel(PositionDensityMatrix& rho, const KrausSet& kraus);

/// sum E^dag E over a window (identity on interior columns).
PositionDensityMatrix kraus_completeness(const KrausSet& kraus, int window);

/// Closed-form distribution of the channel treated as exactly circulant,
/// diagonalized in the momentum basis: p_t(s) for a walker starting at the
/// window centre.  O(modes^2) per call.
class CirculantChannel {
  public:
    CirculantChannel(const KrausSet& kraus, int modes);
    /// Distribution over displacement s-s0 in [-modes/2, modes/2).
    std::vector<double> distribution(int t) const;
    double variance(int t) const;

  private:
    int modes_;
    std::vector<std::vector<cplx>> ehat_;  // per op, per mode
};

/// Classical binomial reference p(s,t) = 2^{-t} C(t, (2t-(s-s0))/4);
/// zero off the support lattice.
double binomial_reference(int s, int t, int s0);

}  // namespace anyonwalk
