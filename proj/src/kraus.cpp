#include "anyonwalk/kraus.hpp"

#include <cmath>
#include <stdexcept>

#include "anyonwalk/fusion.hpp"

namespace anyonwalk {

PositionDensityMatrix PositionDensityMatrix::delta(int window, int site) {
    PositionDensityMatrix r;
    r.window = window;
    r.m.assign(static_cast<std::size_t>(window) * window, cplx{0.0});
    r.at(site, site) = 1.0;
    return r;
}

double PositionDensityMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < window; ++i) t += at(i, i).real();
    return t;
}

std::vector<double> PositionDensityMatrix::diagonal() const {
    std::vector<double> d(window);
    for (int i = 0; i < window; ++i) d[i] = at(i, i).real();
    return d;
}

double PositionDensityMatrix::variance(int s0) const {
    double v = 0.0;
    for (int i = 0; i < window; ++i) v += at(i, i).real() * (i - s0) * (i - s0);
    return v;
}

KrausSet build_w2_kraus(const AnyonModel& model) {
    // Local register: strands (i_{-2}, i_{-1}, W, i_0, i_{+1}, spectator).
    // Islands pair with their neighbours, the walker cup-pairs with the
    // spectator; this is the unique pairing for which sum E^dag E = 1 exactly.
    FusionSpace space(6, model);
    FusionVector phi0;
    if (model.is_abelian()) {
        phi0 = space.vacuum_state();
    } else {
        phi0.assign(space.dim(), cplx{0.0});
        const int k = model.k();
        const double d = model.quantum_dimension();
        for (std::size_t f = 0; f < space.dim(); ++f) {
            auto lab = space.path(f);
            // labels x_1..x_5; pair (1,2) vacuum => x_2 = 0; pair (4,5) vacuum
            // over the walker's charge line => x_5 = 1; x_3 = 1 (walker line).
            if (lab[1] == 0 && lab[2] == 1 && lab[4] == 1)
                phi0[f] = std::sqrt(quantum_integer(k, lab[3] + 1) /
                                    (d * quantum_integer(k, 2)));
        }
    }

    // Two-step trajectories from the centre: words in local strand indices.
    struct Traj {
        int a1, a2;
        std::vector<int> gens;
    };
    const Traj trajs[4] = {
        {0, 0, {2, 1}},  // LL
        {0, 1, {2, 2}},  // LR
        {1, 0, {3, 3}},  // RL
        {1, 1, {3, 4}},  // RR
    };
    std::vector<FusionVector> vecs(4);
    for (int i = 0; i < 4; ++i) {
        vecs[i] = phi0;
        for (int g : trajs[i].gens) space.apply_generator(vecs[i], g);
    }

    const double r = 1.0 / std::sqrt(2.0);
    auto had = [&](int row, int col) { return (row == 1 && col == 1) ? -r : r; };

    KrausSet set;
    set.model = model;
    const double w_in = r;  // maximally mixed coin refresh
    for (int cin = 0; cin < 2; ++cin) {
        for (int cout = 0; cout < 2; ++cout) {
            for (std::size_t f = 0; f < space.dim(); ++f) {
                KrausOp op;
                for (int i = 0; i < 4; ++i) {
                    if (trajs[i].a2 != cout) continue;
                    double amp = had(trajs[i].a1, cin) * had(trajs[i].a2, trajs[i].a1);
                    int delta = 2 * (trajs[i].a1 + trajs[i].a2) - 2;
                    op.amp[delta] += w_in * amp * vecs[i][f];
                }
                set.ops.push_back(std::move(op));
            }
        }
    }
    return set;
}

void apply_channel(PositionDensityMatrix& rho, const KrausSet& kraus) {
    const int W = rho.window;
    PositionDensityMatrix out;
    out.window = W;
    out.m.assign(rho.m.size(), cplx{0.0});
    for (const auto& op : kraus.ops) {
        for (const auto& [d1, x1] : op.amp) {
            if (std::norm(x1) < 1e-30) continue;
            for (const auto& [d2, x2] : op.amp) {
                if (std::norm(x2) < 1e-30) continue;
                cplx w = x1 * std::conj(x2);
                int r0 = std::max(0, d1), r1 = std::min(W, W + d1);
                int c0 = std::max(0, d2), c1 = std::min(W, W + d2);
                for (int rr = r0; rr < r1; ++rr) {
                    const cplx* src = &rho.m[static_cast<std::size_t>(rr - d1) * W + (c0 - d2)];
                    cplx* dst = &out.m[static_cast<std::size_t>(rr) * W + c0];
                    for (int cc = 0; cc < c1 - c0; ++cc) dst[cc] += w * src[cc];
                }
            }
        }
    }
    rho = std::move(out);
}

PositionDensityMatrix kraus_completeness(const KrausSet& kraus, int window) {
    PositionDensityMatrix s;
    s.window = window;
    s.m.assign(static_cast<std::size_t>(window) * window, cplx{0.0});
    for (const auto& op : kraus.ops) {
        // (E^dag E)[c1, c2] = sum_r conj(E[r,c1]) E[r,c2]
        for (const auto& [d1, x1] : op.amp) {
            for (const auto& [d2, x2] : op.amp) {
                // r = c1 + d1 = c2 + d2
                for (int c1 = 0; c1 < window; ++c1) {
                    int rr = c1 + d1;
                    int c2 = rr - d2;
                    if (rr < 0 || rr >= window || c2 < 0 || c2 >= window) continue;
                    s.at(c1, c2) += std::conj(x1) * x2;
                }
            }
        }
    }
    return s;
}

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

CirculantChannel::CirculantChannel(const KrausSet& kraus, int modes) : modes_(modes) {
    ehat_.reserve(kraus.ops.size());
    for (const auto& op : kraus.ops) {
        std::vector<cplx> e(modes_);
        for (int m = 0; m < modes_; ++m) {
            double theta = kTwoPi * m / modes_;
            cplx v = 0.0;
            for (const auto& [d, x] : op.amp)
                v += x * cplx{std::cos(theta * d), -std::sin(theta * d)};
            e[m] = v;
        }
        ehat_.push_back(std::move(e));
    }
}

std::vector<double> CirculantChannel::distribution(int t) const {
    // rho_t(theta, theta') = M(theta, theta')^t with M = sum Ehat(theta) conj(Ehat(theta'));
    // p(s) is the double Fourier sum, reduced to O(modes^2) via u = a - b.
    std::vector<cplx> G(modes_, cplx{0.0});
    for (int u = 0; u < modes_; ++u) {
        cplx g = 0.0;
        for (int a = 0; a < modes_; ++a) {
            int b = (a - u + modes_) % modes_;
            cplx m = 0.0;
            for (const auto& e : ehat_) m += e[a] * std::conj(e[b]);
            g += std::pow(m, t);
        }
        G[u] = g / static_cast<double>(modes_);
    }
    std::vector<double> p(modes_, 0.0);
    const int c = modes_ / 2;
    for (int s = 0; s < modes_; ++s) {
        double disp = s - c;
        cplx acc = 0.0;
        for (int u = 0; u < modes_; ++u) {
            double phase = kTwoPi * u * disp / modes_;
            acc += G[u] * cplx{std::cos(phase), std::sin(phase)};
        }
        p[s] = acc.real() / modes_;
    }
    return p;
}

double CirculantChannel::variance(int t) const {
    auto p = distribution(t);
    double v = 0.0;
    int c = modes_ / 2;
    for (int s = 0; s < modes_; ++s) v += p[s] * (s - c) * (s - c);
    return v;
}

double binomial_reference(int s, int t, int s0) {
    long long num = 2LL * t - (s - s0);
    if (num < 0 || num % 4 != 0) return 0.0;
    long long j = num / 4;
    if (j < 0 || j > t) return 0.0;
    double logp = -t * std::log(2.0);
    for (int i = 0; i < j; ++i) logp += std::log(static_cast<double>(t - i)) - std::log(static_cast<double>(j - i));
    return std::exp(logp);
}

}  // namespace anyonwalk
