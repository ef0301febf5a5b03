#include "anyonwalk/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace anyonwalk {

double variance(const PositionDistribution& dist, int s0) {
    double m2 = 0.0;
    for (std::size_t i = 0; i < dist.p.size(); ++i) {
        double s = static_cast<double>(dist.site0) + static_cast<double>(i) - s0;
        m2 += dist.p[i] * s * s;
    }
    return m2;
}

ScalingFit classify_scaling(const std::vector<std::pair<int, double>>& series) {
    if (series.size() < 5) throw std::invalid_argument("need at least 5 points");
    ScalingFit fit;
    // log-log least squares
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (auto [t, v] : series) {
        if (t <= 0 || v <= 0) throw std::invalid_argument("degenerate series");
        double x = std::log(static_cast<double>(t)), y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    double den = n * sxx - sx * sx;
    if (std::abs(den) < 1e-12) throw std::invalid_argument("degenerate series");
    fit.exponent = (n * sxy - sx * sy) / den;

    // quadratic polynomial fit by normal equations
    double m[3][4] = {};
    for (auto [t, v] : series) {
        double x = t;
        double b[3] = {x * x, x, 1.0};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) m[i][j] += b[i] * b[j];
            m[i][3] += b[i] * v;
        }
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == col || std::abs(m[col][col]) < 1e-14) continue;
            double f = m[r][col] / m[col][col];
            for (int j = col; j < 4; ++j) m[r][j] -= f * m[col][j];
        }
    }
    fit.k2 = m[0][3] / m[0][0];
    fit.k1 = m[1][3] / m[1][1];
    fit.k0 = m[2][3] / m[2][2];

    if (fit.exponent >= 1.7)
        fit.classification = Scaling::Ballistic;
    else if (fit.exponent >= 0.7 && fit.exponent <= 1.3)
        fit.classification = Scaling::Diffusive;
    else if (fit.exponent <= 0.2)
        fit.classification = Scaling::Localized;
    else
        fit.classification = Scaling::Indeterminate;
    return fit;
}

PositionDistribution time_average(const std::vector<PositionDistribution>& traj, int t) {
    if (t < 0 || t >= static_cast<int>(traj.size()))
        throw std::invalid_argument("trajectory does not cover 0..t");
    PositionDistribution avg = traj[0];
    for (int tau = 1; tau <= t; ++tau) {
        if (traj[tau].site0 != avg.site0 || traj[tau].p.size() != avg.p.size())
            throw std::invalid_argument("trajectory domain mismatch");
        for (std::size_t i = 0; i < avg.p.size(); ++i) avg.p[i] += traj[tau].p[i];
    }
    for (auto& x : avg.p) x /= (t + 1);
    return avg;
}

double total_variation(const PositionDistribution& a, const PositionDistribution& b) {
    if (a.site0 != b.site0 || a.p.size() != b.p.size())
        throw std::invalid_argument("distribution domain mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.p.size(); ++i) d += std::abs(a.p[i] - b.p[i]);
    return d;
}

std::optional<int> mixing_time(const std::vector<PositionDistribution>& traj,
                               const PositionDistribution& pi, double eps) {
    int T = static_cast<int>(traj.size());
    int first_bad = -1;
    for (int t = T - 1; t >= 0; --t) {
        if (total_variation(traj[t], pi) > eps) {
            first_bad = t;
            break;
        }
    }
    if (first_bad == T - 1) return std::nullopt;  // tail condition not checkable
    return first_bad + 1;
}

std::vector<double> distance_to_final(const std::vector<PositionDistribution>& traj, int T) {
    if (T >= static_cast<int>(traj.size())) throw std::invalid_argument("T beyond trajectory");
    // cumulative averages in one pass
    std::vector<double> out(T + 1);
    PositionDistribution ref = time_average(traj, T);
    PositionDistribution acc = traj[0];
    for (int t = 0; t <= T; ++t) {
        if (t > 0)
            for (std::size_t i = 0; i < acc.p.size(); ++i) acc.p[i] += traj[t].p[i];
        PositionDistribution avg = acc;
        for (auto& x : avg.p) x /= (t + 1);
        out[t] = total_variation(avg, ref);
    }
    return out;
}

ClassicalWalk classical_rw_reference(int sites, int s0, int t_max,
                                     BoundaryCondition boundary) {
    ClassicalWalk out;
    if (boundary == BoundaryCondition::Periodic) {
        std::vector<double> p(sites, 0.0);
        p[s0 - 1] = 1.0;
        auto snap = [&]() {
            PositionDistribution d;
            d.site0 = 1;
            d.p = p;
            out.trajectory.push_back(std::move(d));
        };
        snap();
        for (int t = 0; t < t_max; ++t) {
            std::vector<double> q(sites, 0.0);
            for (int i = 0; i < sites; ++i) {
                q[(i + 1) % sites] += 0.5 * p[i];
                q[(i + sites - 1) % sites] += 0.5 * p[i];
            }
            p = std::move(q);
            snap();
        }
        return out;
    }
    if (boundary == BoundaryCondition::Absorbing) {
        std::vector<double> p(sites + 2, 0.0);
        p[s0] = 1.0;
        double absorbed = 0.0;
        auto snap = [&]() {
            PositionDistribution d;
            d.site0 = 0;
            d.p = p;
            out.trajectory.push_back(std::move(d));
        };
        snap();
        for (int t = 0; t < t_max; ++t) {
            std::vector<double> q(sites + 2, 0.0);
            for (int i = 1; i <= sites; ++i) {
                q[i - 1] += 0.5 * p[i];
                q[i + 1] += 0.5 * p[i];
            }
            absorbed += q[0] + q[sites + 1];
            q[0] = q[sites + 1] = 0.0;
            p = std::move(q);
            out.exit_series.push_back(absorbed);
            snap();
        }
        return out;
    }
    if (boundary == BoundaryCondition::Reflective) {
        std::vector<double> p(sites, 0.0);
        p[s0 - 1] = 1.0;
        auto snap = [&]() {
            PositionDistribution d;
            d.site0 = 1;
            d.p = p;
            out.trajectory.push_back(std::move(d));
        };
        snap();
        for (int t = 0; t < t_max; ++t) {
            std::vector<double> q(sites, 0.0);
            for (int i = 0; i < sites; ++i) {
                int l = (i == 0) ? 0 : i - 1;
                int r = (i == sites - 1) ? sites - 1 : i + 1;
                q[l] += 0.5 * p[i];
                q[r] += 0.5 * p[i];
            }
            p = std::move(q);
            snap();
        }
        return out;
    }
    throw std::invalid_argument("classical reference needs a finite boundary");
}

std::vector<PositionDistribution> hadamard_reference(WalkConfig cfg) {
    cfg.model = AnyonModel::abelian(0.0);
    WalkEngine engine(cfg);
    std::vector<PositionDistribution> traj;
    traj.reserve(cfg.t_max + 1);
    engine.evolve([&](int, const PositionDistribution& d) { traj.push_back(d); });
    return traj;
}

std::vector<double> exit_probability(const WalkConfig& cfg) {
    if (cfg.boundary != BoundaryCondition::Absorbing)
        throw std::invalid_argument("exit probability needs absorbing boundaries");
    WalkEngine engine(cfg);
    std::vector<double> series;
    series.reserve(cfg.t_max);
    for (int t = 1; t <= cfg.t_max; ++t) {
        engine.step();
        series.push_back(engine.absorbed_total());
    }
    return series;
}

}  // namespace anyonwalk
