#include "anyonwalk/pathsum.hpp"

#include <cmath>
#include <stdexcept>

namespace anyonwalk {

int z_count(const PathVector& a) {
    int z = 0;
    for (std::size_t j = 0; j + 1 < a.size(); ++j) z += a[j] * a[j + 1];
    return z;
}

std::vector<int> braid_word_for_path(const PathVector& a, int s0) {
    std::vector<int> word;
    word.reserve(a.size());
    int s = s0;
    for (int step : a) {
        if (step == 1) {
            word.push_back(s);
            ++s;
        } else {
            word.push_back(s - 1);
            --s;
        }
    }
    return word;
}

PathSumResult path_sum_distribution(const AnyonModel& model, int s0, int t,
                                    const PathSumOptions& opt) {
    if (t < 1) throw std::invalid_argument("path sum needs t >= 1");
    if (t > opt.t_cap) throw std::length_error("path sum cap exceeded (cost 4^t)");

    // Window strands: walker + islands s0-t .. s0+t-1; island at site-index i
    // is strand i - (s0 - t) + 1 when left of the walker.
    const int braiding = 2 * t + 1;
    int strands;
    if (model.is_abelian())
        strands = braiding;
    else if (opt.closure == Closure::Markov)
        strands = 2 * braiding;
    else
        strands = braiding + (braiding % 2);
    FusionSpace space(strands, model);
    FusionVector phi0 = (opt.closure == Closure::Markov && !model.is_abelian())
                            ? space.rainbow_state()
                            : space.vacuum_state();

    // B_a |Phi0> for all 2^t trajectories via a prefix-sharing DFS.
    const std::size_t npaths = std::size_t{1} << t;
    const std::size_t dim = space.dim();
    std::vector<FusionVector> vecs(npaths);
    std::vector<int> endpoint(npaths);
    PathVector a;
    a.reserve(t);
    FusionVector work = phi0;
    auto dfs = [&](auto&& self, int pos_site, std::size_t code) -> void {
        if (static_cast<int>(a.size()) == t) {
            vecs[code] = work;
            endpoint[code] = pos_site;
            return;
        }
        FusionVector saved = work;
        // left move: braid island at site pos_site-1 = strand (pos_site-1)-(s0-t)+1
        {
            int g = (pos_site - 1) - (s0 - t) + 1;
            space.apply_generator(work, g);
            a.push_back(0);
            self(self, pos_site - 1, code << 1);
            a.pop_back();
            work = saved;
        }
        {
            int g = pos_site - (s0 - t) + 1;
            space.apply_generator(work, g);
            a.push_back(1);
            self(self, pos_site + 1, (code << 1) | 1);
            a.pop_back();
            work = saved;
        }
    };
    dfs(dfs, s0, 0);

    auto zbits = [&](std::size_t code) {
        int z = 0;
        for (int j = 0; j + 1 < t; ++j) {
            int hi = (code >> (t - 1 - j)) & 1;
            int lo = (code >> (t - 2 - j)) & 1;
            z += hi & lo;
        }
        return z;
    };

    std::map<int, cplx> acc;
    const double scale = std::pow(0.5, t);
    for (std::size_t i = 0; i < npaths; ++i) {
        for (std::size_t j = 0; j < npaths; ++j) {
            if (endpoint[i] != endpoint[j]) continue;
            if ((i & 1) != (j & 1)) continue;  // a_t must match
            int sign = ((zbits(i) + zbits(j)) % 2 == 0) ? 1 : -1;
            cplx tr = 0.0;
            for (std::size_t f = 0; f < dim; ++f) tr += std::conj(vecs[j][f]) * vecs[i][f];
            acc[endpoint[i]] += static_cast<double>(sign) * scale * tr;
        }
    }
    PathSumResult res;
    for (const auto& [site, val] : acc) {
        res.p[site] = val.real();
        res.imag_max = std::max(res.imag_max, std::abs(val.imag()));
    }
    return res;
}

double path_sum_probability(const AnyonModel& model, int s, int s0, int t,
                            const PathSumOptions& opt) {
    auto r = path_sum_distribution(model, s0, t, opt);
    auto it = r.p.find(s);
    return it == r.p.end() ? 0.0 : it->second;
}

}  // namespace anyonwalk
