#include "anyonwalk/walk.hpp"

#include <cmath>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace anyonwalk {

double PositionDistribution::sum() const {
    return std::accumulate(p.begin(), p.end(), 0.0);
}

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

/// Number of vacuum-total fusion paths for n strands at level k.
std::uint64_t path_count(int n, int k) {
    std::vector<std::uint64_t> cur(k + 1, 0), nxt(k + 1, 0);
    cur[0] = 1;
    for (int step = 0; step < n; ++step) {
        std::fill(nxt.begin(), nxt.end(), 0);
        for (int l = 0; l <= k; ++l) {
            if (!cur[l]) continue;
            if (l > 0) nxt[l - 1] += cur[l];
            if (l < k) nxt[l + 1] += cur[l];
        }
        std::swap(cur, nxt);
    }
    return cur[0];
}

struct Geometry {
    int n_sites;      // state slots
    int site0;        // coordinate of slot 0
    int braiding;     // strands taking part in braiding
    int strands;      // total strands incl. pad / idle partners
};

Geometry geometry(const WalkConfig& cfg) {
    Geometry g{};
    switch (cfg.boundary) {
        case BoundaryCondition::InfiniteWindow: {
            g.n_sites = 2 * cfg.t_max + 1;
            g.site0 = cfg.s0 - cfg.t_max;
            g.braiding = 2 * cfg.t_max + 1;
            break;
        }
        case BoundaryCondition::Periodic: {
            if (cfg.sites < 2) throw std::invalid_argument("periodic chain needs N >= 2");
            g.n_sites = cfg.sites;
            g.site0 = 1;
            g.braiding = cfg.sites + 1;  // N islands + walker
            break;
        }
        case BoundaryCondition::Reflective:
        case BoundaryCondition::Absorbing: {
            if (cfg.sites < 2) throw std::invalid_argument("finite chain needs N >= 2");
            g.n_sites = cfg.sites + 2;  // ancilla sites 0 and N+1
            g.site0 = 0;
            g.braiding = cfg.sites;  // N-1 islands + walker
            break;
        }
    }
    if (cfg.model.is_abelian()) {
        g.strands = g.braiding;
    } else if (cfg.closure == Closure::Markov) {
        g.strands = 2 * g.braiding;
    } else {
        g.strands = g.braiding + (g.braiding % 2);
    }
    return g;
}

}  // namespace

std::uint64_t state_bytes(const WalkConfig& cfg) {
    Geometry g = geometry(cfg);
    std::uint64_t fdim = cfg.model.is_abelian()
                             ? 1
                             : path_count(g.strands, cfg.model.k());
    return static_cast<std::uint64_t>(g.n_sites) * 2 * fdim * sizeof(cplx);
}

WalkEngine::WalkEngine(const WalkConfig& cfg) : cfg_(cfg) {
    if (cfg_.t_max < 0) throw std::invalid_argument("t_max must be >= 0");
    Geometry g = geometry(cfg_);
    std::uint64_t need = state_bytes(cfg_);
    if (need > cfg_.memory_budget)
        throw std::length_error("state vector needs " + std::to_string(need) +
                                " bytes, budget is " + std::to_string(cfg_.memory_budget));
    fusion_ = std::make_unique<FusionSpace>(g.strands, cfg_.model);
    fdim_ = fusion_->dim();
    n_sites_ = g.n_sites;
    site0_ = g.site0;
    state_.assign(static_cast<std::size_t>(n_sites_) * 2 * fdim_, cplx{0.0});
    scratch_.assign(fdim_, cplx{0.0});

    int slot0 = cfg_.s0 - site0_;
    if (slot0 < 0 || slot0 >= n_sites_) throw std::invalid_argument("s0 outside site range");
    if (cfg_.boundary == BoundaryCondition::Absorbing ||
        cfg_.boundary == BoundaryCondition::Reflective) {
        if (cfg_.s0 < 1 || cfg_.s0 > cfg_.sites)
            throw std::invalid_argument("s0 must be an interior site");
    }
    FusionVector f0 = (cfg_.closure == Closure::Markov && !cfg_.model.is_abelian())
                          ? fusion_->rainbow_state()
                          : fusion_->vacuum_state();
    if (cfg_.coin0 != 0 && cfg_.coin0 != 1) throw std::invalid_argument("coin0 must be 0 or 1");
    std::copy(f0.begin(), f0.end(), slice(slot0, cfg_.coin0).begin());
    lo_ = hi_ = slot0;

    if (cfg_.boundary == BoundaryCondition::Periodic) {
        // Rightward wrap (site N -> 1): the Eq.-1 braid with the wrap island,
        // then the relabeling word in operator-product order.
        int na = cfg_.sites + 1;
        wrap_right_.push(na - 1);
        BraidWord relabel = relabel_cycle_word(na).reversed();
        for (const auto& gg : relabel.gens) wrap_right_.gens.push_back(gg);
        wrap_left_ = wrap_right_.inverted();
    }
}

cplx WalkEngine::amplitude(int site, int coin, std::size_t f) const {
    int j = site - site0_;
    if (j < 0 || j >= n_sites_) return 0.0;
    return state_[idx(j, coin) + f];
}

double WalkEngine::live_norm() const {
    double n = 0.0;
    for (const auto& a : state_) n += std::norm(a);
    return n;
}

PositionDistribution WalkEngine::distribution() const {
    PositionDistribution d;
    d.site0 = site0_;
    d.p.assign(n_sites_, 0.0);
    for (int j = 0; j < n_sites_; ++j) {
        double v = 0.0;
        for (int c = 0; c < 2; ++c) {
            auto s = slice(j, c);
            for (const auto& a : s) v += std::norm(a);
        }
        d.p[j] = v;
    }
    return d;
}

void WalkEngine::coin_flip() {
    bool ancilla = cfg_.boundary == BoundaryCondition::Absorbing ||
                   cfg_.boundary == BoundaryCondition::Reflective;
    int first = ancilla ? 1 : 0;
    int last = ancilla ? n_sites_ - 2 : n_sites_ - 1;
    for (int j = std::max(lo_, first); j <= std::min(hi_, last); ++j) {
        auto a = slice(j, 0);
        auto b = slice(j, 1);
        for (std::size_t f = 0; f < fdim_; ++f) {
            cplx x = a[f], y = b[f];
            a[f] = kInvSqrt2 * (x + y);
            b[f] = kInvSqrt2 * (x - y);
        }
    }
}

void WalkEngine::shift() {
    const bool infinite = cfg_.boundary == BoundaryCondition::InfiniteWindow;
    const bool periodic = cfg_.boundary == BoundaryCondition::Periodic;
    const bool reflective = cfg_.boundary == BoundaryCondition::Reflective;
    const int N = cfg_.sites;

    auto move_slice = [&](int dst, int dc, int src, int sc, int gen) {
        auto d = slice(dst, dc);
        auto s = slice(src, sc);
        std::copy(s.begin(), s.end(), d.begin());
        if (gen > 0) fusion_->apply_generator(d, gen);
    };
    auto zero_slice = [&](int j, int c) {
        auto s = slice(j, c);
        std::fill(s.begin(), s.end(), cplx{0.0});
    };

    if (infinite) {
        int nlo = std::max(lo_ - 1, 0), nhi = std::min(hi_ + 1, n_sites_ - 1);
        // coin 1 moves right: walker at slot j-1 is strand j, braids island strand j+1.
        for (int j = nhi; j >= nlo + 1; --j) move_slice(j, 1, j - 1, 1, j);
        zero_slice(nlo, 1);
        // coin 0 moves left: walker at slot j+1 is strand j+2, braids island strand j+1.
        for (int j = nlo; j <= nhi - 1; ++j) move_slice(j, 0, j + 1, 0, j + 1);
        zero_slice(nhi, 0);
        lo_ = nlo;
        hi_ = nhi;
        return;
    }

    if (periodic) {
        // sites 1..N are slots 0..N-1; walker at site s is strand s.
        std::vector<cplx> stash_r(slice(N - 1, 1).begin(), slice(N - 1, 1).end());
        std::vector<cplx> stash_l(slice(0, 0).begin(), slice(0, 0).end());
        for (int j = N - 1; j >= 1; --j) move_slice(j, 1, j - 1, 1, j);  // right from site j
        for (int j = 0; j <= N - 2; ++j) move_slice(j, 0, j + 1, 0, j + 1);
        fusion_->apply_word(stash_r, wrap_right_);
        std::copy(stash_r.begin(), stash_r.end(), slice(0, 1).begin());
        fusion_->apply_word(stash_l, wrap_left_);
        std::copy(stash_l.begin(), stash_l.end(), slice(N - 1, 0).begin());
        lo_ = 0;
        hi_ = N - 1;
        return;
    }

    // Finite chain with ancilla slots 0 and N+1; islands sit between interior
    // sites only, so moves touching an ancilla braid trivially.
    std::vector<cplx> stash_l(slice(0, 0).begin(), slice(0, 0).end());
    std::vector<cplx> stash_r(slice(N + 1, 1).begin(), slice(N + 1, 1).end());
    for (int j = N + 1; j >= 1; --j) {
        int src = j - 1;
        int gen = (src >= 1 && src <= N - 1 && j <= N) ? src : 0;
        if (src >= 1)
            move_slice(j, 1, src, 1, gen);
        else
            zero_slice(j, 1);
    }
    for (int j = 0; j <= N; ++j) {
        int src = j + 1;
        int gen = (src >= 2 && src <= N && j >= 1) ? src - 1 : 0;
        if (src <= N)
            move_slice(j, 0, src, 0, gen);
        else
            zero_slice(j, 0);
    }
    if (reflective) {
        // Ancilla amplitude returns to the bulk with the coin flipped.
        auto d1 = slice(1, 1);
        for (std::size_t f = 0; f < fdim_; ++f) d1[f] += stash_l[f];
        auto dN = slice(N, 0);
        for (std::size_t f = 0; f < fdim_; ++f) dN[f] += stash_r[f];
    }
    lo_ = 0;
    hi_ = n_sites_ - 1;
}

void WalkEngine::absorb() {
    double m0 = 0.0, m1 = 0.0;
    for (int c = 0; c < 2; ++c) {
        for (auto& a : slice(0, c)) {
            m0 += std::norm(a);
            a = 0.0;
        }
        for (auto& a : slice(n_sites_ - 1, c)) {
            m1 += std::norm(a);
            a = 0.0;
        }
    }
    absorbed_left_ += m0;
    absorbed_right_ += m1;
}

void WalkEngine::step() {
    coin_flip();
    shift();
    if (cfg_.boundary == BoundaryCondition::Absorbing) absorb();
    ++t_;
}

void WalkEngine::evolve(const std::function<void(int, const PositionDistribution&)>& cb) {
    cb(0, distribution());
    for (int t = 1; t <= cfg_.t_max; ++t) {
        step();
        cb(t, distribution());
    }
}

}  // namespace anyonwalk
