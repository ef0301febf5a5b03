#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "anyonwalk/fusion.hpp"
#include "anyonwalk/models.hpp"

namespace anyonwalk {

enum class BoundaryCondition { InfiniteWindow, Periodic, Reflective, Absorbing };
enum class Closure { Plat, Markov };

/// p(s) over a site range; `site0` is the coordinate of entry 0.
struct PositionDistribution {
    int site0 = 0;
    std::vector<double> p;

    double at(int site) const {
        int i = site - site0;
        return (i >= 0 && i < static_cast<int>(p.size())) ? p[i] : 0.0;
    }
    double sum() const;
};

struct WalkConfig {
    AnyonModel model = AnyonModel::ising();
    BoundaryCondition boundary = BoundaryCondition::InfiniteWindow;
    Closure closure = Closure::Plat;
    int sites = 0;       // chain length N (finite boundaries); ignored for InfiniteWindow
    int s0 = 0;          // 1-based for finite chains; free integer for the window
    int coin0 = 0;       // initial coin basis state
    int t_max = 16;
    std::uint64_t memory_budget = 2'000'000'000;  // bytes
};

/// Bytes needed for the state vector of a configuration.
std::uint64_t state_bytes(const WalkConfig& cfg);

/// Discrete-time anyonic walk over H_S (x) H_F (x) H_C, one step = Hadamard
/// coin flip followed by the conditional braiding shift.
///
/// InfiniteWindow realizes the infinite line exactly on [s0-t_max, s0+t_max].
/// Periodic chains insert the cyclic relabeling word on wraparound.
/// Absorbing chains project boundary-site amplitude out after every step and
/// accumulate it; Reflective chains bounce it back with the coin flipped.
class WalkEngine {
  public:
    explicit WalkEngine(const WalkConfig& cfg);

    void step();
    int time() const { return t_; }
    const WalkConfig& config() const { return cfg_; }
    const FusionSpace& fusion() const { return *fusion_; }

    PositionDistribution distribution() const;
    double live_norm() const;
    double absorbed_left() const { return absorbed_left_; }
    double absorbed_right() const { return absorbed_right_; }
    double absorbed_total() const { return absorbed_left_ + absorbed_right_; }

    /// Amplitude of (site, coin, fusion index); mainly for tests.
    cplx amplitude(int site, int coin, std::size_t f) const;

    /// Runs t_max steps, invoking cb after every step (including the initial
    /// distribution at t=0 before the first step).
    void evolve(const std::function<void(int, const PositionDistribution&)>& cb);

  private:
    void coin_flip();
    void shift();
    void absorb();

    std::size_t idx(int site_idx, int coin) const {
        return (static_cast<std::size_t>(site_idx) * 2 + coin) * fdim_;
    }
    std::span<cplx> slice(int site_idx, int coin) {
        return {state_.data() + idx(site_idx, coin), fdim_};
    }
    std::span<const cplx> slice(int site_idx, int coin) const {
        return {state_.data() + idx(site_idx, coin), fdim_};
    }

    WalkConfig cfg_;
    std::unique_ptr<FusionSpace> fusion_;
    std::size_t fdim_;
    int n_sites_;       // number of site slots in the state array
    int site0_;         // coordinate of slot 0
    int t_ = 0;
    int lo_ = 0, hi_ = 0;  // active slot range (inclusive)
    double absorbed_left_ = 0.0, absorbed_right_ = 0.0;
    std::vector<cplx> state_;  // [site][coin][fusion]
    std::vector<cplx> scratch_;
    BraidWord wrap_right_, wrap_left_;
};

}  // namespace anyonwalk
