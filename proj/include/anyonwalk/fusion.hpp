#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "anyonwalk/models.hpp"

namespace anyonwalk {

/// One braid group generator, 1-based index; inverse = clockwise crossing.
struct BraidGenerator {
    int index;
    bool inverse = false;
};

/// A braid word; apply_braid_word applies elements left to right
/// (first element acts first on the state).
struct BraidWord {
    std::vector<BraidGenerator> gens;

    BraidWord() = default;
    BraidWord(std::initializer_list<BraidGenerator> g) : gens(g) {}
    std::size_t size() const { return gens.size(); }
    void push(int index, bool inverse = false) { gens.push_back({index, inverse}); }
    /// Reversed sequence of inverses (the inverse word).
    BraidWord inverted() const;
    /// Same generators in reverse sequence order.
    BraidWord reversed() const;
};

using FusionVector = std::vector<cplx>;

/// The fusion Hilbert space of n identical spin-1/2 anyons of an SU(2)_k /
/// Ising model, in the sequential fusion path basis with total charge vacuum.
/// Basis paths x_0=0, x_1, ..., x_n=0 with |x_j - x_{j-1}| = 1, 0 <= x_j <= k
/// (labels are twice-spin integers).  Generators act as precomputed sparse
/// 1x1/2x2 blocks; no dense matrix is ever materialized.
///
/// AbelianPhase models: dimension 1, each generator is the scalar e^{i phi/2}.
class FusionSpace {
  public:
    FusionSpace(int n_strands, const AnyonModel& model);

    int strand_count() const { return n_; }
    std::size_t dim() const { return dim_; }
    const AnyonModel& model() const { return model_; }

    /// Label sequence of basis state f (empty for abelian models).
    std::vector<std::uint8_t> path(std::size_t f) const;

    /// b_g (or its inverse) applied in place.  g in 1..n-1.
    void apply_generator(std::span<cplx> amps, int g, bool inverse = false) const;
    void apply_word(std::span<cplx> amps, const BraidWord& word) const;

    /// All adjacent pairs (1,2)(3,4)... fused to vacuum; for k=2 this is the
    /// all-zero qubit string.
    FusionVector vacuum_state() const;

    /// Nested-cup state for a Markov-closure setup: strand i paired with
    /// strand n+1-i; the first n/2 strands braid, the rest stay idle.
    /// Requires even n.
    FusionVector rainbow_state() const;

    /// Index of the basis path whose labels are `labels` (x_1..x_{n-1}).
    std::size_t index_of(const std::vector<std::uint8_t>& labels) const;

  private:
    AnyonModel model_;
    int n_;
    int k_ = 0;
    std::size_t dim_;
    cplx phase_ = 1.0;  // abelian generator value
    std::vector<std::uint8_t> labels_;        // dim_ x (n_-1), flattened
    std::vector<double> qdim_;                // [l+1] per label l
    // per generator g (1-based): partner index (or self), e-diagonal, e-offdiag
    std::vector<std::vector<std::int64_t>> partner_;
    std::vector<std::vector<double>> ediag_;
    std::vector<std::vector<double>> eoff_;
};

/// The cyclic relabeling word of the periodic chain, [b_1, ..., b_{N_A-1}].
BraidWord relabel_cycle_word(int n_anyons);

}  // namespace anyonwalk
