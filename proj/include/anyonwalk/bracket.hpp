#pragma once

#include "anyonwalk/fusion.hpp"
#include "anyonwalk/models.hpp"

namespace anyonwalk {

/// Sum of crossing signs: +1 per generator, -1 per inverse.
int writhe(const BraidWord& word);

/// Kauffman bracket of the Markov (trace) closure of a braid word, evaluated
/// by the state sum over all 2^c smoothings with loop weight
/// d = -A^2 - A^{-2}.  Convention: a counterclockwise crossing resolves with
/// weight A on the cup-cap smoothing and A^{-1} on the pass-through (matching
/// the representation b = A^{-1} 1 + A e); clockwise crossings swap the two.
/// Normalized so the unknot evaluates to 1.  Throws if crossings > cap.
cplx kauffman_bracket(const BraidWord& word, int strands, cplx A, int crossing_cap = 24);

struct LinkEvaluation {
    BraidWord word;
    int strands = 0;
    cplx bracket{};
    int writhe = 0;
    cplx jones{};  // (-A^3)^{-w} <L>
};

LinkEvaluation evaluate_link(const BraidWord& word, int strands, cplx A,
                             int crossing_cap = 24);

/// Dual-route check of the fusion-trace / bracket identity: the left side is
/// <Phi0| B |Phi0> with the nested-pair Markov state on doubled strands, the
/// right side the bracket of the Markov closure divided by d^{strands-1}.
struct TraceIdentityReport {
    cplx fusion_side{};
    cplx bracket_side{};
    double difference = 0.0;
};

TraceIdentityReport verify_trace_identity(const BraidWord& word, int strands,
                                          const AnyonModel& model,
                                          int crossing_cap = 24);

}  // namespace anyonwalk
