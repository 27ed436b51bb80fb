#pragma once

#include <optional>

#include "goldlab/learner.hpp"

namespace goldlab {

// σ ↦ M(Σ(σ)).  Equal pos/ng sets give equal outputs.
Learner setDrivenWrap(Learner m);

// σ ↦ M(σ[s]) for the largest s ≤ |σ| whose cost is at most |σ| (s = 0 if
// none).  Throws PreconditionError when M does not halt on the empty prefix.
Learner totalize(Learner m);

// σ ↦ pad(M(σ), |σ|) when M changes its mind at σ (or σ is empty), else the
// previous output.  Abandoned codes never recur.  Memoized per instance.
Learner synDecPad(Learner m);

// One state of the increasing approximation A^t_σ of M(σ)'s extension that
// the conservative rewrite publishes as its hypothesis for σ.
struct ApproxChainState {
    Prefix sigma;
    Budget t = 0;
    NatSet a;
    Hypothesis baseHyp;
};

// A^0_σ = pos(σ).
ApproxChainState initialApprox(const Learner& m, const Prefix& sigma);

// A^{t+1}_σ from A^t_σ, straight from the definition:
//   W^t if ng(σ) meets A^t;
//   else the largest initial segment X of W^t with A^t ⊊ X and
//        M(σ) = M(canonical prefix of W^t of length r(X)),
//        r(X) = least r in [|σ|, t] with X ⊆ W^r;
//   else A^t.
// No candidate exists while t < |σ|.  Positions of the canonical prefix that
// W^t does not list are labeled 0.  The window stops before position r(X):
// a lifted descriptor has not listed r(X) by step r(X), and reading it as 0
// lets a hypothesis that turns out consistent be abandoned.
ApproxChainState advanceApprox(const Learner& m, const ApproxChainState& st);

// Conservative, strongly decisive rewrite of a total, syntactically decisive
// learner.  The hypothesis issued at σ enumerates A^t_σ at step t.
Learner convSDecTransform(Learner m);

// The prefix at which the hypothesis current at σ was issued, as tracked
// incrementally by a learner built with convSDecTransform.
Prefix convSDecAnchor(const Learner& transformed, const Prefix& sigma);

// Shortest initial segment τ of σ with M(ρ) = M(σ) for every τ ⊑ ρ ⊑ σ.
Prefix lastMindChange(const Learner& m, const Prefix& sigma);

// Union vote over guardXi(σ, M(σ[i])), i ≤ |σ|, skipping every M(σ[i]) that
// already enumerates more than a values of ng(σ) within |σ| steps.  With a
// unset every index votes.
Learner vacillationCollapse(Learner m, std::optional<Natural> a);

}  // namespace goldlab
