#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "goldlab/learner.hpp"
#include "goldlab/program.hpp"

namespace goldlab {

// A finite text for the graph of a function: pairs (x, f(x)) in presentation order.
using FnSequence = std::vector<std::pair<Natural, Natural>>;

// Learner on function texts that outputs programs.
class FnLearner {
public:
    FnLearner(std::string name, std::function<FnProgram(const FnSequence&)> fn);

    FnProgram operator()(const FnSequence& tau) const { return fn_(tau); }
    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::function<FnProgram(const FnSequence&)> fn_;
};

// First candidate agreeing with every datum (evaluated up to evalCap steps);
// nowhere-defined when none does.
FnLearner enumerationFnLearner(std::vector<FnProgram> candidates, Budget evalCap = Budget{1} << 20);

// The positive data of σ, in order of first appearance, decoded as pairs.
FnSequence decodePositive(const Prefix& sigma);

// σ ↦ G(M(decodePositive(σ))).
Learner liftThroughG(FnLearner m);

// ĵ(n): the longest j with π₁(i) < n for every i < j.  Equals n(n+1)/2.
std::size_t hatLength(std::size_t n);

// τ̂: item i < ĵ(|τ|) is (⟨x_a, b⟩, 1) if τ(a) = (x_a, b) and label 0 otherwise,
// where (a, b) = π(i).
Prefix hatPrefix(const FnSequence& tau);

// τ ↦ H(M(τ̂)).
FnLearner liftThroughH(Learner m);

}  // namespace goldlab
