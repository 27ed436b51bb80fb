#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "goldlab/learner.hpp"

namespace goldlab {

// Maps a minimum value m to the language whose least element is m; stands in
// for a self-coding enumeration where the index of a language is its minimum.
struct MinResolver {
    std::string name;
    std::function<std::optional<LangDescriptor>(Natural m)> lookup;

    // Throws ConfigError when m is unmapped or the mapped language's minimum is not m.
    LangDescriptor operator()(Natural m) const;

    static MinResolver fromFamily(std::shared_ptr<const UniformFamily> family);
    static MinResolver fromTable(std::string name, std::map<Natural, LangDescriptor> table);
};

namespace learners {

// ℕ minus everything labeled 0 so far.
Learner cofinite();
// 2ℕ while pos(σ) has only even values, else Split({x : 2x ∈ pos(σ)}).
Learner splitFamily();
// 2ℕ∪{1} while 1 ∈ ng(σ) and 2 ∉ pos(σ), else 2ℕ.  U-shaped on 2ℕ.
Learner evensWMon();
// 2ℕ∪{1} once 1 ∈ pos(σ), otherwise as evensWMon.  Learns {2ℕ, 2ℕ∪{1}}.
Learner evensPair();
// DoubledPair(D, x) for the least x with 2x ∈ ng(σ), 2x+1 ∈ pos(σ); DoubledPair(D) if none.
Learner doubledPair(LangDescriptor d);
// ℕ while ng(σ) is empty, D afterwards.
Learner pairDistinguisher(LangDescriptor d);
// Least m with (2m or 2m+1) ∈ pos(σ) and, for all k < m, (2k or 2k+1) ∈ ng(σ);
// then 2(W_m ∪ {x}) ∪ 2W_m+1 for the least x with 2x ∈ pos(σ), 2x+1 ∈ ng(σ).
Learner minCoded(MinResolver resolve);
// ∅ on empty pos(σ); else L = resolve(min pos(σ)), extended by the least
// positive datum not yet enumerated in L within |σ| steps.
Learner minUnionException(MinResolver resolve);
// First family member consistent with σ, else Finite(∅).
Learner enumeration(std::vector<LangDescriptor> family);

// base everywhere except on prefixes of length `at`, where it answers detour.
Learner uShaped(Learner base, std::size_t at, LangDescriptor detour);
// L_k of the parity-threshold family with k = ⌊|σ|/divisor⌋.
Learner lengthThreshold(Natural divisor);
// hyps[|σ| mod hyps.size()]: never converges syntactically.
Learner cycling(std::vector<Hypothesis> hyps);
// Partial: same answers as base, halting after factor·|σ| + offset steps.
Learner linearCost(Learner base, Budget factor, Budget offset = 0);

}  // namespace learners
}  // namespace goldlab
