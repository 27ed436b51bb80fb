#pragma once

#include <optional>

#include "goldlab/learner.hpp"

namespace goldlab {

struct LockingResult {
    // First extension τ, in (length, values) order, with M(σ⌢τ) ≠ M(σ).
    std::optional<Prefix> counterexample;
    std::size_t depth = 0;
    Natural valueBound = 0;

    bool locked() const { return !counterexample.has_value(); }
};

// Tries every L-labeled τ with 1 ≤ |τ| ≤ depth and values < valueBound.  The
// comparison is on codes.  Throws PreconditionError when σ is inconsistent with L.
LockingResult lockingFalsifier(const Learner& m, const LangDescriptor& l, const Prefix& sigma, std::size_t depth,
                               Natural valueBound);

}  // namespace goldlab
