#include "goldlab/locking.hpp"

#include "goldlab/errors.hpp"

namespace goldlab {

namespace {

// Depth-first over values in ascending order at each position, for one fixed
// length, so the first hit is lexicographically least among that length.
std::optional<Prefix> searchLength(const Learner& m, const LangDescriptor& l, const Prefix& current,
                                   std::size_t remaining, Natural valueBound, Code base) {
    if (remaining == 0) {
        return m(current).code() != base ? std::optional<Prefix>(current) : std::nullopt;
    }
    for (Natural x = 0; x < valueBound; ++x) {
        if (auto hit = searchLength(m, l, current.appended({x, member(l, x)}), remaining - 1, valueBound, base)) {
            return hit;
        }
    }
    return std::nullopt;
}

}  // namespace

LockingResult lockingFalsifier(const Learner& m, const LangDescriptor& l, const Prefix& sigma, std::size_t depth,
                               Natural valueBound) {
    for (const auto& p : sigma) {
        if (member(l, p.value) != p.label) {
            throw PreconditionError("σ labels " + std::to_string(p.value) + " against the language");
        }
    }
    LockingResult result;
    result.depth = depth;
    result.valueBound = valueBound;
    const Code base = m(sigma).code();
    for (std::size_t len = 1; len <= depth; ++len) {
        if (auto hit = searchLength(m, l, sigma, len, valueBound, base)) {
            result.counterexample = Prefix(std::vector<InfoPair>(hit->begin() + sigma.size(), hit->end()));
            return result;
        }
    }
    return result;
}

}  // namespace goldlab
