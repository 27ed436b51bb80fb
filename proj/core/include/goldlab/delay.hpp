#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "goldlab/learner.hpp"

namespace goldlab {

// Non-decreasing, unbounded reindexing of time.  Every factory checks both
// properties on its closed form and throws ScheduleError otherwise.
class SimulatingFunction {
public:
    static SimulatingFunction identity();
    // max(0, slope·t + intercept); slope ≥ 1.
    static SimulatingFunction affine(Natural slope, std::int64_t intercept);
    // ⌊t/divisor⌋; divisor ≥ 1.
    static SimulatingFunction floorDiv(Natural divisor);
    // max(0, t − lag).
    static SimulatingFunction staircase(Natural lag);
    // values[t] for t < n, then values.back() + (t − n + 1).  Must be non-decreasing.
    static SimulatingFunction steps(std::vector<Natural> values);

    Natural operator()(Natural t) const;
    std::string toJson() const;
    static SimulatingFunction fromJson(std::string_view text);

    struct Rule;

private:
    explicit SimulatingFunction(std::shared_ptr<const Rule> rule);
    std::shared_ptr<const Rule> rule_;
};

struct DelayedRun {
    // M on I, long enough to cover 𝔰(T−1).
    Trace original;
    // h'_t = M(I[𝔰(t)]) alongside I'[t], for t < T.
    Trace delayed;
};

// Checks pos(I'[t]) ⊇ pos(I[𝔰(t)]) and ng(I'[t]) ⊇ ng(I[𝔰(t)]) for every
// t < T and throws DelayContractViolation at the first failure.
DelayedRun delaySimulate(const Learner& m, const Informant& i, const Informant& iPrime, const SimulatingFunction& s,
                         std::size_t horizon);

}  // namespace goldlab
