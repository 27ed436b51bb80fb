#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "goldlab/hypothesis.hpp"
#include "goldlab/informant.hpp"
#include "goldlab/prefix.hpp"

namespace goldlab {

// The computation on σ has not halted within the budget it was given.
struct Divergence {
    Budget costSoFar = 0;
    bool operator==(const Divergence&) const = default;
};

using LearnerAnswer = std::variant<Hypothesis, Divergence>;

// A deterministic map from prefixes to hypotheses.  Partial learners carry a
// step cost per prefix; a prefix whose cost is nullopt never halts.
class Learner {
public:
    enum class Kind { Total, Partial };

    class Impl {
    public:
        virtual ~Impl() = default;
        // Only called when cost(σ) is finite.
        virtual Hypothesis conjecture(const Prefix& sigma) const = 0;
        virtual std::optional<Budget> cost(const Prefix&) const { return Budget{0}; }
        virtual Kind kind() const { return Kind::Total; }
        virtual std::string name() const = 0;
    };

    explicit Learner(std::shared_ptr<const Impl> impl);

    // Total learner from a plain function.
    static Learner total(std::string name, std::function<Hypothesis(const Prefix&)> fn);

    LearnerAnswer evaluate(const Prefix& sigma, Budget budget) const;
    // Unbudgeted answer; throws PreconditionError on a prefix that never halts.
    Hypothesis operator()(const Prefix& sigma) const;
    std::optional<Budget> cost(const Prefix& sigma) const { return impl_->cost(sigma); }
    Kind kind() const { return impl_->kind(); }
    std::string name() const { return impl_->name(); }
    const Impl& impl() const { return *impl_; }

private:
    std::shared_ptr<const Impl> impl_;
};

// Step budget granted to a partial learner at trace step t.
using BudgetSchedule = std::function<Budget(std::size_t t)>;

struct Trace {
    // prefix.size() == hyps.size(); h_t was computed on prefix.take(t).
    Prefix prefix;
    std::vector<Hypothesis> hyps;
    std::optional<LangDescriptor> target;
    // Set when a partial learner ran out of budget at step hyps.size().
    std::optional<Divergence> divergence;

    std::size_t size() const { return hyps.size(); }
};

Trace runTrace(const Learner& m, const Informant& informant, std::size_t horizon,
               const std::optional<BudgetSchedule>& budget = std::nullopt);

// Trace of m over a fixed sequence of prefixes data.take(0), …, data.take(n-1).
Trace traceOnPrefix(const Learner& m, const Prefix& data, std::optional<LangDescriptor> target);

}  // namespace goldlab
