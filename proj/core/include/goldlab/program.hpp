#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goldlab/prefix.hpp"

namespace goldlab {

// A step-costed partial function ℕ → ℕ.  evalWithBudget returns the value once
// the program halts within the budget and nullopt while it is still running;
// a halt observed at budget t is observed with the same value at every t' ≥ t.
class FnProgram {
public:
    class Impl {
    public:
        virtual ~Impl() = default;
        virtual std::optional<Natural> evalWithBudget(Natural x, Budget t) const = 0;
        virtual const std::string& name() const = 0;
    };

    explicit FnProgram(std::shared_ptr<const Impl> impl);

    // Total program with an explicit cost model: halts on x after cost(x) steps.
    static FnProgram costed(std::string name, std::function<Natural(Natural)> value,
                            std::function<Budget(Natural)> cost);

    std::optional<Natural> evalWithBudget(Natural x, Budget t) const { return impl_->evalWithBudget(x, t); }
    // Runs with doubling budgets up to `cap`; nullopt if still running there.
    std::optional<Natural> evaluate(Natural x, Budget cap = Budget{1} << 40) const;
    const std::string& name() const { return impl_->name(); }

private:
    std::shared_ptr<const Impl> impl_;
};

namespace programs {

FnProgram identity();       // cost x+1
FnProgram constantZero();   // cost 1
FnProgram modThree();       // cost x/3+1
FnProgram nowhereDefined(); // never halts
std::optional<FnProgram> byName(std::string_view name);
std::vector<std::string> builtinNames();

}  // namespace programs

}  // namespace goldlab
