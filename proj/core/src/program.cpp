#include "goldlab/program.hpp"

#include <algorithm>
#include <limits>

namespace goldlab {

namespace {

class CostedProgram final : public FnProgram::Impl {
public:
    CostedProgram(std::string name, std::function<Natural(Natural)> value, std::function<Budget(Natural)> cost)
        : name_(std::move(name)), value_(std::move(value)), cost_(std::move(cost)) {}

    std::optional<Natural> evalWithBudget(Natural x, Budget t) const override {
        if (cost_(x) > t) return std::nullopt;
        return value_(x);
    }
    const std::string& name() const override { return name_; }

private:
    std::string name_;
    std::function<Natural(Natural)> value_;
    std::function<Budget(Natural)> cost_;
};

}  // namespace

FnProgram::FnProgram(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

FnProgram FnProgram::costed(std::string name, std::function<Natural(Natural)> value,
                            std::function<Budget(Natural)> cost) {
    return FnProgram(std::make_shared<CostedProgram>(std::move(name), std::move(value), std::move(cost)));
}

std::optional<Natural> FnProgram::evaluate(Natural x, Budget cap) const {
    for (Budget t = 1;; t = std::min(cap, t * 2)) {
        if (auto y = evalWithBudget(x, t)) return y;
        if (t == cap) return std::nullopt;
    }
}

namespace programs {

FnProgram identity() {
    return FnProgram::costed("identity", [](Natural x) { return x; }, [](Natural x) { return x + 1; });
}

FnProgram constantZero() {
    return FnProgram::costed("constant-0", [](Natural) { return Natural{0}; }, [](Natural) { return Budget{1}; });
}

FnProgram modThree() {
    return FnProgram::costed("mod-3", [](Natural x) { return x % 3; }, [](Natural x) { return x / 3 + 1; });
}

FnProgram nowhereDefined() {
    return FnProgram::costed("nowhere-defined", [](Natural) { return Natural{0}; },
                             [](Natural) { return std::numeric_limits<Budget>::max(); });
}

std::optional<FnProgram> byName(std::string_view name) {
    if (name == "identity") return identity();
    if (name == "nowhere-defined") return nowhereDefined();
    if (name == "constant-0") return constantZero();
    if (name == "mod-3") return modThree();
    return std::nullopt;
}

std::vector<std::string> builtinNames() { return {"identity", "constant-0", "mod-3"}; }

}  // namespace programs

}  // namespace goldlab
