#include "goldlab/delay.hpp"

#include <algorithm>

#include "goldlab/errors.hpp"
#include "json.hpp"

namespace goldlab {

using nlohmann::json;

struct SimulatingFunction::Rule {
    enum class Kind { Identity, Affine, FloorDiv, Staircase, Steps };
    Kind kind = Kind::Identity;
    Natural slope = 1;
    std::int64_t intercept = 0;
    Natural divisor = 1;
    Natural lag = 0;
    std::vector<Natural> values;

    Natural apply(Natural t) const {
        switch (kind) {
            case Kind::Identity: return t;
            case Kind::Affine: {
                const auto v = static_cast<std::int64_t>(slope * t) + intercept;
                return v < 0 ? 0 : static_cast<Natural>(v);
            }
            case Kind::FloorDiv: return t / divisor;
            case Kind::Staircase: return t <= lag ? 0 : t - lag;
            case Kind::Steps:
                if (t < values.size()) return values[t];
                return values.back() + (t - values.size() + 1);
        }
        return t;
    }

    json toJson() const {
        switch (kind) {
            case Kind::Identity: return {{"kind", "identity"}};
            case Kind::Affine: return {{"kind", "affine"}, {"slope", slope}, {"intercept", intercept}};
            case Kind::FloorDiv: return {{"kind", "floor-div"}, {"divisor", divisor}};
            case Kind::Staircase: return {{"kind", "staircase"}, {"lag", lag}};
            case Kind::Steps: return {{"kind", "steps"}, {"values", values}};
        }
        return nullptr;
    }
};

SimulatingFunction::SimulatingFunction(std::shared_ptr<const Rule> rule) : rule_(std::move(rule)) {}

SimulatingFunction SimulatingFunction::identity() { return SimulatingFunction(std::make_shared<const Rule>()); }

SimulatingFunction SimulatingFunction::affine(Natural slope, std::int64_t intercept) {
    if (slope == 0) throw ScheduleError("affine simulating function with slope 0 is bounded");
    auto r = std::make_shared<Rule>();
    r->kind = Rule::Kind::Affine;
    r->slope = slope;
    r->intercept = intercept;
    return SimulatingFunction(r);
}

SimulatingFunction SimulatingFunction::floorDiv(Natural divisor) {
    if (divisor == 0) throw ScheduleError("floor-divide simulating function needs divisor ≥ 1");
    auto r = std::make_shared<Rule>();
    r->kind = Rule::Kind::FloorDiv;
    r->divisor = divisor;
    return SimulatingFunction(r);
}

SimulatingFunction SimulatingFunction::staircase(Natural lag) {
    auto r = std::make_shared<Rule>();
    r->kind = Rule::Kind::Staircase;
    r->lag = lag;
    return SimulatingFunction(r);
}

SimulatingFunction SimulatingFunction::steps(std::vector<Natural> values) {
    if (values.empty()) throw ScheduleError("step table is empty");
    if (!std::is_sorted(values.begin(), values.end())) {
        throw ScheduleError("step table decreases, so the simulating function is not non-decreasing");
    }
    auto r = std::make_shared<Rule>();
    r->kind = Rule::Kind::Steps;
    r->values = std::move(values);
    return SimulatingFunction(r);
}

Natural SimulatingFunction::operator()(Natural t) const { return rule_->apply(t); }

std::string SimulatingFunction::toJson() const { return rule_->toJson().dump(); }

SimulatingFunction SimulatingFunction::fromJson(std::string_view text) {
    try {
        const json j = json::parse(text);
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "identity") return identity();
        if (kind == "affine") return affine(j.at("slope").get<Natural>(), j.value("intercept", std::int64_t{0}));
        if (kind == "floor-div") return floorDiv(j.at("divisor").get<Natural>());
        if (kind == "staircase") return staircase(j.at("lag").get<Natural>());
        if (kind == "steps") return steps(j.at("values").get<std::vector<Natural>>());
        throw ConfigError("unknown simulating function kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw ConfigError(std::string("simulating function JSON: ") + e.what());
    }
}

DelayedRun delaySimulate(const Learner& m, const Informant& i, const Informant& iPrime, const SimulatingFunction& s,
                         std::size_t horizon) {
    DelayedRun run;
    const std::size_t reach = horizon == 0 ? 0 : s(horizon - 1) + 1;
    run.original = runTrace(m, i, reach);
    if (run.original.size() < reach) {
        throw DelayContractViolation(0, m.name() + " diverged before step " + std::to_string(reach));
    }
    const Prefix data = i.prefix(reach);
    const Prefix fast = iPrime.prefix(horizon);

    run.delayed.target = iPrime.target();
    run.delayed.prefix = fast;
    NatSet posFast, ngFast, posSlow, ngSlow;
    std::size_t slowLen = 0;
    for (std::size_t t = 0; t < horizon; ++t) {
        if (t > 0) {
            const auto& p = fast[t - 1];
            (p.label ? posFast : ngFast).insert(p.value);
        }
        const std::size_t target = s(t);
        for (; slowLen < target; ++slowLen) {
            const auto& p = data[slowLen];
            (p.label ? posSlow : ngSlow).insert(p.value);
        }
        if (!std::includes(posFast.begin(), posFast.end(), posSlow.begin(), posSlow.end())) {
            throw DelayContractViolation(t, "pos(I'[t]) misses positive data of I[s(t)]");
        }
        if (!std::includes(ngFast.begin(), ngFast.end(), ngSlow.begin(), ngSlow.end())) {
            throw DelayContractViolation(t, "ng(I'[t]) misses negative data of I[s(t)]");
        }
        run.delayed.hyps.push_back(run.original.hyps[target]);
    }
    return run;
}

}  // namespace goldlab
