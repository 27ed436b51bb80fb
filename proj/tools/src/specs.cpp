#include "goldlab/tools/specs.hpp"

#include <regex>

#include "goldlab/errors.hpp"
#include "goldlab/fn_bridge.hpp"
#include "goldlab/transforms.hpp"

namespace goldlab::tools {

namespace {

const json& params(const json& spec) {
    static const json empty = json::object();
    auto it = spec.find("params");
    return it == spec.end() ? empty : *it;
}

MinResolver resolverFrom(const json& j) {
    if (j.contains("family")) {
        return MinResolver::fromFamily(UniformFamily::byName(j.at("family").get<std::string>()));
    }
    if (j.contains("table")) {
        std::map<Natural, LangDescriptor> table;
        for (const auto& row : j.at("table")) table.emplace(row.at("min").get<Natural>(), descriptorFrom(row.at("language")));
        return MinResolver::fromTable(j.value("name", std::string("table")), std::move(table));
    }
    throw ConfigError("resolver needs \"family\" or \"table\"");
}

FnProgram programFrom(const json& j) {
    const std::string name = j.get<std::string>();
    auto p = programs::byName(name);
    if (!p) throw ConfigError("unknown program '" + name + "'");
    return *p;
}

Learner baseLearner(const json& spec) {
    const std::string id = spec.at("id").get<std::string>();
    const json& p = params(spec);
    if (id == "cofinite") return learners::cofinite();
    if (id == "split-family") return learners::splitFamily();
    if (id == "evens-wmon") return learners::evensWMon();
    if (id == "evens-pair") return learners::evensPair();
    if (id == "doubled-pair") return learners::doubledPair(descriptorFrom(p.at("base")));
    if (id == "pair-distinguisher") return learners::pairDistinguisher(descriptorFrom(p.at("other")));
    if (id == "min-coded") return learners::minCoded(resolverFrom(p.at("resolve")));
    if (id == "min-union-exception") return learners::minUnionException(resolverFrom(p.at("resolve")));
    if (id == "enumeration") {
        std::vector<LangDescriptor> family;
        for (const auto& d : p.at("family")) family.push_back(descriptorFrom(d));
        return learners::enumeration(std::move(family));
    }
    if (id == "u-shaped") {
        return learners::uShaped(learnerFromSpec(p.at("base")), p.at("at").get<std::size_t>(),
                                 descriptorFrom(p.at("detour")));
    }
    if (id == "length-threshold") return learners::lengthThreshold(p.at("divisor").get<Natural>());
    if (id == "cycling") {
        std::vector<Hypothesis> hyps;
        for (const auto& h : p.at("hyps")) {
            Hypothesis base = Hypothesis::exact(descriptorFrom(h.at("language")));
            hyps.push_back(h.contains("salt") ? pad(base, h.at("salt").get<Natural>()) : base);
        }
        return learners::cycling(std::move(hyps));
    }
    if (id == "linear-cost") {
        return learners::linearCost(learnerFromSpec(p.at("base")), p.at("factor").get<Budget>(),
                                    p.value("offset", Budget{0}));
    }
    if (id == "lift-g") {
        std::vector<FnProgram> candidates;
        for (const auto& c : p.at("candidates")) candidates.push_back(programFrom(c));
        return liftThroughG(enumerationFnLearner(std::move(candidates), p.value("eval_cap", Budget{1} << 20)));
    }
    throw ConfigError("unknown learner id '" + id + "'");
}

Learner applyStage(Learner m, const json& stage) {
    if (stage.is_string()) {
        const std::string s = stage.get<std::string>();
        if (s == "totalize") return totalize(std::move(m));
        if (s == "syn-dec-pad") return synDecPad(std::move(m));
        if (s == "conv-sdec") return convSDecTransform(std::move(m));
        if (s == "set-driven") return setDrivenWrap(std::move(m));
        throw ConfigError("unknown pipeline stage '" + s + "'");
    }
    if (stage.is_object() && stage.contains("collapse")) {
        const json& a = stage.at("collapse");
        if (a.is_string() && a.get<std::string>() == "*") return vacillationCollapse(std::move(m), std::nullopt);
        return vacillationCollapse(std::move(m), a.get<Natural>());
    }
    throw ConfigError("pipeline stage must be a name or {\"collapse\": a}");
}

}  // namespace

Learner learnerFromSpec(const json& spec) {
    try {
        Learner m = baseLearner(spec);
        if (spec.contains("pipeline")) {
            for (const auto& stage : spec.at("pipeline")) m = applyStage(std::move(m), stage);
        }
        return m;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("learner spec: ") + e.what());
    }
}

std::vector<std::string> learnerIds() {
    return {"cofinite",    "split-family",        "evens-wmon",  "evens-pair", "doubled-pair",
            "pair-distinguisher", "min-coded",    "min-union-exception", "enumeration", "u-shaped",
            "length-threshold",   "cycling",      "linear-cost", "lift-g"};
}

LangDescriptor descriptorFrom(const json& j) { return descriptorFromJson(j.dump()); }

Informant informantFromSpec(const json& spec) {
    const LangDescriptor target = descriptorFrom(spec.at("target"));
    if (!spec.contains("schedule")) return canonicalInformant(target);
    return scheduledInformant(target, Schedule::fromJson(spec.at("schedule").dump()));
}

std::optional<BudgetSchedule> budgetFromSpec(const json& runSpec) {
    if (!runSpec.contains("budget")) return std::nullopt;
    const json& b = runSpec.at("budget");
    const Budget factor = b.value("factor", Budget{1});
    const Budget offset = b.value("offset", Budget{0});
    return BudgetSchedule([factor, offset](std::size_t t) { return factor * t + offset; });
}

MonitorSpec parseMonitor(const std::string& text) {
    MonitorSpec m;
    m.label = text;
    if (auto r = restrictionByName(text)) {
        m.restriction = r;
        return m;
    }
    if (text == "Lim") {
        m.anomalies = 0;
        m.vacillation = Vacillation::finite(1);
        return m;
    }
    static const std::regex lim(R"(Lim\((\d+|\*),(\d+|\*|inf)\))");
    std::smatch match;
    if (!std::regex_match(text, match, lim)) throw ConfigError("unknown monitor '" + text + "'");
    if (match[1] != "*") m.anomalies = std::stoull(match[1]);
    if (match[2] == "*") {
        m.vacillation = Vacillation::star();
    } else if (match[2] == "inf") {
        m.vacillation = Vacillation::infinite();
    } else {
        const Natural b = std::stoull(match[2]);
        if (b == 0) throw ConfigError("vacillation bound must be positive");
        m.vacillation = Vacillation::finite(b);
    }
    return m;
}

Verdict runMonitor(const MonitorSpec& m, const Trace& tr, Natural bound) {
    Verdict v = m.restriction ? checkRestriction(*m.restriction, tr, EqOracle::forTrace(tr, bound))
                              : checkLim(tr, m.anomalies, m.vacillation, bound);
    v.monitor = m.label;
    return v;
}

}  // namespace goldlab::tools
