#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goldlab/learners.hpp"
#include "goldlab/monitors.hpp"
#include "json.hpp"

namespace goldlab::tools {

using nlohmann::json;

// {"id": "...", "params": {...}, "pipeline": [...]}.  Pipeline stages apply
// in list order: "totalize", "syn-dec-pad", "conv-sdec", "set-driven",
// {"collapse": a} with a a natural or "*".
Learner learnerFromSpec(const json& spec);
std::vector<std::string> learnerIds();

LangDescriptor descriptorFrom(const json& j);

// {"target": descriptor, "schedule": schedule}; no schedule means canonical.
Informant informantFromSpec(const json& spec);

std::optional<BudgetSchedule> budgetFromSpec(const json& runSpec);

// "NU", "Lim", "Lim(0,1)", "Lim(*,inf)", "Lim(1,*)".
struct MonitorSpec {
    std::string label;
    std::optional<Restriction> restriction;
    std::optional<Natural> anomalies;
    Vacillation vacillation;
};

MonitorSpec parseMonitor(const std::string& text);
Verdict runMonitor(const MonitorSpec& m, const Trace& tr, Natural bound);

}  // namespace goldlab::tools
