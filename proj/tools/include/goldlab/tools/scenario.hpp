#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "goldlab/tools/specs.hpp"

namespace goldlab::tools {

// One checked fact of a run.  `key` is what expectations refer to: the
// monitor label, prefixed with the side for delay runs ("delayed/Cons").
struct RunRecord {
    std::string run;
    std::string key;
    Verdict verdict;
    bool expected = false;
    std::string mismatch;  // empty when the expectation (if any) is met
};

struct NamedTrace {
    std::string label;
    Trace trace;
    Natural bound = 0;
    bool persist = false;  // written as a trace file next to the verdicts
};

struct ScenarioResult {
    std::string name;
    std::string summary;
    std::uint64_t seed = 0;
    std::vector<RunRecord> records;
    std::vector<NamedTrace> traces;
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct RunOptions {
    // Overrides the scenario's "seed" field, which defaults to kDefaultSeed.
    std::optional<std::uint64_t> seed;
};

// GOLDLAB_SEED when set to a decimal number.
std::optional<std::uint64_t> seedFromEnvironment();

// Throws ConfigError on a malformed scenario.  Runs under a fresh code
// registry, so codes (and every artifact) depend only on the scenario.
ScenarioResult runScenario(const json& scenario, const RunOptions& options);
json loadScenarioFile(const std::filesystem::path& path);

// Names accepted by `goldlab reproduce`; each is <dir>/<name>.json.
const std::vector<std::string>& builtinScenarios();

// Backbone implications between restrictions, evaluated on traces.
struct BackboneReport {
    struct Implication {
        std::string premise;
        std::string conclusion;
        std::size_t checked = 0;
        std::vector<std::string> contradictions;  // trace labels
    };
    struct TraceEvidence {
        std::string label;
        std::vector<std::string> passed;
        std::vector<std::string> violated;
    };
    std::vector<Implication> implications;
    std::vector<TraceEvidence> evidence;
    // "A =/=> B" pairs for which some trace passes A and violates B.
    std::vector<std::string> separations;

    bool consistent() const;
};

BackboneReport checkBackbone(const std::vector<NamedTrace>& traces);

// verdicts.json, table.txt and one trace file pair per persisted trace.
void writeArtifacts(const ScenarioResult& result, const BackboneReport& backbone,
                    const std::filesystem::path& dir);
std::string renderTable(const ScenarioResult& result, const BackboneReport& backbone);
std::string verdictsJson(const ScenarioResult& result);

}  // namespace goldlab::tools
