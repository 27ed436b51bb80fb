#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "goldlab/errors.hpp"
#include "goldlab/tools/scenario.hpp"
#include "goldlab/trace_io.hpp"

namespace fs = std::filesystem;
using namespace goldlab;
using namespace goldlab::tools;

namespace {

struct Outcome {
    std::string name;
    std::string report;
    std::string error;
    bool ok = false;
};

Outcome execute(const json& scenario, const RunOptions& options, const std::optional<fs::path>& outDir) {
    Outcome out;
    out.name = scenario.value("name", std::string("?"));
    try {
        const ScenarioResult result = runScenario(scenario, options);
        const BackboneReport backbone = checkBackbone(result.traces);
        out.report = renderTable(result, backbone);
        if (outDir) writeArtifacts(result, backbone, *outDir / result.name);
        out.ok = result.ok() && backbone.consistent();
    } catch (const Error& e) {
        out.error = e.what();
    }
    return out;
}

// Scenarios run independently; each worker installs its own code registry.
std::vector<Outcome> executeAll(const std::vector<json>& scenarios, const RunOptions& options,
                                const std::optional<fs::path>& outDir, unsigned jobs) {
    std::vector<Outcome> outcomes(scenarios.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < scenarios.size(); i = next++) outcomes[i] = execute(scenarios[i], options, outDir);
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(scenarios.size())));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return outcomes;
}

int report(const std::vector<Outcome>& outcomes, bool quiet) {
    int status = 0;
    for (const auto& o : outcomes) {
        if (!o.error.empty()) {
            std::cerr << o.name << ": " << o.error << "\n";
            status = std::max(status, 2);
            continue;
        }
        if (!quiet) std::cout << o.report << "\n";
        std::cout << (o.ok ? "ok       " : "MISMATCH ") << o.name << "\n";
        if (!o.ok) status = std::max(status, 1);
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"goldlab: learners, informants and learning-restriction monitors"};
    app.require_subcommand(1);

    std::string outDir = "goldlab-out";
    bool noArtifacts = false;
    bool quiet = false;
    unsigned jobs = 1;
    std::string scenarioDir = GOLDLAB_SCENARIO_DIR;

    auto* run = app.add_subcommand("run", "Run a scenario file and compare against its expectations");
    std::vector<std::string> files;
    run->add_option("file", files, "Scenario JSON file(s)")->required()->check(CLI::ExistingFile);

    auto* reproduce = app.add_subcommand("reproduce", "Run built-in scenarios by name, or 'all'");
    std::vector<std::string> names;
    reproduce->add_option("name", names, "Scenario name(s)")->required();
    reproduce->add_option("--scenario-dir", scenarioDir, "Directory holding the built-in scenario files");

    for (auto* sub : {run, reproduce}) {
        sub->add_option("--out", outDir, "Artifact directory (one subdirectory per scenario)");
        sub->add_flag("--no-artifacts", noArtifacts, "Only print the tables");
        sub->add_option("-j,--jobs", jobs, "Scenarios to run in parallel")->check(CLI::PositiveNumber);
        sub->add_flag("-q,--quiet", quiet, "Print one status line per scenario");
    }

    auto* list = app.add_subcommand("list", "List built-in scenarios and learner ids");

    auto* check = app.add_subcommand("check", "Apply monitors to a stored trace");
    std::string tracePath;
    std::vector<std::string> monitors;
    std::string targetJson;
    std::size_t horizon = 0;
    Natural bound = 200;
    check->add_option("trace", tracePath, "Trace file (.jsonl with its .codes.json sidecar)")->required();
    check->add_option("--monitor", monitors, "Restriction name or Lim(a,b); repeatable")->required();
    check->add_option("--target", targetJson, "Target descriptor as JSON (overrides the stored one)");
    check->add_option("--horizon", horizon, "Check only the first T steps");
    check->add_option("--bound", bound, "Oracle bound B")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        RunOptions options;
        options.seed = seedFromEnvironment();
        const std::optional<fs::path> out = noArtifacts ? std::nullopt : std::optional<fs::path>(outDir);

        if (*list) {
            std::cout << "scenarios:\n";
            for (const auto& n : builtinScenarios()) std::cout << "  " << n << "\n";
            std::cout << "learners:\n";
            for (const auto& n : learnerIds()) std::cout << "  " << n << "\n";
            return 0;
        }
        if (*run) {
            std::vector<json> scenarios;
            for (const auto& f : files) scenarios.push_back(loadScenarioFile(f));
            return report(executeAll(scenarios, options, out, jobs), quiet);
        }
        if (*reproduce) {
            if (names.size() == 1 && names.front() == "all") names = builtinScenarios();
            std::vector<json> scenarios;
            for (const auto& n : names) {
                const auto& known = builtinScenarios();
                if (std::find(known.begin(), known.end(), n) == known.end()) {
                    std::cerr << "unknown scenario '" << n << "' (see `goldlab list`)\n";
                    return 2;
                }
                scenarios.push_back(loadScenarioFile(fs::path(scenarioDir) / (n + ".json")));
            }
            return report(executeAll(scenarios, options, out, jobs), quiet);
        }
        if (*check) {
            ScopedRegistry registry;
            Trace tr = traceLoad(TraceFiles::at(tracePath));
            if (!targetJson.empty()) tr.target = descriptorFrom(json::parse(targetJson));
            if (horizon > 0 && horizon < tr.size()) {
                tr.prefix = tr.prefix.take(horizon);
                tr.hyps.erase(tr.hyps.begin() + static_cast<std::ptrdiff_t>(horizon), tr.hyps.end());
                tr.divergence.reset();
            }
            int status = 0;
            for (const auto& m : monitors) {
                const Verdict v = runMonitor(parseMonitor(m), tr, bound);
                std::cout << v.describe() << "\n";
                if (!v.passed()) status = 1;
            }
            return status;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
