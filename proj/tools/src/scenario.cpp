#include "goldlab/tools/scenario.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "goldlab/errors.hpp"
#include "goldlab/fn_bridge.hpp"
#include "goldlab/locking.hpp"
#include "goldlab/pairing.hpp"
#include "goldlab/trace_io.hpp"

namespace goldlab::tools {

namespace {

using ojson = nlohmann::ordered_json;

std::string prefixText(const Prefix& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        out += (i ? ",(" : "(") + std::to_string(p[i].value) + "," + (p[i].label ? "1" : "0") + ")";
    }
    return out + ")";
}

Prefix prefixFrom(const json& j) {
    std::vector<InfoPair> items;
    for (const auto& item : j) items.push_back({item.at(0).get<Natural>(), item.at(1).get<int>() != 0});
    return Prefix(std::move(items));
}

Verdict makeVerdict(std::string monitor, bool pass, std::size_t length, Natural horizon, std::string detail) {
    Verdict v;
    v.monitor = std::move(monitor);
    v.outcome = pass ? Verdict::Outcome::Pass : Verdict::Outcome::Violation;
    v.length = length;
    v.horizon = horizon;
    v.detail = std::move(detail);
    return v;
}

// An expectation is "pass", "violation", or an object naming the outcome and
// any witness fields that must match.
std::string compare(const json& expect, const Verdict& v) {
    const std::string got = v.passed() ? "pass" : "violation";
    if (expect.is_string()) {
        return expect.get<std::string>() == got ? "" : "expected " + expect.get<std::string>() + ", got " + got;
    }
    if (!expect.is_object()) throw ConfigError("expectation must be a string or an object");
    std::string out;
    auto note = [&](const std::string& s) { out += (out.empty() ? "" : "; ") + s; };
    if (expect.contains("outcome") && expect.at("outcome").get<std::string>() != got) {
        note("expected " + expect.at("outcome").get<std::string>() + ", got " + got);
    }
    auto field = [&](const char* name, std::optional<std::uint64_t> actual) {
        if (!expect.contains(name)) return;
        const auto want = expect.at(name).get<std::uint64_t>();
        if (actual != want) {
            note(std::string(name) + "=" + std::to_string(want) + " expected, got " +
                 (actual ? std::to_string(*actual) : "none"));
        }
    };
    field("r", v.witness.r);
    field("s", v.witness.s);
    field("t", v.witness.t);
    field("value", v.witness.value);
    field("t0", v.t0);
    if (expect.contains("certain") && expect.at("certain").get<bool>() != v.certain) note("certainty differs");
    if (expect.contains("detail_contains")) {
        const auto want = expect.at("detail_contains").get<std::string>();
        if (v.detail.find(want) == std::string::npos) note("detail lacks \"" + want + "\"");
    }
    return out;
}

class RunContext {
public:
    RunContext(ScenarioResult& result, const json& run, std::mt19937_64& rng)
        : result_(result), run_(run), rng_(rng), id_(run.at("id").get<std::string>()) {
        if (run.contains("expect")) expect_ = run.at("expect");
    }

    const std::string& id() const { return id_; }
    const json& spec() const { return run_; }
    std::mt19937_64& rng() { return rng_; }

    std::size_t horizon() const {
        const auto t = run_.at("horizon").get<std::size_t>();
        if (t == 0) throw ConfigError("run '" + id_ + "': horizon must be positive");
        return t;
    }
    Natural bound() const {
        const auto b = run_.value("bound", Natural{200});
        if (b == 0) throw ConfigError("run '" + id_ + "': bound must be positive");
        return b;
    }
    std::vector<MonitorSpec> monitors() const {
        std::vector<MonitorSpec> out;
        if (run_.contains("monitors")) {
            for (const auto& m : run_.at("monitors")) out.push_back(parseMonitor(m.get<std::string>()));
        }
        return out;
    }

    void record(const std::string& key, Verdict v) {
        RunRecord rec{id_, key, std::move(v), false, {}};
        if (auto it = expect_.find(key); it != expect_.end()) {
            rec.expected = true;
            rec.mismatch = compare(*it, rec.verdict);
            if (!rec.mismatch.empty()) result_.mismatches.push_back(id_ + "/" + key + ": " + rec.mismatch);
            used_.insert(key);
        }
        result_.records.push_back(std::move(rec));
    }

    void keep(std::string label, Trace tr, Natural bound, bool persist) {
        result_.traces.push_back({std::move(label), std::move(tr), bound, persist});
    }

    // Every expectation must name a record the run produced.
    void finish() const {
        for (const auto& [key, _] : expect_.items()) {
            if (!used_.count(key)) throw ConfigError("run '" + id_ + "': expectation '" + key + "' names no monitor");
        }
    }

private:
    ScenarioResult& result_;
    const json& run_;
    std::mt19937_64& rng_;
    std::string id_;
    json expect_ = json::object();
    std::set<std::string> used_;
};

void recordFinalAgreement(RunContext& ctx, const Trace& tr, Natural bound) {
    if (!ctx.spec().value("final_agrees", false)) return;
    if (!tr.target) throw ConfigError("run '" + ctx.id() + "': final_agrees needs a target");
    const bool ok = !tr.hyps.empty() && agreeUpTo(tr.hyps.back(), Hypothesis::exact(*tr.target), bound);
    ctx.record("final-agrees", makeVerdict("final-agrees", ok, tr.size(), bound,
                                           ok ? "W of the last hypothesis equals the target on [0,B)"
                                              : "W of the last hypothesis differs from the target on [0,B)"));
}

void runTraceKind(RunContext& ctx) {
    const json& run = ctx.spec();
    const Learner m = learnerFromSpec(run.at("learner"));
    const Informant inf = informantFromSpec(run.at("informant"));
    const auto budget = budgetFromSpec(run);
    const Natural bound = ctx.bound();
    Trace tr = runTrace(m, inf, ctx.horizon(), budget);
    for (const auto& mon : ctx.monitors()) ctx.record(mon.label, runMonitor(mon, tr, bound));
    if (budget) {
        Verdict v = makeVerdict("halts", !tr.divergence, tr.size(), bound, "every step halted within its budget");
        if (tr.divergence) {
            v.witness.t = tr.size();
            v.detail = "no answer within the budget at t=" + std::to_string(tr.size()) + " after " +
                       std::to_string(tr.divergence->costSoFar) + " steps";
        }
        ctx.record("halts", std::move(v));
    }
    recordFinalAgreement(ctx, tr, bound);
    ctx.keep(ctx.id(), std::move(tr), bound, true);
}

void runDelayKind(RunContext& ctx) {
    const json& run = ctx.spec();
    const Learner m = learnerFromSpec(run.at("learner"));
    const Informant inf = informantFromSpec(run.at("informant"));
    const Informant fast = informantFromSpec(run.at("fast_informant"));
    const auto s = SimulatingFunction::fromJson(run.at("simulating").dump());
    const std::size_t horizon = ctx.horizon();
    const Natural bound = ctx.bound();
    DelayedRun dr;
    try {
        dr = delaySimulate(m, inf, fast, s, horizon);
    } catch (const DelayContractViolation& e) {
        Verdict v = makeVerdict("Delay", false, horizon, bound, e.what());
        v.witness.t = e.step();
        ctx.record("Delay", std::move(v));
        return;
    }
    ctx.record("Delay", checkDelayable(dr.original, dr.delayed, s, horizon));
    for (const auto& mon : ctx.monitors()) {
        ctx.record("original/" + mon.label, runMonitor(mon, dr.original, bound));
        ctx.record("delayed/" + mon.label, runMonitor(mon, dr.delayed, bound));
    }
    ctx.keep(ctx.id() + ".original", std::move(dr.original), bound, true);
    ctx.keep(ctx.id() + ".delayed", std::move(dr.delayed), bound, true);
}

// Every set of at most max_size values below range, in lexicographic order.
std::vector<NatSet> smallSets(Natural range, std::size_t maxSize) {
    std::vector<NatSet> out{{}};
    std::vector<NatSet> frontier{{}};
    for (std::size_t k = 0; k < maxSize; ++k) {
        std::vector<NatSet> next;
        for (const auto& s : frontier) {
            for (Natural x = s.empty() ? 0 : *s.rbegin() + 1; x < range; ++x) {
                NatSet grown = s;
                grown.insert(x);
                next.push_back(std::move(grown));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LangDescriptor> sweepTargets(const json& j) {
    std::vector<LangDescriptor> out;
    if (j.is_array()) {
        for (const auto& d : j) out.push_back(descriptorFrom(d));
        return out;
    }
    const std::string family = j.at("family").get<std::string>();
    const auto sets = smallSets(j.at("range").get<Natural>(), j.at("max_size").get<std::size_t>());
    for (const auto& s : sets) {
        if (family == "cofinite") {
            out.push_back(LangDescriptor::cofinite(s));
        } else if (family == "split") {
            out.push_back(LangDescriptor::split(s));
        } else {
            throw ConfigError("sweep family must be cofinite or split");
        }
    }
    if (family == "split") out.push_back(LangDescriptor::splitAll());
    return out;
}

// First verdict, first violation, and whether every comparison was exact.
struct Aggregate {
    std::optional<Verdict> first;
    std::optional<Verdict> firstViolation;
    std::size_t passed = 0;
    std::size_t total = 0;
    bool certain = true;

    void add(Verdict v, const Informant& inf) {
        ++total;
        certain = certain && v.certain;
        if (v.passed()) {
            ++passed;
        } else if (!firstViolation) {
            v.detail = "first violation on " + inf.description() + ": " + v.detail;
            firstViolation = v;
        }
        if (!first) first = std::move(v);
    }
};

void runSweepKind(RunContext& ctx) {
    const json& run = ctx.spec();
    const Learner m = learnerFromSpec(run.at("learner"));
    const std::size_t horizon = ctx.horizon();
    const Natural bound = ctx.bound();
    const bool canonical = run.value("canonical", true);
    const auto seeded = run.value("seeded", std::size_t{0});
    const auto width = run.value("width", Natural{8});
    const bool agree = run.value("final_agrees", false);
    const auto monitors = ctx.monitors();

    std::vector<Informant> informants;
    for (const auto& target : sweepTargets(run.at("targets"))) {
        if (canonical) informants.push_back(canonicalInformant(target));
        for (std::size_t i = 0; i < seeded; ++i) {
            informants.push_back(scheduledInformant(target, Schedule::seededBlocks(width, ctx.rng()())));
        }
    }
    if (informants.empty()) throw ConfigError("run '" + ctx.id() + "': the sweep has no informants");

    std::vector<Aggregate> agg(monitors.size() + (agree ? 1 : 0));
    for (std::size_t k = 0; k < informants.size(); ++k) {
        const Informant& inf = informants[k];
        Trace tr = runTrace(m, inf, horizon);
        for (std::size_t i = 0; i < monitors.size(); ++i) agg[i].add(runMonitor(monitors[i], tr, bound), inf);
        if (agree) {
            const bool ok = agreeUpTo(tr.hyps.back(), Hypothesis::exact(*inf.target()), bound);
            agg.back().add(makeVerdict("final-agrees", ok, tr.size(), bound, "last hypothesis vs target on [0,B)"), inf);
        }
        ctx.keep(ctx.id() + "." + std::to_string(k), std::move(tr), bound, false);
    }
    for (std::size_t i = 0; i < agg.size(); ++i) {
        Verdict v = agg[i].firstViolation ? *agg[i].firstViolation : *agg[i].first;
        v.certain = agg[i].certain;
        const std::string tally = std::to_string(agg[i].passed) + "/" + std::to_string(agg[i].total) + " informants pass";
        v.detail = v.passed() ? tally : tally + "; " + v.detail;
        const std::string key = v.monitor;
        ctx.record(key, std::move(v));
    }
}

// σ = I[n] against a shuffled copy of σ with some items repeated: a set-driven
// learner answers both with the same code.
void runSetDrivenKind(RunContext& ctx) {
    const json& run = ctx.spec();
    const Learner m = learnerFromSpec(run.at("learner"));
    const Informant inf = informantFromSpec(run.at("informant"));
    const std::size_t horizon = ctx.horizon();
    const auto trials = run.value("trials", std::size_t{4});
    auto& rng = ctx.rng();
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= horizon; ++n) {
        const Prefix sigma = inf.prefix(n);
        const Code expected = m(sigma).code();
        for (std::size_t k = 0; k < trials; ++k) {
            std::vector<InfoPair> items(sigma.begin(), sigma.end());
            for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng() % i]);
            const std::size_t extra = rng() % (items.size() + 1);
            for (std::size_t i = 0; i < extra; ++i) items.push_back(items[rng() % items.size()]);
            const Prefix tau(std::move(items));
            ++checked;
            if (m(tau).code() != expected) {
                Verdict v = makeVerdict("set-driven", false, horizon, 0,
                                        "M" + prefixText(sigma) + " differs from M" + prefixText(tau));
                v.witness.t = n;
                ctx.record("set-driven", std::move(v));
                return;
            }
        }
    }
    ctx.record("set-driven", makeVerdict("set-driven", true, horizon, 0,
                                         std::to_string(checked) + " rearranged prefixes answered alike"));
}

Budget leastHaltingBudget(const FnProgram& p, Natural x) {
    Budget s = 0;
    while (!p.evalWithBudget(x, s)) ++s;
    return s;
}

void runFnBridgeKind(RunContext& ctx) {
    const json& run = ctx.spec();
    const auto range = run.value("range", Natural{50});
    const auto hatRange = run.value("hat_range", Natural{20});
    const Natural bound = ctx.bound();
    std::vector<FnProgram> candidates;
    for (const auto& name : run.at("programs")) {
        auto p = programs::byName(name.get<std::string>());
        if (!p) throw ConfigError("unknown program '" + name.get<std::string>() + "'");
        candidates.push_back(*p);
    }
    for (const auto& p : candidates) {
        // H(G(p)) halts on x exactly once its scan reaches ⟨⟨x,p(x)⟩,s⟩ for the
        // least halting budget s of p on x.
        const FnProgram back = graphDecodeH(graphEncodeG(p));
        Verdict rt = makeVerdict("roundtrip(" + p.name() + ")", true, range, range,
                                 "H(G(p)) agrees with p on [0," + std::to_string(range) + ")");
        for (Natural x = 0; x < range; ++x) {
            const Budget s = leastHaltingBudget(p, x);
            const Natural value = *p.evalWithBudget(x, s);
            const Natural index = pairEncode(pairEncode(x, value), s);
            if (back.evalWithBudget(x, index + 1) != value || back.evalWithBudget(x, index)) {
                rt.outcome = Verdict::Outcome::Violation;
                rt.witness.value = x;
                rt.detail = "H(G(p)) disagrees with p at x=" + std::to_string(x);
                break;
            }
        }
        const std::string rtKey = rt.monitor;
        ctx.record(rtKey, std::move(rt));

        FnSequence tau;
        for (Natural x = 0; x < 2 * hatRange; ++x) tau.emplace_back(x, *p.evaluate(x));
        const Prefix hat = hatPrefix(tau);
        Verdict hv = makeVerdict("hat(" + p.name() + ")", true, hat.size(), hatRange,
                                 "the hat prefix lists the graph of p below " + std::to_string(hatRange));
        for (Natural x = 0; x < hatRange && hv.passed(); ++x) {
            const Natural n = pairEncode(x, *p.evaluate(x));
            const bool listed = std::any_of(hat.begin(), hat.end(), [&](const InfoPair& d) { return d.value == n && d.label; });
            if (!listed) {
                hv.outcome = Verdict::Outcome::Violation;
                hv.witness.value = x;
                hv.detail = "(<x,p(x)>,1) missing for x=" + std::to_string(x);
            }
        }
        for (const auto& d : hat) {
            const auto [x, y] = pairDecode(d.value);
            if (hv.passed() && d.label && p.evaluate(x) != y) {
                hv.outcome = Verdict::Outcome::Violation;
                hv.witness.value = d.value;
                hv.detail = "positive datum off the graph at " + std::to_string(d.value);
            }
        }
        const std::string hatKey = hv.monitor;
        ctx.record(hatKey, std::move(hv));

        if (run.contains("lift_horizon")) {
            const Learner lifted = liftThroughG(enumerationFnLearner(candidates));
            const auto target = LangDescriptor::graph(p);
            Trace tr = runTrace(lifted, canonicalInformant(target), run.at("lift_horizon").get<std::size_t>());
            for (const auto& mon : ctx.monitors()) {
                ctx.record("lift-g(" + p.name() + ")/" + mon.label, runMonitor(mon, tr, bound));
            }
            ctx.keep(ctx.id() + "." + p.name(), std::move(tr), bound, true);
        }
    }
}

void runLockingKind(RunContext& ctx) {
    const json& run = ctx.spec();
    const Learner m = learnerFromSpec(run.at("learner"));
    const LangDescriptor l = descriptorFrom(run.at("language"));
    const Prefix sigma = prefixFrom(run.at("sigma"));
    const auto depth = run.at("depth").get<std::size_t>();
    const auto valueBound = run.at("value_bound").get<Natural>();
    const LockingResult res = lockingFalsifier(m, l, sigma, depth, valueBound);
    const std::string scope = "extensions of " + prefixText(sigma) + " up to length " + std::to_string(depth) +
                              " with values < " + std::to_string(valueBound);
    Verdict v = makeVerdict("locking", res.locked(), depth, valueBound,
                            res.locked() ? "M is constant on all " + scope
                                         : "tau = " + prefixText(*res.counterexample) + " changes M among " + scope);
    if (!res.locked()) v.witness.t = sigma.size() + res.counterexample->size();
    ctx.record("locking", std::move(v));
}

}  // namespace

std::optional<std::uint64_t> seedFromEnvironment() {
    const char* text = std::getenv("GOLDLAB_SEED");
    if (!text || !*text) return std::nullopt;
    char* end = nullptr;
    const auto value = std::strtoull(text, &end, 10);
    if (*end) throw ConfigError(std::string("GOLDLAB_SEED is not a decimal number: ") + text);
    return value;
}

ScenarioResult runScenario(const json& scenario, const RunOptions& options) {
    ScopedRegistry registry;
    ScenarioResult result;
    try {
        result.name = scenario.at("name").get<std::string>();
        result.summary = scenario.value("summary", std::string{});
        result.seed = options.seed.value_or(scenario.value("seed", kDefaultSeed));
        const json& runs = scenario.at("runs");
        if (!runs.is_array() || runs.empty()) throw ConfigError("scenario '" + result.name + "' has no runs");
        std::mt19937_64 rng(result.seed);
        std::set<std::string> ids;
        for (const auto& run : runs) {
            RunContext ctx(result, run, rng);
            if (!ids.insert(ctx.id()).second) throw ConfigError("duplicate run id '" + ctx.id() + "'");
            const std::string kind = run.value("kind", std::string("trace"));
            if (kind == "trace") {
                runTraceKind(ctx);
            } else if (kind == "delay") {
                runDelayKind(ctx);
            } else if (kind == "sweep") {
                runSweepKind(ctx);
            } else if (kind == "set-driven") {
                runSetDrivenKind(ctx);
            } else if (kind == "fn-bridge") {
                runFnBridgeKind(ctx);
            } else if (kind == "locking") {
                runLockingKind(ctx);
            } else {
                throw ConfigError("run '" + ctx.id() + "': unknown kind '" + kind + "'");
            }
            ctx.finish();
        }
    } catch (const json::exception& e) {
        throw ConfigError("scenario '" + result.name + "': " + e.what());
    }
    return result;
}

const std::vector<std::string>& builtinScenarios() {
    static const std::vector<std::string> names{
        "wmon-not-nu",      "mon-not-caut",         "caut-not-mon",        "conv-sdec-equiv",
        "cons-not-delayable", "collapse-vacillation", "smon-liminfty-positive", "fn-bridge-roundtrip",
        "set-driven-wrap",  "totalize-demo",        "syndec-pad"};
    return names;
}

json loadScenarioFile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

namespace {

struct Edge {
    std::vector<Restriction> premise;
    Restriction conclusion;
};

const std::vector<Edge>& backboneEdges() {
    using R = Restriction;
    static const std::vector<Edge> edges{
        {{R::Conv}, R::SNU}, {{R::Conv}, R::WMon}, {{R::SDec}, R::Dec},         {{R::SDec}, R::SNU},
        {{R::SMon}, R::Caut}, {{R::SMon}, R::Dec}, {{R::SMon}, R::Mon},         {{R::SMon}, R::WMon},
        {{R::Dec, R::SNU}, R::NU},
    };
    return edges;
}

bool needsTarget(Restriction r) { return r == Restriction::Mon || r == Restriction::NU || r == Restriction::SNU; }

std::string joinNames(const std::vector<Restriction>& rs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < rs.size(); ++i) out += (i ? sep : "") + std::string(restrictionName(rs[i]));
    return out;
}

}  // namespace

bool BackboneReport::consistent() const {
    return std::all_of(implications.begin(), implications.end(),
                       [](const Implication& i) { return i.contradictions.empty(); });
}

BackboneReport checkBackbone(const std::vector<NamedTrace>& traces) {
    BackboneReport report;
    for (const auto& e : backboneEdges()) report.implications.push_back({joinNames(e.premise, " & "), restrictionName(e.conclusion), 0, {}});
    std::set<std::pair<int, int>> separated;
    for (const auto& nt : traces) {
        if (nt.trace.size() == 0) continue;
        const EqOracle eq = EqOracle::forTrace(nt.trace, nt.bound);
        std::map<Restriction, bool> pass;
        BackboneReport::TraceEvidence ev{nt.label, {}, {}};
        for (Restriction r : allRestrictions()) {
            if (needsTarget(r) && !nt.trace.target) continue;
            pass[r] = checkRestriction(r, nt.trace, eq).passed();
            (pass[r] ? ev.passed : ev.violated).push_back(restrictionName(r));
        }
        const auto& edges = backboneEdges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& e = edges[i];
            if (!pass.count(e.conclusion)) continue;
            bool premise = true;
            for (Restriction r : e.premise) premise = premise && pass.count(r) && pass[r];
            ++report.implications[i].checked;
            if (premise && !pass[e.conclusion]) report.implications[i].contradictions.push_back(nt.label);
        }
        for (const auto& [a, pa] : pass) {
            for (const auto& [b, pb] : pass) {
                if (pa && !pb) separated.emplace(static_cast<int>(a), static_cast<int>(b));
            }
        }
        report.evidence.push_back(std::move(ev));
    }
    for (const auto& [a, b] : separated) {
        report.separations.push_back(std::string(restrictionName(static_cast<Restriction>(a))) + " =/=> " +
                                     restrictionName(static_cast<Restriction>(b)));
    }
    return report;
}

std::string verdictsJson(const ScenarioResult& result) {
    ojson out;
    out["scenario"] = result.name;
    out["seed"] = result.seed;
    out["ok"] = result.ok();
    ojson records = ojson::array();
    for (const auto& rec : result.records) {
        ojson r;
        r["run"] = rec.run;
        r["key"] = rec.key;
        r["expectation"] = !rec.expected ? "none" : rec.mismatch.empty() ? "met" : "mismatch";
        if (!rec.mismatch.empty()) r["mismatch"] = rec.mismatch;
        r["verdict"] = ojson::parse(rec.verdict.toJson());
        records.push_back(std::move(r));
    }
    out["records"] = std::move(records);
    return out.dump(2) + "\n";
}

std::string renderTable(const ScenarioResult& result, const BackboneReport& backbone) {
    std::ostringstream out;
    out << "scenario " << result.name << " (seed " << result.seed << ")\n";
    if (!result.summary.empty()) out << result.summary << "\n";
    out << "\n";
    std::size_t runWidth = 3, keyWidth = 7;
    for (const auto& rec : result.records) {
        runWidth = std::max(runWidth, rec.run.size());
        keyWidth = std::max(keyWidth, rec.key.size());
    }
    auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(s.size(), w), ' ');
        return s;
    };
    out << pad("run", runWidth) << "  " << pad("monitor", keyWidth) << "  " << pad("outcome", 9) << "  "
        << pad("expected", 8) << "  detail\n";
    for (const auto& rec : result.records) {
        const std::string expected = !rec.expected ? "-" : rec.mismatch.empty() ? "met" : "MISMATCH";
        out << pad(rec.run, runWidth) << "  " << pad(rec.key, keyWidth) << "  "
            << pad(rec.verdict.passed() ? "pass" : "violation", 9) << "  " << pad(expected, 8) << "  "
            << rec.verdict.describe() << "\n";
        if (!rec.mismatch.empty()) out << pad("", runWidth + keyWidth + 25) << "  " << rec.mismatch << "\n";
    }
    out << "\nbackbone over " << backbone.evidence.size() << " trace(s)\n";
    for (const auto& imp : backbone.implications) {
        out << "  " << pad(imp.premise + " => " + imp.conclusion, 18) << "  checked " << imp.checked;
        if (imp.contradictions.empty()) {
            out << ", holds\n";
        } else {
            out << ", CONTRADICTED on";
            for (const auto& l : imp.contradictions) out << " " << l;
            out << "\n";
        }
    }
    bool anyPersisted = false;
    for (const auto& ev : backbone.evidence) {
        const bool persisted = std::any_of(result.traces.begin(), result.traces.end(),
                                           [&](const NamedTrace& t) { return t.persist && t.label == ev.label; });
        if (!persisted) continue;
        if (!anyPersisted) out << "\nrestrictions per trace\n";
        anyPersisted = true;
        out << "  " << ev.label << "\n    pass:";
        for (const auto& n : ev.passed) out << " " << n;
        out << "\n    violation:";
        for (const auto& n : ev.violated) out << " " << n;
        out << "\n";
    }
    if (!backbone.separations.empty()) {
        out << "\nwitnessed non-implications\n";
        for (const auto& s : backbone.separations) out << "  " << s << "\n";
    }
    return out.str();
}

void writeArtifacts(const ScenarioResult& result, const BackboneReport& backbone, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto write = [&](const std::filesystem::path& p, const std::string& text) {
        std::ofstream out(p, std::ios::binary);
        if (!out) throw ConfigError("cannot write " + p.string());
        out << text;
    };
    write(dir / "verdicts.json", verdictsJson(result));
    write(dir / "table.txt", renderTable(result, backbone));
    for (const auto& nt : result.traces) {
        if (!nt.persist) continue;
        traceDump(nt.trace, TraceFiles::at(dir / (nt.label + ".jsonl")), defaultBudget(nt.bound));
    }
}

}  // namespace goldlab::tools
