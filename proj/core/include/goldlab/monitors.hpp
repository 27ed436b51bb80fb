#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goldlab/delay.hpp"
#include "goldlab/learner.hpp"

namespace goldlab {

enum class Restriction { Cons, Conv, Dec, Caut, WMon, Mon, SMon, NU, SNU, SDec, SynDec };

const char* restrictionName(Restriction r);
std::optional<Restriction> restrictionByName(std::string_view name);
const std::vector<Restriction>& allRestrictions();

// Decides W_a = W_b and W_a ⊆ W_b for trace hypotheses.  Exact mode uses the
// descriptor algebra and refuses enumerated hypotheses; pairs the algebra
// cannot settle are compared on [0,B) and the verdict is marked uncertain.
// Horizon mode compares memberships on [0,B) read at the given budget.
struct EqOracle {
    enum class Mode { Exact, Horizon };
    Mode mode = Mode::Exact;
    Natural horizon = 0;
    Budget budget = 0;

    static EqOracle exact(Natural horizon) { return {Mode::Exact, horizon, defaultBudget(horizon)}; }
    static EqOracle onHorizon(Natural horizon, Budget budget) { return {Mode::Horizon, horizon, budget}; }
    static EqOracle onHorizon(Natural horizon) { return onHorizon(horizon, defaultBudget(horizon)); }
    // Exact when every hypothesis in tr is exact, horizon otherwise.
    static EqOracle forTrace(const Trace& tr, Natural horizon);
};

struct Witness {
    std::optional<std::size_t> r, s, t;
    std::optional<Natural> value;
    bool operator==(const Witness&) const = default;
};

struct Verdict {
    enum class Outcome { Pass, Violation };

    std::string monitor;
    Outcome outcome = Outcome::Pass;
    std::size_t length = 0;   // T
    Natural horizon = 0;      // B
    Witness witness;
    std::string detail;
    // Every semantic comparison behind the verdict was decided exactly.
    bool certain = true;
    // b = * or a = * at a finite horizon: the pass carries no information.
    bool finiteHorizonTrivial = false;
    std::optional<std::size_t> t0;

    bool passed() const { return outcome == Outcome::Pass; }
    std::string toJson() const;
    // One line, stating how far the verdict can be trusted.
    std::string describe() const;
};

Verdict checkRestriction(Restriction r, const Trace& tr, const EqOracle& eq);

// b for Lim^a_b: a finite count, * (finitely many), or ∞ (unrestricted).
struct Vacillation {
    enum class Kind { Finite, Star, Infinite };
    Kind kind = Kind::Finite;
    Natural count = 1;

    static Vacillation finite(Natural b) { return {Kind::Finite, b}; }
    static Vacillation star() { return {Kind::Star, 0}; }
    static Vacillation infinite() { return {Kind::Infinite, 0}; }
};

// Least t₀ < T such that from t₀ on at most b codes occur and each has at most
// a anomalies against the target (a unset means any finite number).
Verdict checkLim(const Trace& tr, std::optional<Natural> a, Vacillation b, Natural horizon);

// The three simulation clauses for t < T: data containment of I'[t] over
// I[𝔰(t)] in both labels, and h'_t = h_{𝔰(t)}.
Verdict checkDelayable(const Trace& original, const Trace& delayed, const SimulatingFunction& s, std::size_t horizon);

}  // namespace goldlab
