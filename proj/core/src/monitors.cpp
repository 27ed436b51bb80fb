#include "goldlab/monitors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "goldlab/errors.hpp"
#include "json.hpp"

namespace goldlab {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();

struct NamedRestriction {
    Restriction r;
    const char* name;
};

constexpr NamedRestriction kNames[] = {
    {Restriction::Cons, "Cons"}, {Restriction::Conv, "Conv"}, {Restriction::Dec, "Dec"},
    {Restriction::Caut, "Caut"}, {Restriction::WMon, "WMon"}, {Restriction::Mon, "Mon"},
    {Restriction::SMon, "SMon"}, {Restriction::NU, "NU"},     {Restriction::SNU, "SNU"},
    {Restriction::SDec, "SDec"}, {Restriction::SynDec, "SynDec"},
};

}  // namespace

const char* restrictionName(Restriction r) {
    for (const auto& n : kNames) {
        if (n.r == r) return n.name;
    }
    return "?";
}

std::optional<Restriction> restrictionByName(std::string_view name) {
    for (const auto& n : kNames) {
        if (name == n.name) return n.r;
    }
    return std::nullopt;
}

const std::vector<Restriction>& allRestrictions() {
    static const std::vector<Restriction> all = [] {
        std::vector<Restriction> v;
        for (const auto& n : kNames) v.push_back(n.r);
        return v;
    }();
    return all;
}

EqOracle EqOracle::forTrace(const Trace& tr, Natural horizon) {
    const bool allExact = std::all_of(tr.hyps.begin(), tr.hyps.end(), [](const Hypothesis& h) { return h.isExact(); });
    return allExact ? exact(horizon) : onHorizon(horizon);
}

// ------------------------------------------------------------------- Verdict

std::string Verdict::toJson() const {
    ordered_json j;
    j["monitor"] = monitor;
    j["outcome"] = passed() ? "pass" : "violation";
    if (witness.r) j["r"] = *witness.r;
    if (witness.s) j["s"] = *witness.s;
    if (witness.t) j["t"] = *witness.t;
    if (witness.value) j["value"] = *witness.value;
    if (t0) j["t0"] = *t0;
    j["length"] = length;
    j["horizon"] = horizon;
    j["certain"] = certain;
    if (finiteHorizonTrivial) j["finite_horizon_trivial"] = true;
    if (!detail.empty()) j["detail"] = detail;
    return j.dump();
}

std::string Verdict::describe() const {
    std::string s = monitor + ": ";
    if (passed()) {
        s += "pass up to T=" + std::to_string(length) + ", B=" + std::to_string(horizon);
        if (t0) s += ", t0=" + std::to_string(*t0);
        s += finiteHorizonTrivial ? " (holds trivially on any finite trace)" : " (no claim beyond the horizon)";
        return s;
    }
    s += "violation";
    std::vector<std::string> parts;
    if (witness.r) parts.push_back("r=" + std::to_string(*witness.r));
    if (witness.s) parts.push_back("s=" + std::to_string(*witness.s));
    if (witness.t) parts.push_back("t=" + std::to_string(*witness.t));
    if (witness.value) parts.push_back("value=" + std::to_string(*witness.value));
    if (!parts.empty()) {
        s += " at ";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
    }
    if (!detail.empty()) s += "; " + detail;
    s += certain ? " (decided exactly)" : " (decided on the horizon)";
    return s;
}

namespace {

// Per-trace tables shared by every restriction: distinct codes, semantic
// classes, consistency windows and inclusion between classes.
class TraceFacts {
public:
    TraceFacts(const Trace& tr, const EqOracle& eq) : tr_(tr), eq_(eq) {
        if (eq.mode == EqOracle::Mode::Exact) {
            for (const auto& h : tr.hyps) {
                if (!h.isExact()) {
                    throw OracleUnavailable("exact oracle cannot compare enumerated hypothesis " + h.key() +
                                            "; use a horizon oracle");
                }
            }
        }
        std::unordered_map<Code, std::size_t> index;
        for (const auto& h : tr.hyps) {
            auto [it, fresh] = index.try_emplace(h.code(), distinct_.size());
            if (fresh) distinct_.push_back(h);
            codeAt_.push_back(it->second);
        }
        for (const auto& h : distinct_) classOf_.push_back(classify(h));
        for (std::size_t i : codeAt_) classAt_.push_back(classOf_[i]);
    }

    std::size_t size() const { return tr_.hyps.size(); }
    std::size_t code(std::size_t t) const { return codeAt_[t]; }
    std::size_t cls(std::size_t t) const { return classAt_[t]; }
    bool certain() const { return certain_; }

    // Least t with ¬Cons(I[t], W_{h}) for the distinct code d, or kNever.
    std::size_t firstInconsistent(std::size_t d) {
        if (firstInc_.empty()) firstInc_.assign(distinct_.size(), kNever - 1);
        if (firstInc_[d] == kNever - 1) {
            firstInc_[d] = kNever;
            for (std::size_t i = 0; i < tr_.prefix.size(); ++i) {
                const auto& p = tr_.prefix[i];
                if (memberAt(distinct_[d], p.value, eq_.budget) != p.label) {
                    firstInc_[d] = i + 1;
                    conflict_[d] = p.value;
                    break;
                }
            }
        }
        return firstInc_[d];
    }
    Natural conflictValue(std::size_t d) const { return conflict_.at(d); }

    bool subset(std::size_t a, std::size_t b) {
        if (a == b) return true;
        auto key = std::make_pair(a, b);
        auto it = subset_.find(key);
        if (it != subset_.end()) return it->second;
        bool result;
        const Hypothesis& ha = distinct_[reps_[a]];
        const Hypothesis& hb = distinct_[reps_[b]];
        if (eq_.mode == EqOracle::Mode::Exact) {
            try {
                result = subsetExact(ha.descriptor(), hb.descriptor());
            } catch (const UndecidedSymbolically&) {
                certain_ = false;
                result = bitsSubset(bits(a), bits(b));
            }
        } else {
            result = bitsSubset(bits(a), bits(b));
        }
        subset_.emplace(key, result);
        return result;
    }

    bool correct(std::size_t c) {
        if (!tr_.target) throw PreconditionError("monitor needs the trace target");
        if (correct_.empty()) correct_.assign(reps_.size(), -1);
        if (correct_[c] < 0) {
            const Hypothesis& h = distinct_[reps_[c]];
            bool result;
            if (eq_.mode == EqOracle::Mode::Exact) {
                try {
                    result = equalExact(h.descriptor(), *tr_.target);
                } catch (const UndecidedSymbolically&) {
                    certain_ = false;
                    result = bits(c) == targetBits();
                }
            } else {
                result = bits(c) == targetBits();
            }
            correct_[c] = result ? 1 : 0;
        }
        return correct_[c] == 1;
    }

    // Least x < B in (W_a ∩ pos(I)) ∖ (W_b ∩ pos(I)), if any.
    std::optional<Natural> monGap(std::size_t a, std::size_t b) {
        if (!tr_.target) throw PreconditionError("Mon needs the trace target");
        const auto& ba = bits(a);
        const auto& bb = bits(b);
        const auto& target = targetBits();
        for (Natural x = 0; x < eq_.horizon; ++x) {
            if (target[x] && ba[x] && !bb[x]) return x;
        }
        return std::nullopt;
    }

private:
    std::size_t classify(const Hypothesis& h) {
        for (std::size_t c = 0; c < reps_.size(); ++c) {
            if (equal(distinct_[reps_[c]], h, c)) return c;
        }
        reps_.push_back(static_cast<std::size_t>(&h - distinct_.data()));
        return reps_.size() - 1;
    }

    bool equal(const Hypothesis& rep, const Hypothesis& h, std::size_t repClass) {
        if (eq_.mode == EqOracle::Mode::Exact) {
            try {
                return equalExact(rep.descriptor(), h.descriptor());
            } catch (const UndecidedSymbolically&) {
                certain_ = false;
            }
        }
        return bits(repClass) == readBits(h);
    }

    std::vector<bool> readBits(const Hypothesis& h) const {
        std::vector<bool> b(eq_.horizon);
        for (Natural x = 0; x < eq_.horizon; ++x) b[x] = memberAt(h, x, eq_.budget);
        return b;
    }

    const std::vector<bool>& bits(std::size_t c) {
        auto it = bits_.find(c);
        if (it == bits_.end()) it = bits_.emplace(c, readBits(distinct_[reps_[c]])).first;
        return it->second;
    }

    const std::vector<bool>& targetBits() {
        if (targetBits_.empty() && eq_.horizon > 0) {
            targetBits_.resize(eq_.horizon);
            for (Natural x = 0; x < eq_.horizon; ++x) targetBits_[x] = tr_.target->contains(x);
        }
        return targetBits_;
    }

    static bool bitsSubset(const std::vector<bool>& a, const std::vector<bool>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] && !b[i]) return false;
        }
        return true;
    }

    const Trace& tr_;
    EqOracle eq_;
    std::vector<Hypothesis> distinct_;
    std::vector<std::size_t> codeAt_, classAt_, classOf_, reps_;
    std::vector<std::size_t> firstInc_;
    std::unordered_map<std::size_t, Natural> conflict_;
    std::map<std::pair<std::size_t, std::size_t>, bool> subset_;
    std::vector<signed char> correct_;
    std::unordered_map<std::size_t, std::vector<bool>> bits_;
    std::vector<bool> targetBits_;
    bool certain_ = true;
};

Verdict baseVerdict(const std::string& name, const Trace& tr, Natural horizon) {
    Verdict v;
    v.monitor = name;
    v.length = tr.size();
    v.horizon = horizon;
    return v;
}

void violate(Verdict& v, std::optional<std::size_t> r, std::optional<std::size_t> s, std::size_t t) {
    v.outcome = Verdict::Outcome::Violation;
    v.witness.r = r;
    v.witness.s = s;
    v.witness.t = t;
}

// First position of each class (or each code) within [0, t].
struct FirstSeen {
    std::unordered_map<std::size_t, std::size_t> first;
    void see(std::size_t key, std::size_t t) { first.try_emplace(key, t); }
};

}  // namespace

Verdict checkRestriction(Restriction r, const Trace& tr, const EqOracle& eq) {
    TraceFacts f(tr, eq);
    Verdict v = baseVerdict(restrictionName(r), tr, eq.horizon);
    const std::size_t T = f.size();

    switch (r) {
        case Restriction::Cons:
            for (std::size_t t = 0; t < T && v.passed(); ++t) {
                if (f.firstInconsistent(f.code(t)) <= t) {
                    violate(v, std::nullopt, std::nullopt, t);
                    v.witness.value = f.conflictValue(f.code(t));
                    v.detail = "I[t] is inconsistent with W_{h_t}";
                }
            }
            break;

        case Restriction::Conv:
        case Restriction::WMon:
            for (std::size_t t = 0; t < T && v.passed(); ++t) {
                for (std::size_t s = 0; s <= t; ++s) {
                    if (t >= f.firstInconsistent(f.code(s))) continue;
                    const bool bad = r == Restriction::Conv ? f.code(s) != f.code(t) : !f.subset(f.cls(s), f.cls(t));
                    if (bad) {
                        violate(v, std::nullopt, s, t);
                        v.detail = r == Restriction::Conv ? "h_s is consistent with I[t] yet h_t differs"
                                                          : "h_s is consistent with I[t] yet W_{h_s} is not in W_{h_t}";
                        break;
                    }
                }
            }
            break;

        case Restriction::Caut:
        case Restriction::SMon:
            for (std::size_t t = 0; t < T && v.passed(); ++t) {
                for (std::size_t s = 0; s <= t; ++s) {
                    const std::size_t cs = f.cls(s), ct = f.cls(t);
                    const bool bad = r == Restriction::Caut ? (cs != ct && f.subset(ct, cs)) : !f.subset(cs, ct);
                    if (bad) {
                        violate(v, std::nullopt, s, t);
                        v.detail = r == Restriction::Caut ? "W_{h_t} is a proper subset of W_{h_s}"
                                                          : "W_{h_s} is not contained in W_{h_t}";
                        break;
                    }
                }
            }
            break;

        case Restriction::Mon:
            for (std::size_t t = 0; t < T && v.passed(); ++t) {
                for (std::size_t s = 0; s <= t; ++s) {
                    if (f.cls(s) == f.cls(t)) continue;
                    if (auto x = f.monGap(f.cls(s), f.cls(t))) {
                        violate(v, std::nullopt, s, t);
                        v.witness.value = *x;
                        v.detail = "a target element in W_{h_s} is missing from W_{h_t}";
                        break;
                    }
                }
            }
            break;

        case Restriction::Dec:
        case Restriction::NU: {
            FirstSeen seen;
            for (std::size_t t = 0; t < T && v.passed(); ++t) {
                const std::size_t c = f.cls(t);
                seen.see(c, t);
                if (r == Restriction::NU && !f.correct(c)) continue;
                const std::size_t first = seen.first.at(c);
                for (std::size_t s = first; s <= t; ++s) {
                    if (f.cls(s) != c) {
                        violate(v, first, s, t);
                        v.detail = r == Restriction::Dec ? "W_{h_r} = W_{h_t} but W_{h_s} differs"
                                                         : "left a correct hypothesis and returned to it";
                        break;
                    }
                }
            }
            break;
        }

        case Restriction::SDec:
        case Restriction::SNU: {
            // Per class: first position, and first position carrying another code.
            std::unordered_map<std::size_t, std::pair<std::size_t, std::size_t>> marks;
            for (std::size_t t = 0; t < T && v.passed(); ++t) {
                const std::size_t c = f.cls(t);
                auto [it, fresh] = marks.try_emplace(c, t, kNever);
                if (!fresh && it->second.second == kNever && f.code(t) != f.code(it->second.first)) {
                    it->second.second = t;
                }
                if (r == Restriction::SNU && !f.correct(c)) continue;
                const auto [f1, f2] = it->second;
                for (std::size_t s = f1; s <= t; ++s) {
                    std::optional<std::size_t> rr;
                    if (f.code(f1) != f.code(s)) {
                        rr = f1;
                    } else if (f2 <= s) {
                        rr = f2;
                    }
                    if (rr) {
                        violate(v, rr, s, t);
                        v.detail = "W_{h_r} = W_{h_t} but h_s differs from h_r";
                        break;
                    }
                }
            }
            break;
        }

        case Restriction::SynDec: {
            FirstSeen seen;
            for (std::size_t t = 0; t < T && v.passed(); ++t) {
                seen.see(f.code(t), t);
                const std::size_t first = seen.first.at(f.code(t));
                for (std::size_t s = first; s <= t; ++s) {
                    if (f.code(s) != f.code(t)) {
                        violate(v, first, s, t);
                        v.detail = "an abandoned code was emitted again";
                        break;
                    }
                }
            }
            break;
        }
    }
    v.certain = f.certain() && eq.mode == EqOracle::Mode::Exact;
    return v;
}

Verdict checkLim(const Trace& tr, std::optional<Natural> a, Vacillation b, Natural horizon) {
    if (!tr.target) throw PreconditionError("Lim needs the trace target");
    std::string name = "Lim";
    name += "(a=" + (a ? std::to_string(*a) : std::string("*"));
    switch (b.kind) {
        case Vacillation::Kind::Finite: name += ",b=" + std::to_string(b.count) + ")"; break;
        case Vacillation::Kind::Star: name += ",b=*)"; break;
        case Vacillation::Kind::Infinite: name += ",b=inf)"; break;
    }
    Verdict v = baseVerdict(name, tr, horizon);
    const std::size_t T = tr.size();
    v.finiteHorizonTrivial = !a || b.kind == Vacillation::Kind::Star;

    bool certain = true;
    std::unordered_map<Code, bool> within;
    auto withinBound = [&](const Hypothesis& h) {
        auto it = within.find(h.code());
        if (it != within.end()) return it->second;
        const AnomalyCount n = symDiffCount(h, *tr.target, horizon);
        certain &= n.kind != AnomalyCount::Kind::WithinHorizon;
        const bool ok = a ? n.atMost(*a) : n.kind != AnomalyCount::Kind::MoreThan;
        within.emplace(h.code(), ok);
        return ok;
    };

    std::size_t t0 = 0;
    std::optional<std::size_t> lastBad;
    for (std::size_t t = 0; t < T; ++t) {
        if (!withinBound(tr.hyps[t])) lastBad = t;
    }
    if (lastBad) t0 = *lastBad + 1;

    std::size_t vacStart = 0;
    if (b.kind == Vacillation::Kind::Finite && T > 0) {
        std::unordered_set<Code> suffix;
        std::size_t t = T;
        while (t > 0) {
            suffix.insert(tr.hyps[t - 1].code());
            if (suffix.size() > b.count) break;
            --t;
        }
        vacStart = t;
    }
    v.certain = certain;

    if (T == 0 || std::max(t0, vacStart) >= T) {
        v.outcome = Verdict::Outcome::Violation;
        if (T == 0) {
            v.detail = "empty trace";
        } else if (t0 >= T) {
            v.witness.t = *lastBad;
            v.detail = "the last hypothesis is outside the anomaly bound";
        } else {
            v.detail = "more than b codes at the end of the trace";
        }
        return v;
    }
    v.t0 = std::max(t0, vacStart);
    if (v.t0 == T - 1 && T > 1) v.detail = "converged only at the final step";
    return v;
}

Verdict checkDelayable(const Trace& original, const Trace& delayed, const SimulatingFunction& s, std::size_t horizon) {
    Verdict v = baseVerdict("Delay", delayed, 0);
    v.length = horizon;
    if (delayed.size() < horizon || delayed.prefix.size() < horizon) {
        throw PreconditionError("delayed trace shorter than the checked horizon");
    }
    NatSet posFast, ngFast, posSlow, ngSlow;
    std::size_t slowLen = 0;
    for (std::size_t t = 0; t < horizon; ++t) {
        if (t > 0) {
            const auto& p = delayed.prefix[t - 1];
            (p.label ? posFast : ngFast).insert(p.value);
        }
        const std::size_t target = s(t);
        if (target >= original.size() || target > original.prefix.size()) {
            throw PreconditionError("original trace shorter than s(t) = " + std::to_string(target));
        }
        for (; slowLen < target; ++slowLen) {
            const auto& p = original.prefix[slowLen];
            (p.label ? posSlow : ngSlow).insert(p.value);
        }
        std::string failure;
        if (!std::includes(posFast.begin(), posFast.end(), posSlow.begin(), posSlow.end())) {
            failure = "pos(I'[t]) does not contain pos(I[s(t)])";
        } else if (!std::includes(ngFast.begin(), ngFast.end(), ngSlow.begin(), ngSlow.end())) {
            failure = "ng(I'[t]) does not contain ng(I[s(t)])";
        } else if (delayed.hyps[t] != original.hyps[target]) {
            failure = "h'_t differs from h_{s(t)}";
        }
        if (!failure.empty()) {
            violate(v, std::nullopt, std::nullopt, t);
            v.detail = failure;
            return v;
        }
    }
    return v;
}

}  // namespace goldlab
