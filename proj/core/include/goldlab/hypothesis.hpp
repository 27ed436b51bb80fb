#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "goldlab/descriptor.hpp"
#include "goldlab/enumerator.hpp"
#include "goldlab/prefix.hpp"
#include "goldlab/program.hpp"

namespace goldlab {

using Code = std::uint64_t;

// Interns content keys (constructor plus arguments) to consecutive naturals.
// Each thread reads codes from Registry::current(), which is the process-wide
// registry unless a ScopedRegistry is active on that thread.
class Registry {
public:
    Code intern(const std::string& key);
    // Binds a code read back from disk; throws if it clashes with an existing binding.
    void adopt(Code code, const std::string& key);
    std::optional<std::string> keyOf(Code code) const;
    std::size_t size() const;

    static Registry& global();
    static Registry& current();

private:
    friend class ScopedRegistry;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, Code> byKey_;
    std::map<Code, std::string> byCode_;
    Code next_ = 0;
};

// Installs a fresh registry for the current thread until destruction.
class ScopedRegistry {
public:
    ScopedRegistry();
    ~ScopedRegistry();
    ScopedRegistry(const ScopedRegistry&) = delete;
    ScopedRegistry& operator=(const ScopedRegistry&) = delete;
    Registry& registry() { return own_; }

private:
    Registry own_;
    Registry* previous_;
};

class Hypothesis {
public:
    static Hypothesis exact(LangDescriptor d);
    static Hypothesis enumerated(std::string key, Enumerator e);
    // Rebuilds a hypothesis under a code read from a trace file.
    static Hypothesis restore(Code code, std::string key, std::optional<LangDescriptor> d, Enumerator e,
                              std::optional<Natural> salt);

    Code code() const { return data_->code; }
    const std::string& key() const { return data_->key; }
    bool isExact() const { return data_->descriptor.has_value(); }
    const LangDescriptor& descriptor() const;
    // Lifted on the fly for exact hypotheses.
    const Enumerator& enumerator() const { return data_->enumerator; }
    std::optional<Natural> salt() const { return data_->salt; }

    bool operator==(const Hypothesis& other) const { return code() == other.code(); }

private:
    friend Hypothesis pad(const Hypothesis& h, Natural salt);
    struct Data {
        Code code;
        std::string key;
        std::optional<LangDescriptor> descriptor;
        Enumerator enumerator;
        std::optional<Natural> salt;
    };
    explicit Hypothesis(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;
};

enum class MemberStatus { In, NotYet };

bool member(const Hypothesis& h, Natural x);  // exact only
MemberStatus memberUpTo(const Hypothesis& h, Natural x, Budget t);
// Exact membership for exact hypotheses, step-t membership otherwise.
bool memberAt(const Hypothesis& h, Natural x, Budget t);

// Budget used to read Enumerated hypotheses when judging on [0,B).
constexpr Budget defaultBudget(Natural horizon) { return 2 * horizon + 2; }

bool agreeUpTo(const Hypothesis& a, const Hypothesis& b, Natural horizon, Budget budget);
inline bool agreeUpTo(const Hypothesis& a, const Hypothesis& b, Natural horizon) {
    return agreeUpTo(a, b, horizon, defaultBudget(horizon));
}

// |W_h Δ L|.  When both sides are in the periodic algebra the count is exact and
// may include anomalies beyond the horizon; MoreThan marks an infinite
// difference.  Otherwise the count is taken on [0,B).
struct AnomalyCount {
    enum class Kind { Exact, WithinHorizon, MoreThan };
    Kind kind = Kind::Exact;
    Natural value = 0;

    bool atMost(Natural a) const { return kind != Kind::MoreThan && value <= a; }
    bool operator==(const AnomalyCount&) const = default;
};

AnomalyCount symDiffCount(const Hypothesis& h, const LangDescriptor& l, Natural horizon, Budget budget);
inline AnomalyCount symDiffCount(const Hypothesis& h, const LangDescriptor& l, Natural horizon) {
    return symDiffCount(h, l, horizon, defaultBudget(horizon));
}

Hypothesis pad(const Hypothesis& h, Natural salt);
Hypothesis indFinite(NatSet x);
// Drops K = enumUpTo(h,|σ|) ∩ ng(σ) from W_h; the code depends only on (h, K).
Hypothesis guardXi(const Prefix& sigma, const Hypothesis& h);
// Union of the extensions; the code depends only on the set of input codes.
Hypothesis unionVote(const std::vector<Hypothesis>& hs);
// n = ⟨x,y⟩ is in the extension iff p halts on x with y; enumUpTo(t) ⊆ [0,t).
Hypothesis graphEncodeG(const FnProgram& p);
// Program whose step-t run scans i < t for i = ⟨⟨x,v⟩,s⟩ with ⟨x,v⟩ halting
// within s steps in h, and halts with the first such v.
FnProgram graphDecodeH(const Hypothesis& h);

}  // namespace goldlab
