#include "goldlab/transforms.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "goldlab/errors.hpp"
#include "prefix_memo.hpp"

namespace goldlab {

namespace {

void requireTotal(const Learner& m, const char* what) {
    if (m.kind() != Learner::Kind::Total) {
        throw PreconditionError(std::string(what) + " needs a total learner, got " + m.name());
    }
}

std::string prefixText(const Prefix& sigma) {
    std::string s;
    for (const auto& p : sigma) {
        s += std::to_string(p.value);
        s += p.label ? '+' : '-';
    }
    return s;
}

// ------------------------------------------------------------------ set-driven

class SetDriven final : public Learner::Impl {
public:
    explicit SetDriven(Learner m) : m_(std::move(m)) {}
    Hypothesis conjecture(const Prefix& sigma) const override { return m_(sigmaCanonicalize(sigma)); }
    std::string name() const override { return "set-driven(" + m_.name() + ")"; }

private:
    Learner m_;
};

// -------------------------------------------------------------------- totalize

class Totalized final : public Learner::Impl {
public:
    explicit Totalized(Learner m) : m_(std::move(m)) {}

    Hypothesis conjecture(const Prefix& sigma) const override {
        const Budget budget = sigma.size();
        for (std::size_t s = sigma.size(); s > 0; --s) {
            const Prefix head = sigma.take(s);
            if (auto c = m_.cost(head); c && *c <= budget) return m_(head);
        }
        return m_(sigma.take(0));
    }
    std::string name() const override { return "totalize(" + m_.name() + ")"; }

private:
    Learner m_;
};

// ----------------------------------------------------------------- syn-dec pad

class SynDecPadded final : public Learner::Impl {
public:
    explicit SynDecPadded(Learner m) : m_(std::move(m)) {}

    Hypothesis conjecture(const Prefix& sigma) const override {
        std::lock_guard lock(mutex_);
        return entry(sigma).out;
    }
    std::string name() const override { return "syn-dec-pad(" + m_.name() + ")"; }

private:
    struct Entry {
        Hypothesis base;
        Hypothesis out;
    };

    // Extends the memo forward from the longest memoized initial segment.
    Entry entry(const Prefix& sigma) const {
        std::size_t j = sigma.size() + 1;
        const Entry* known = nullptr;
        while (j > 0 && !known) known = memo_.find(sigma.take(--j).key());
        std::optional<Entry> prev;
        if (known) prev = *known;
        for (std::size_t i = known ? j + 1 : 0; i <= sigma.size(); ++i) {
            const Prefix tau = sigma.take(i);
            Hypothesis base = m_(tau);
            Hypothesis out = !prev || base != prev->base ? pad(base, i) : prev->out;
            prev = memo_.insert(tau.key(), Entry{std::move(base), std::move(out)});
        }
        return *prev;
    }

    Learner m_;
    mutable std::mutex mutex_;
    mutable detail::PrefixMemo<Entry> memo_;
};

// ------------------------------------------------------------ A-chain (cached)

// Incrementally advanced A^t_σ.  Steps t strictly in order, so the first step
// at which a value enters W^t is recorded exactly and r(X) is a prefix maximum.
class ApproxChain {
public:
    ApproxChain(Learner m, Prefix sigma, Hypothesis base)
        : m_(std::move(m)), sigma_(std::move(sigma)), base_(std::move(base)), ng_(sigma_.ng()) {
        for (Natural x : sigma_.pos()) {
            a_.insert(x);
            firstIn_[x] = 0;
        }
    }

    bool contains(Natural x, Budget t) {
        std::lock_guard lock(mutex_);
        advanceTo(t);
        auto it = firstIn_.find(x);
        return it != firstIn_.end() && it->second <= t;
    }

    std::vector<Natural> members(Budget t) {
        std::lock_guard lock(mutex_);
        advanceTo(t);
        std::vector<Natural> out;
        for (const auto& [x, when] : firstIn_) {
            if (when <= t) out.push_back(x);
        }
        return out;
    }

private:
    void advanceTo(Budget t) {
        while (t_ < t) step();
    }

    void step() {
        const Budget t = t_;
        std::vector<Natural> added;
        if (base_.isExact()) {
            // A lifted descriptor lists x at step x+1 and nothing else changes.
            if (t > 0 && base_.descriptor().contains(t - 1)) added.push_back(t - 1);
            w_.insert(w_.end(), added.begin(), added.end());
        } else {
            std::vector<Natural> w = base_.enumerator().enumUpTo(t);
            std::set_difference(w.begin(), w.end(), w_.begin(), w_.end(), std::back_inserter(added));
            w_ = std::move(w);
        }
        if (!added.empty()) {
            for (Natural x : added) firstStep_[x] = t;
            // Canonical prefixes longer than the least changed value now read differently.
            const std::size_t keep = std::min<std::size_t>(verdict_.size(), added.front() + 1);
            verdict_.resize(keep);
        } else if (!grewLastStep_ && t > sigma_.size()) {
            // Same W^t, same A, same cached verdicts: the previous outcome repeats.
            t_ = t + 1;
            return;
        }
        const std::size_t before = a_.size();

        std::optional<std::size_t> take;
        bool poisoned = false;
        for (Natural x : a_) {
            if (ng_.count(x)) {
                poisoned = true;
                break;
            }
        }
        if (poisoned) {
            take = w_.size();
        } else if (t >= sigma_.size()) {
            take = largestCandidate(t);
        }
        if (take) {
            for (std::size_t i = 0; i < *take; ++i) {
                if (a_.insert(w_[i]).second) firstIn_[w_[i]] = t + 1;
            }
        }
        grewLastStep_ = a_.size() != before;
        t_ = t + 1;
    }

    std::optional<std::size_t> largestCandidate(Budget t) {
        const std::size_t n = w_.size();
        std::size_t kmin = a_.size() + 1;
        if (!a_.empty()) {
            auto it = std::lower_bound(w_.begin(), w_.end(), *a_.rbegin());
            if (it == w_.end() || *it != *a_.rbegin()) return std::nullopt;
            kmin = std::max<std::size_t>(kmin, static_cast<std::size_t>(it - w_.begin()) + 1);
            for (Natural x : a_) {
                if (!std::binary_search(w_.begin(), w_.end(), x)) return std::nullopt;
            }
        }
        if (kmin > n) return std::nullopt;

        std::vector<Budget> prefixMax(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i) prefixMax[i + 1] = std::max(prefixMax[i], firstStep_.at(w_[i]));

        std::optional<Prefix> canonical;
        for (std::size_t k = n; k >= kmin; --k) {
            const Budget r = std::max<Budget>(sigma_.size(), prefixMax[k]);
            if (verdictAt(r, t, canonical)) return k;
        }
        return std::nullopt;
    }

    bool verdictAt(std::size_t len, Budget t, std::optional<Prefix>& canonical) {
        if (verdict_.size() <= len) verdict_.resize(len + 1, -1);
        if (verdict_[len] < 0) {
            verdict_[len] = m_(canonicalPrefix(len, t, canonical)) == base_ ? 1 : 0;
        }
        return verdict_[len] == 1;
    }

    // C_t[len] for len ≤ t.  For an exact base, C_t agrees with the
    // descriptor below t, so one shared prefix of the descriptor serves.
    Prefix canonicalPrefix(std::size_t len, Budget t, std::optional<Prefix>& canonical) {
        if (base_.isExact()) {
            if (limit_.size() < len) {
                const auto& d = base_.descriptor();
                std::vector<bool> labels(std::max<std::size_t>(2 * len, 64));
                for (std::size_t y = 0; y < labels.size(); ++y) labels[y] = d.contains(y);
                limit_ = Prefix::canonical(labels);
            }
            return limit_.take(len);
        }
        if (!canonical) {
            std::vector<bool> labels(t);
            for (Natural y = 0; y < t; ++y) labels[y] = std::binary_search(w_.begin(), w_.end(), y);
            canonical = Prefix::canonical(labels);
        }
        return canonical->take(len);
    }

    std::mutex mutex_;
    Prefix limit_;
    Learner m_;
    Prefix sigma_;
    Hypothesis base_;
    NatSet ng_;
    Budget t_ = 0;
    NatSet a_;
    std::map<Natural, Budget> firstIn_;
    std::vector<Natural> w_;
    std::unordered_map<Natural, Budget> firstStep_;
    std::vector<signed char> verdict_;
    bool grewLastStep_ = true;
};

class ChainEnumerator final : public Enumerator::Impl {
public:
    explicit ChainEnumerator(std::shared_ptr<ApproxChain> chain) : chain_(std::move(chain)) {}
    bool contains(Natural x, Budget t) const override { return chain_->contains(x, t); }
    std::vector<Natural> enumUpTo(Budget t) const override { return chain_->members(t); }
    Provenance provenance() const override { return Provenance::ApproxChain; }
    std::string bound() const override { return "pos(σ) ∪ W^(t-1) of M(σ)"; }

private:
    std::shared_ptr<ApproxChain> chain_;
};

// ------------------------------------------------------------------ conv-sdec

class ConvSDec final : public Learner::Impl {
public:
    explicit ConvSDec(Learner m) : m_(std::move(m)) {}

    struct Entry {
        Hypothesis out;
        Prefix anchor;
        Hypothesis anchorBase;
        std::shared_ptr<ApproxChain> chain;
    };

    Hypothesis conjecture(const Prefix& sigma) const override { return entryFor(sigma).out; }
    std::string name() const override { return "conv-sdec(" + m_.name() + ")"; }

    Entry entryFor(const Prefix& sigma) const {
        std::lock_guard lock(mutex_);
        std::size_t j = sigma.size() + 1;
        const Entry* known = nullptr;
        while (j > 0 && !known) known = memo_.find(sigma.take(--j).key());
        std::optional<Entry> prev;
        if (known) prev = *known;
        for (std::size_t i = known ? j + 1 : 0; i <= sigma.size(); ++i) {
            const Prefix tau = sigma.take(i);
            if (!prev) {
                prev = memo_.insert(tau.key(), issue(tau));
                continue;
            }
            const Hypothesis base = m_(tau);
            if (base != prev->anchorBase && !consistentWithChain(tau, *prev->chain)) {
                prev = memo_.insert(tau.key(), issue(tau));
            } else {
                prev = memo_.insert(tau.key(), *prev);
            }
        }
        return *prev;
    }

private:
    static bool consistentWithChain(const Prefix& tau, ApproxChain& chain) {
        for (const auto& p : tau) {
            if (chain.contains(p.value, tau.size()) != p.label) return false;
        }
        return true;
    }

    Entry issue(const Prefix& tau) const {
        Hypothesis base = m_(tau);
        auto chain = std::make_shared<ApproxChain>(m_, tau, base);
        Hypothesis out = Hypothesis::enumerated("p(" + m_.name() + ";" + prefixText(tau) + ")",
                                                Enumerator(std::make_shared<ChainEnumerator>(chain)));
        return Entry{std::move(out), tau, std::move(base), std::move(chain)};
    }

    Learner m_;
    mutable std::mutex mutex_;
    mutable detail::PrefixMemo<Entry> memo_;
};

// ------------------------------------------------------------------- collapse

class Collapse final : public Learner::Impl {
public:
    Collapse(Learner m, std::optional<Natural> a) : m_(std::move(m)), a_(a) {}

    Hypothesis conjecture(const Prefix& sigma) const override {
        const std::vector<Hypothesis> seen = distinctSoFar(sigma);
        const NatSet ng = sigma.ng();
        std::vector<Hypothesis> votes;
        for (const auto& h : seen) {
            if (a_) {
                Natural errors = 0;
                for (Natural x : h.enumerator().enumUpTo(sigma.size())) errors += ng.count(x);
                if (errors > *a_) continue;
            }
            votes.push_back(guardXi(sigma, h));
        }
        return unionVote(votes);
    }
    std::string name() const override {
        return "collapse(" + m_.name() + "," + (a_ ? std::to_string(*a_) : std::string("*")) + ")";
    }

private:
    // Distinct M(σ[i]), i ≤ |σ|, in order of first appearance.
    std::vector<Hypothesis> distinctSoFar(const Prefix& sigma) const {
        std::lock_guard lock(mutex_);
        std::size_t j = sigma.size() + 1;
        const std::vector<Hypothesis>* known = nullptr;
        while (j > 0 && !known) known = memo_.find(sigma.take(--j).key());
        std::vector<Hypothesis> acc = known ? *known : std::vector<Hypothesis>{};
        for (std::size_t i = known ? j + 1 : 0; i <= sigma.size(); ++i) {
            const Prefix tau = sigma.take(i);
            Hypothesis h = m_(tau);
            if (std::find(acc.begin(), acc.end(), h) == acc.end()) acc.push_back(std::move(h));
            memo_.insert(tau.key(), acc);
        }
        return acc;
    }

    Learner m_;
    std::optional<Natural> a_;
    mutable std::mutex mutex_;
    mutable detail::PrefixMemo<std::vector<Hypothesis>> memo_{std::size_t{1} << 14};
};

}  // namespace

Learner setDrivenWrap(Learner m) {
    requireTotal(m, "set-driven wrapping");
    return Learner(std::make_shared<SetDriven>(std::move(m)));
}

Learner totalize(Learner m) {
    if (m.kind() == Learner::Kind::Partial && !m.cost(Prefix{})) {
        throw PreconditionError("totalize: " + m.name() + " does not halt on the empty prefix");
    }
    return Learner(std::make_shared<Totalized>(std::move(m)));
}

Learner synDecPad(Learner m) {
    requireTotal(m, "syntactic-decisiveness padding");
    return Learner(std::make_shared<SynDecPadded>(std::move(m)));
}

ApproxChainState initialApprox(const Learner& m, const Prefix& sigma) {
    return ApproxChainState{sigma, 0, sigma.pos(), m(sigma)};
}

ApproxChainState advanceApprox(const Learner& m, const ApproxChainState& st) {
    const Enumerator& e = st.baseHyp.enumerator();
    const std::vector<Natural> w = e.enumUpTo(st.t);
    ApproxChainState next = st;
    next.t = st.t + 1;

    const NatSet ng = st.sigma.ng();
    for (Natural x : st.a) {
        if (ng.count(x)) {
            next.a = NatSet(w.begin(), w.end());
            return next;
        }
    }
    if (st.t < st.sigma.size()) return next;

    const std::size_t n = w.size();
    for (std::size_t k = n; k > 0; --k) {
        const NatSet x(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        if (x.size() <= st.a.size() || !std::includes(x.begin(), x.end(), st.a.begin(), st.a.end())) continue;
        std::optional<Budget> r;
        for (Budget c = st.sigma.size(); c <= st.t && !r; ++c) {
            if (std::all_of(x.begin(), x.end(), [&](Natural v) { return e.contains(v, c); })) r = c;
        }
        if (!r) continue;
        std::vector<InfoPair> items;
        for (Natural y = 0; y < *r; ++y) items.push_back({y, std::binary_search(w.begin(), w.end(), y)});
        if (m(Prefix(std::move(items))) == st.baseHyp) {
            next.a = x;
            return next;
        }
    }
    return next;
}

Learner convSDecTransform(Learner m) {
    requireTotal(m, "the conservative rewrite");
    return Learner(std::make_shared<ConvSDec>(std::move(m)));
}

Prefix convSDecAnchor(const Learner& transformed, const Prefix& sigma) {
    const auto* impl = dynamic_cast<const ConvSDec*>(&transformed.impl());
    if (!impl) throw PreconditionError(transformed.name() + " was not built by the conservative rewrite");
    return impl->entryFor(sigma).anchor;
}

Prefix lastMindChange(const Learner& m, const Prefix& sigma) {
    const Hypothesis last = m(sigma);
    std::size_t j = sigma.size();
    while (j > 0 && m(sigma.take(j - 1)) == last) --j;
    return sigma.take(j);
}

Learner vacillationCollapse(Learner m, std::optional<Natural> a) {
    requireTotal(m, "vacillation collapse");
    return Learner(std::make_shared<Collapse>(std::move(m), a));
}

}  // namespace goldlab
