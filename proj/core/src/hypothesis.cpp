#include "goldlab/hypothesis.hpp"

#include <algorithm>

#include "goldlab/errors.hpp"
#include "goldlab/pairing.hpp"

namespace goldlab {

// ------------------------------------------------------------------- Registry

namespace {
thread_local Registry* tlsCurrent = nullptr;
}

Code Registry::intern(const std::string& key) {
    std::lock_guard lock(mutex_);
    auto it = byKey_.find(key);
    if (it != byKey_.end()) return it->second;
    while (byCode_.count(next_)) ++next_;
    const Code c = next_++;
    byKey_.emplace(key, c);
    byCode_.emplace(c, key);
    return c;
}

void Registry::adopt(Code code, const std::string& key) {
    std::lock_guard lock(mutex_);
    auto k = byKey_.find(key);
    auto c = byCode_.find(code);
    if (k != byKey_.end() && k->second != code) {
        throw ConfigError("code table clash: key already bound to code " + std::to_string(k->second));
    }
    if (c != byCode_.end() && c->second != key) {
        throw ConfigError("code table clash: code " + std::to_string(code) + " already bound to another key");
    }
    byKey_.emplace(key, code);
    byCode_.emplace(code, key);
}

std::optional<std::string> Registry::keyOf(Code code) const {
    std::lock_guard lock(mutex_);
    auto it = byCode_.find(code);
    if (it == byCode_.end()) return std::nullopt;
    return it->second;
}

std::size_t Registry::size() const {
    std::lock_guard lock(mutex_);
    return byCode_.size();
}

Registry& Registry::global() {
    static Registry instance;
    return instance;
}

Registry& Registry::current() { return tlsCurrent ? *tlsCurrent : global(); }

ScopedRegistry::ScopedRegistry() : previous_(tlsCurrent) { tlsCurrent = &own_; }
ScopedRegistry::~ScopedRegistry() { tlsCurrent = previous_; }

// ----------------------------------------------------------------- Hypothesis

Hypothesis Hypothesis::exact(LangDescriptor d) {
    std::string key = "exact:" + d.key();
    const Code c = Registry::current().intern(key);
    Enumerator e = liftExact(d);
    return Hypothesis(std::make_shared<const Data>(Data{c, std::move(key), std::move(d), std::move(e), std::nullopt}));
}

Hypothesis Hypothesis::enumerated(std::string key, Enumerator e) {
    const Code c = Registry::current().intern(key);
    return Hypothesis(std::make_shared<const Data>(Data{c, std::move(key), std::nullopt, std::move(e), std::nullopt}));
}

Hypothesis Hypothesis::restore(Code code, std::string key, std::optional<LangDescriptor> d, Enumerator e,
                               std::optional<Natural> salt) {
    Registry::current().adopt(code, key);
    return Hypothesis(std::make_shared<const Data>(Data{code, std::move(key), std::move(d), std::move(e), salt}));
}

const LangDescriptor& Hypothesis::descriptor() const {
    if (!data_->descriptor) throw PreconditionError("hypothesis " + key() + " is enumerated, not exact");
    return *data_->descriptor;
}

bool member(const Hypothesis& h, Natural x) { return h.descriptor().contains(x); }

MemberStatus memberUpTo(const Hypothesis& h, Natural x, Budget t) {
    return h.enumerator().contains(x, t) ? MemberStatus::In : MemberStatus::NotYet;
}

bool memberAt(const Hypothesis& h, Natural x, Budget t) {
    return h.isExact() ? h.descriptor().contains(x) : h.enumerator().contains(x, t);
}

bool agreeUpTo(const Hypothesis& a, const Hypothesis& b, Natural horizon, Budget budget) {
    for (Natural x = 0; x < horizon; ++x) {
        if (memberAt(a, x, budget) != memberAt(b, x, budget)) return false;
    }
    return true;
}

AnomalyCount symDiffCount(const Hypothesis& h, const LangDescriptor& l, Natural horizon, Budget budget) {
    if (h.isExact()) {
        auto ph = h.descriptor().periodic();
        auto pl = l.periodic();
        if (ph && pl) {
            auto n = ph->symDiffSize(*pl);
            if (!n) return {AnomalyCount::Kind::MoreThan, horizon};
            return {AnomalyCount::Kind::Exact, *n};
        }
    }
    Natural count = 0;
    for (Natural x = 0; x < horizon; ++x) count += memberAt(h, x, budget) != l.contains(x);
    return {AnomalyCount::Kind::WithinHorizon, count};
}

Hypothesis pad(const Hypothesis& h, Natural salt) {
    std::string key = "pad(" + std::to_string(h.code()) + "," + std::to_string(salt) + ")";
    const Code c = Registry::current().intern(key);
    return Hypothesis(std::make_shared<const Hypothesis::Data>(
        Hypothesis::Data{c, std::move(key), h.data_->descriptor, h.data_->enumerator, salt}));
}

Hypothesis indFinite(NatSet x) { return Hypothesis::exact(LangDescriptor::finite(std::move(x))); }

// ----------------------------------------------------------------- guard / union

namespace {

std::string listText(const std::vector<Natural>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

class GuardEnum final : public Enumerator::Impl {
public:
    GuardEnum(Enumerator inner, NatSet k) : inner_(std::move(inner)), k_(std::move(k)) {}

    bool contains(Natural x, Budget t) const override { return !k_.count(x) && inner_.contains(x, t); }
    bool haltsWithin(Natural x, Budget s) const override { return !k_.count(x) && inner_.haltsWithin(x, s); }
    std::vector<Natural> enumUpTo(Budget t) const override {
        auto v = inner_.enumUpTo(t);
        std::erase_if(v, [this](Natural x) { return k_.count(x) > 0; });
        return v;
    }
    Provenance provenance() const override { return Provenance::Guard; }
    std::string bound() const override { return inner_.bound(); }

private:
    Enumerator inner_;
    NatSet k_;
};

class UnionEnum final : public Enumerator::Impl {
public:
    explicit UnionEnum(std::vector<Enumerator> parts) : parts_(std::move(parts)) {}

    bool contains(Natural x, Budget t) const override {
        return std::any_of(parts_.begin(), parts_.end(), [&](const Enumerator& e) { return e.contains(x, t); });
    }
    bool haltsWithin(Natural x, Budget s) const override {
        return std::any_of(parts_.begin(), parts_.end(), [&](const Enumerator& e) { return e.haltsWithin(x, s); });
    }
    std::vector<Natural> enumUpTo(Budget t) const override {
        std::vector<Natural> out;
        for (const auto& e : parts_) {
            auto v = e.enumUpTo(t);
            out.insert(out.end(), v.begin(), v.end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    Provenance provenance() const override { return Provenance::UnionVote; }
    std::string bound() const override { return "union of the parts' bounds"; }

private:
    std::vector<Enumerator> parts_;
};

class GraphEnum final : public Enumerator::Impl {
public:
    explicit GraphEnum(FnProgram p) : p_(std::move(p)) {}

    bool haltsWithin(Natural n, Budget s) const override {
        auto [x, y] = pairDecode(n);
        auto v = p_.evalWithBudget(x, s);
        return v && *v == y;
    }
    bool contains(Natural n, Budget t) const override { return n < t && haltsWithin(n, t); }
    std::vector<Natural> enumUpTo(Budget t) const override {
        std::vector<Natural> out;
        for (Natural n = 0; n < t; ++n) {
            if (haltsWithin(n, t)) out.push_back(n);
        }
        return out;
    }
    Provenance provenance() const override { return Provenance::GraphEncode; }
    std::string bound() const override { return "[0,t)"; }

private:
    FnProgram p_;
};

class DecodeH final : public FnProgram::Impl {
public:
    explicit DecodeH(const Hypothesis& h) : e_(h.enumerator()), name_("H(" + std::to_string(h.code()) + ")") {}

    std::optional<Natural> evalWithBudget(Natural x, Budget t) const override {
        // Walk i = ⟨n,s⟩ in increasing order along Cantor diagonals; within a
        // diagonal n steps down by one, so (u,v) = π(n) is updated in O(1).
        Natural i = 0;
        for (Natural w = 0; i < t; ++w) {
            auto [u, v] = pairDecode(w);  // n = w at s = 0
            for (Natural s = 0; s <= w && i < t; ++s, ++i) {
                if (s > 0) {
                    // n ↦ n-1
                    if (v > 0) {
                        ++u;
                        --v;
                    } else {
                        v = u - 1;
                        u = 0;
                    }
                }
                if (u == x && e_.haltsWithin(w - s, s)) return v;
            }
        }
        return std::nullopt;
    }
    const std::string& name() const override { return name_; }

private:
    Enumerator e_;
    std::string name_;
};

}  // namespace

Hypothesis guardXi(const Prefix& sigma, const Hypothesis& h) {
    NatSet k;
    const NatSet ng = sigma.ng();
    for (Natural x : h.enumerator().enumUpTo(sigma.size())) {
        if (ng.count(x)) k.insert(x);
    }
    std::string key = "guard(" + std::to_string(h.code()) + ";" + listText({k.begin(), k.end()}) + ")";
    return Hypothesis::enumerated(std::move(key),
                                  Enumerator(std::make_shared<GuardEnum>(h.enumerator(), std::move(k))));
}

Hypothesis unionVote(const std::vector<Hypothesis>& hs) {
    std::vector<Hypothesis> parts = hs;
    std::sort(parts.begin(), parts.end(), [](const Hypothesis& a, const Hypothesis& b) { return a.code() < b.code(); });
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    std::vector<Natural> codes;
    std::vector<Enumerator> enums;
    for (const auto& h : parts) {
        codes.push_back(h.code());
        enums.push_back(h.enumerator());
    }
    return Hypothesis::enumerated("union" + listText(codes),
                                  Enumerator(std::make_shared<UnionEnum>(std::move(enums))));
}

Hypothesis graphEncodeG(const FnProgram& p) {
    return Hypothesis::enumerated("G(" + p.name() + ")", Enumerator(std::make_shared<GraphEnum>(p)));
}

FnProgram graphDecodeH(const Hypothesis& h) { return FnProgram(std::make_shared<DecodeH>(h)); }

}  // namespace goldlab
