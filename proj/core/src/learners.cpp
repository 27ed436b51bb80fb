#include "goldlab/learners.hpp"

#include "goldlab/errors.hpp"

namespace goldlab {

LangDescriptor MinResolver::operator()(Natural m) const {
    auto d = lookup(m);
    if (!d) throw ConfigError(name + " has no language with minimum " + std::to_string(m));
    if (!d->contains(m)) throw ConfigError(name + "(" + std::to_string(m) + ") does not contain its index");
    for (Natural y = 0; y < m; ++y) {
        if (d->contains(y)) {
            throw ConfigError(name + "(" + std::to_string(m) + ") contains the smaller value " + std::to_string(y));
        }
    }
    return *d;
}

MinResolver MinResolver::fromFamily(std::shared_ptr<const UniformFamily> family) {
    std::string name = family->name();
    return {std::move(name), [family](Natural m) -> std::optional<LangDescriptor> {
                return LangDescriptor::uniform(family, m);
            }};
}

MinResolver MinResolver::fromTable(std::string name, std::map<Natural, LangDescriptor> table) {
    return {std::move(name), [table = std::move(table)](Natural m) -> std::optional<LangDescriptor> {
                auto it = table.find(m);
                if (it == table.end()) return std::nullopt;
                return it->second;
            }};
}

namespace learners {

namespace {

class Fn final : public Learner::Impl {
public:
    Fn(std::string name, std::function<LangDescriptor(const Prefix&)> fn) : name_(std::move(name)), fn_(std::move(fn)) {}
    Hypothesis conjecture(const Prefix& sigma) const override { return Hypothesis::exact(fn_(sigma)); }
    std::string name() const override { return name_; }

private:
    std::string name_;
    std::function<LangDescriptor(const Prefix&)> fn_;
};

Learner exactLearner(std::string name, std::function<LangDescriptor(const Prefix&)> fn) {
    return Learner(std::make_shared<Fn>(std::move(name), std::move(fn)));
}

LangDescriptor evensWMonRule(const Prefix& sigma) {
    bool oneNegative = false;
    bool twoPositive = false;
    for (const auto& p : sigma) {
        oneNegative |= p.value == 1 && !p.label;
        twoPositive |= p.value == 2 && p.label;
    }
    return oneNegative && !twoPositive ? LangDescriptor::evensPlusOne() : LangDescriptor::evens();
}

}  // namespace

Learner cofinite() {
    return exactLearner("cofinite", [](const Prefix& sigma) { return LangDescriptor::cofinite(sigma.ng()); });
}

Learner splitFamily() {
    return exactLearner("split-family", [](const Prefix& sigma) {
        const NatSet pos = sigma.pos();
        bool allEven = true;
        NatSet halves;
        for (Natural v : pos) {
            if (v % 2) {
                allEven = false;
            } else {
                halves.insert(v / 2);
            }
        }
        return allEven ? LangDescriptor::splitAll() : LangDescriptor::split(std::move(halves));
    });
}

Learner evensWMon() { return exactLearner("evens-wmon", evensWMonRule); }

Learner evensPair() {
    return exactLearner("evens-pair", [](const Prefix& sigma) {
        for (const auto& p : sigma) {
            if (p.value == 1 && p.label) return LangDescriptor::evensPlusOne();
        }
        return evensWMonRule(sigma);
    });
}

Learner doubledPair(LangDescriptor d) {
    std::string name = "doubled-pair(" + d.key() + ")";
    return exactLearner(std::move(name), [d](const Prefix& sigma) {
        const NatSet pos = sigma.pos();
        for (Natural v : sigma.ng()) {
            if (v % 2 == 0 && pos.count(v + 1)) return LangDescriptor::doubledPair(d, v / 2);
        }
        return LangDescriptor::doubledPair(d, std::nullopt);
    });
}

Learner pairDistinguisher(LangDescriptor d) {
    std::string name = "pair-distinguisher(" + d.key() + ")";
    return exactLearner(std::move(name), [d](const Prefix& sigma) {
        return sigma.ng().empty() ? LangDescriptor::naturals() : d;
    });
}

Learner minCoded(MinResolver resolve) {
    std::string name = "min-coded(" + resolve.name + ")";
    return exactLearner(std::move(name), [resolve](const Prefix& sigma) {
        const NatSet pos = sigma.pos();
        const NatSet ng = sigma.ng();
        auto in = [](const NatSet& s, Natural v) { return s.count(v) > 0; };
        // Candidates m are bounded by pos(σ); the prefix condition on k < m is
        // monotone in m, so scan upwards and stop at the first failure.
        std::optional<Natural> m;
        const Natural top = pos.empty() ? 0 : *pos.rbegin() / 2 + 1;
        for (Natural c = 0; c < top; ++c) {
            if (in(pos, 2 * c) || in(pos, 2 * c + 1)) {
                m = c;
                break;
            }
            if (!in(ng, 2 * c) && !in(ng, 2 * c + 1)) break;
        }
        if (!m) return LangDescriptor::finite({});
        std::optional<Natural> x;
        for (Natural v : pos) {
            if (v % 2 == 0 && in(ng, v + 1)) {
                x = v / 2;
                break;
            }
        }
        return LangDescriptor::doubledPair(resolve(*m), x, ExceptionSide::Even);
    });
}

Learner minUnionException(MinResolver resolve) {
    std::string name = "min-union-exception(" + resolve.name + ")";
    return exactLearner(std::move(name), [resolve](const Prefix& sigma) {
        const NatSet pos = sigma.pos();
        if (pos.empty()) return LangDescriptor::finite({});
        const LangDescriptor base = resolve(*pos.begin());
        const Budget t = sigma.size();
        for (Natural v : pos) {
            // v ∉ W^t of the lifted base: either not yet reached or not a member.
            if (v >= t || !base.contains(v)) return LangDescriptor::withException(base, v);
        }
        return base;
    });
}

Learner enumeration(std::vector<LangDescriptor> family) {
    std::string name = "enumeration[";
    for (std::size_t i = 0; i < family.size(); ++i) name += (i ? "," : "") + family[i].key();
    name += "]";
    return exactLearner(std::move(name), [family = std::move(family)](const Prefix& sigma) {
        for (const auto& d : family) {
            if (consistent(sigma, d)) return d;
        }
        return LangDescriptor::finite({});
    });
}

namespace {

class UShaped final : public Learner::Impl {
public:
    UShaped(Learner base, std::size_t at, LangDescriptor detour)
        : base_(std::move(base)), at_(at), detour_(std::move(detour)) {}
    Hypothesis conjecture(const Prefix& sigma) const override {
        return sigma.size() == at_ ? Hypothesis::exact(detour_) : base_(sigma);
    }
    std::string name() const override {
        return "u-shaped(" + base_.name() + "," + std::to_string(at_) + "," + detour_.key() + ")";
    }

private:
    Learner base_;
    std::size_t at_;
    LangDescriptor detour_;
};

class Cycling final : public Learner::Impl {
public:
    explicit Cycling(std::vector<Hypothesis> hyps) : hyps_(std::move(hyps)) {
        if (hyps_.empty()) throw PreconditionError("cycling learner needs at least one hypothesis");
    }
    Hypothesis conjecture(const Prefix& sigma) const override { return hyps_[sigma.size() % hyps_.size()]; }
    std::string name() const override {
        std::string n = "cycling[";
        for (std::size_t i = 0; i < hyps_.size(); ++i) n += (i ? "," : "") + hyps_[i].key();
        return n + "]";
    }

private:
    std::vector<Hypothesis> hyps_;
};

class LinearCost final : public Learner::Impl {
public:
    LinearCost(Learner base, Budget factor, Budget offset) : base_(std::move(base)), factor_(factor), offset_(offset) {}
    Hypothesis conjecture(const Prefix& sigma) const override { return base_(sigma); }
    std::optional<Budget> cost(const Prefix& sigma) const override { return factor_ * sigma.size() + offset_; }
    Learner::Kind kind() const override { return Learner::Kind::Partial; }
    std::string name() const override {
        return "linear-cost(" + base_.name() + "," + std::to_string(factor_) + "," + std::to_string(offset_) + ")";
    }

private:
    Learner base_;
    Budget factor_;
    Budget offset_;
};

}  // namespace

Learner uShaped(Learner base, std::size_t at, LangDescriptor detour) {
    return Learner(std::make_shared<UShaped>(std::move(base), at, std::move(detour)));
}

Learner lengthThreshold(Natural divisor) {
    if (divisor == 0) throw PreconditionError("length threshold needs a positive divisor");
    return exactLearner("length-threshold(" + std::to_string(divisor) + ")", [divisor](const Prefix& sigma) {
        return LangDescriptor::uniform(UniformFamily::parityThreshold(), sigma.size() / divisor);
    });
}

Learner cycling(std::vector<Hypothesis> hyps) { return Learner(std::make_shared<Cycling>(std::move(hyps))); }

Learner linearCost(Learner base, Budget factor, Budget offset) {
    return Learner(std::make_shared<LinearCost>(std::move(base), factor, offset));
}

}  // namespace learners
}  // namespace goldlab
