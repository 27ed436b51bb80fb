#include "goldlab/learner.hpp"

#include "goldlab/errors.hpp"

namespace goldlab {

Learner::Learner(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

namespace {

class FunctionLearner final : public Learner::Impl {
public:
    FunctionLearner(std::string name, std::function<Hypothesis(const Prefix&)> fn)
        : name_(std::move(name)), fn_(std::move(fn)) {}
    Hypothesis conjecture(const Prefix& sigma) const override { return fn_(sigma); }
    std::string name() const override { return name_; }

private:
    std::string name_;
    std::function<Hypothesis(const Prefix&)> fn_;
};

}  // namespace

Learner Learner::total(std::string name, std::function<Hypothesis(const Prefix&)> fn) {
    return Learner(std::make_shared<FunctionLearner>(std::move(name), std::move(fn)));
}

LearnerAnswer Learner::evaluate(const Prefix& sigma, Budget budget) const {
    if (impl_->kind() == Kind::Total) return impl_->conjecture(sigma);
    const auto c = impl_->cost(sigma);
    if (!c || *c > budget) return Divergence{budget};
    return impl_->conjecture(sigma);
}

Hypothesis Learner::operator()(const Prefix& sigma) const {
    if (impl_->kind() == Kind::Partial && !impl_->cost(sigma)) {
        throw PreconditionError(impl_->name() + " does not halt on a prefix of length " +
                                std::to_string(sigma.size()));
    }
    return impl_->conjecture(sigma);
}

Trace runTrace(const Learner& m, const Informant& informant, std::size_t horizon,
               const std::optional<BudgetSchedule>& budget) {
    if (m.kind() == Learner::Kind::Partial && !budget) {
        throw PreconditionError("partial learner " + m.name() + " needs a budget schedule");
    }
    Trace tr;
    tr.target = informant.target();
    const Prefix data = informant.prefix(horizon);
    tr.hyps.reserve(horizon);
    for (std::size_t t = 0; t < horizon; ++t) {
        const Prefix sigma = data.take(t);
        if (m.kind() == Learner::Kind::Total) {
            tr.hyps.push_back(m(sigma));
            continue;
        }
        auto answer = m.evaluate(sigma, (*budget)(t));
        if (auto* d = std::get_if<Divergence>(&answer)) {
            tr.divergence = *d;
            break;
        }
        tr.hyps.push_back(std::get<Hypothesis>(answer));
    }
    tr.prefix = data.take(tr.hyps.size());
    return tr;
}

Trace traceOnPrefix(const Learner& m, const Prefix& data, std::optional<LangDescriptor> target) {
    Trace tr;
    tr.target = std::move(target);
    tr.prefix = data;
    tr.hyps.reserve(data.size());
    for (std::size_t t = 0; t < data.size(); ++t) tr.hyps.push_back(m(data.take(t)));
    return tr;
}

}  // namespace goldlab
