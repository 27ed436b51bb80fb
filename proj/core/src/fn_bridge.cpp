#include "goldlab/fn_bridge.hpp"

#include <unordered_set>

#include "goldlab/pairing.hpp"

namespace goldlab {

FnLearner::FnLearner(std::string name, std::function<FnProgram(const FnSequence&)> fn)
    : name_(std::move(name)), fn_(std::move(fn)) {}

FnLearner enumerationFnLearner(std::vector<FnProgram> candidates, Budget evalCap) {
    std::string name = "fn-enumeration[";
    for (std::size_t i = 0; i < candidates.size(); ++i) name += (i ? "," : "") + candidates[i].name();
    name += "]";
    return FnLearner(std::move(name), [candidates = std::move(candidates), evalCap](const FnSequence& tau) {
        for (const auto& p : candidates) {
            bool ok = true;
            for (const auto& [x, y] : tau) {
                if (p.evaluate(x, evalCap) != y) {
                    ok = false;
                    break;
                }
            }
            if (ok) return p;
        }
        return programs::nowhereDefined();
    });
}

FnSequence decodePositive(const Prefix& sigma) {
    FnSequence out;
    std::unordered_set<Natural> seen;
    for (const auto& p : sigma) {
        if (p.label && seen.insert(p.value).second) out.push_back(pairDecode(p.value));
    }
    return out;
}

Learner liftThroughG(FnLearner m) {
    std::string name = "lift-g(" + m.name() + ")";
    return Learner::total(std::move(name),
                          [m = std::move(m)](const Prefix& sigma) { return graphEncodeG(m(decodePositive(sigma))); });
}

std::size_t hatLength(std::size_t n) { return n * (n + 1) / 2; }

Prefix hatPrefix(const FnSequence& tau) {
    const std::size_t len = hatLength(tau.size());
    std::vector<InfoPair> items;
    items.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        const auto [a, b] = pairDecode(i);
        const auto& [x, y] = tau[a];
        items.push_back({pairEncode(x, b), y == b});
    }
    return Prefix(std::move(items));
}

FnLearner liftThroughH(Learner m) {
    std::string name = "lift-h(" + m.name() + ")";
    return FnLearner(std::move(name), [m = std::move(m)](const FnSequence& tau) { return graphDecodeH(m(hatPrefix(tau))); });
}

}  // namespace goldlab
