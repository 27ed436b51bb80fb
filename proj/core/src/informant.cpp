#include "goldlab/informant.hpp"

#include <random>

#include "goldlab/errors.hpp"
#include "json.hpp"

namespace goldlab {

using nlohmann::json;

bool consistent(const Prefix& sigma, const std::function<bool(Natural)>& member) {
    for (const auto& p : sigma) {
        if (member(p.value) != p.label) return false;
    }
    return true;
}

bool consistent(const Prefix& sigma, const LangDescriptor& a) {
    return consistent(sigma, [&a](Natural x) { return a.contains(x); });
}

// ------------------------------------------------------------------- Schedule

struct Schedule::Rule {
    enum class Kind { Identity, BlockPermutation, SeededBlocks, Duplicate, Delay };
    Kind kind = Kind::Identity;
    std::vector<Natural> perm;
    Natural width = 1;
    std::uint64_t seed = 0;
    Natural factor = 1;
    Natural lag = 0;

    Natural apply(Natural t) const {
        switch (kind) {
            case Kind::Identity: return t;
            case Kind::BlockPermutation: return (t / perm.size()) * perm.size() + perm[t % perm.size()];
            case Kind::SeededBlocks: {
                const Natural block = t / width;
                return block * width + blockPerm(block)[t % width];
            }
            case Kind::Duplicate: return t / factor;
            case Kind::Delay: return t <= lag ? 0 : t - lag;
        }
        return t;
    }

    // Fisher-Yates over an mt19937_64 stream; both are fully specified, so the
    // order is the same on every platform.
    std::vector<Natural> blockPerm(Natural block) const {
        std::vector<Natural> p(width);
        for (Natural i = 0; i < width; ++i) p[i] = i;
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + block);
        for (Natural i = width; i > 1; --i) {
            const Natural j = rng() % i;
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

    json toJson() const {
        switch (kind) {
            case Kind::Identity: return {{"kind", "identity"}};
            case Kind::BlockPermutation: return {{"kind", "block-permutation"}, {"perm", perm}};
            case Kind::SeededBlocks: return {{"kind", "seeded-blocks"}, {"width", width}, {"seed", seed}};
            case Kind::Duplicate: return {{"kind", "duplicate"}, {"factor", factor}};
            case Kind::Delay: return {{"kind", "delay"}, {"lag", lag}};
        }
        return nullptr;
    }
};

Schedule::Schedule(std::vector<std::shared_ptr<const Rule>> rules) : rules_(std::move(rules)) {}

Schedule Schedule::identity() { return Schedule({std::make_shared<const Rule>()}); }

Schedule Schedule::blockPermutation(std::vector<Natural> perm) {
    if (perm.empty()) throw ScheduleError("block permutation needs a nonempty block");
    std::vector<bool> hit(perm.size(), false);
    for (Natural v : perm) {
        if (v >= perm.size() || hit[v]) throw ScheduleError("block permutation is not a bijection of its block");
        hit[v] = true;
    }
    auto r = std::make_shared<Rule>();
    r->kind = Rule::Kind::BlockPermutation;
    r->perm = std::move(perm);
    return Schedule({r});
}

Schedule Schedule::seededBlocks(Natural width, std::uint64_t seed) {
    if (width == 0) throw ScheduleError("seeded blocks need width ≥ 1");
    auto r = std::make_shared<Rule>();
    r->kind = Rule::Kind::SeededBlocks;
    r->width = width;
    r->seed = seed;
    return Schedule({r});
}

Schedule Schedule::duplicate(Natural factor) {
    if (factor == 0) throw ScheduleError("duplication factor must be ≥ 1");
    auto r = std::make_shared<Rule>();
    r->kind = Rule::Kind::Duplicate;
    r->factor = factor;
    return Schedule({r});
}

Schedule Schedule::delay(Natural lag) {
    auto r = std::make_shared<Rule>();
    r->kind = Rule::Kind::Delay;
    r->lag = lag;
    return Schedule({r});
}

Schedule Schedule::then(const Schedule& next) const {
    auto rules = rules_;
    rules.insert(rules.end(), next.rules_.begin(), next.rules_.end());
    return Schedule(std::move(rules));
}

Natural Schedule::operator()(Natural t) const {
    for (const auto& r : rules_) t = r->apply(t);
    return t;
}

std::string Schedule::toJson() const {
    if (rules_.size() == 1) return rules_.front()->toJson().dump();
    json list = json::array();
    for (const auto& r : rules_) list.push_back(r->toJson());
    return json{{"kind", "compose"}, {"rules", list}}.dump();
}

namespace {

Schedule scheduleFromValue(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ConfigError("schedule needs a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "identity") return Schedule::identity();
    if (kind == "block-permutation") return Schedule::blockPermutation(j.at("perm").get<std::vector<Natural>>());
    if (kind == "seeded-blocks") {
        return Schedule::seededBlocks(j.at("width").get<Natural>(), j.at("seed").get<std::uint64_t>());
    }
    if (kind == "duplicate") return Schedule::duplicate(j.at("factor").get<Natural>());
    if (kind == "delay") return Schedule::delay(j.at("lag").get<Natural>());
    if (kind == "compose") {
        const json& rules = j.at("rules");
        if (!rules.is_array() || rules.empty()) throw ConfigError("compose needs a nonempty rule list");
        Schedule out = scheduleFromValue(rules.at(0));
        for (std::size_t i = 1; i < rules.size(); ++i) out = out.then(scheduleFromValue(rules.at(i)));
        return out;
    }
    throw ConfigError("unknown schedule kind '" + kind + "'");
}

}  // namespace

Schedule Schedule::fromJson(std::string_view text) {
    try {
        return scheduleFromValue(json::parse(text));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("schedule JSON: ") + e.what());
    }
}

// ------------------------------------------------------------------ Informant

Informant::Informant(Generator gen, std::optional<LangDescriptor> target, std::string description)
    : gen_(std::move(gen)), target_(std::move(target)), description_(std::move(description)) {}

Prefix Informant::prefix(std::size_t n) const {
    std::vector<InfoPair> items;
    items.reserve(n);
    for (std::size_t t = 0; t < n; ++t) items.push_back(gen_(t));
    return Prefix(std::move(items));
}

Informant canonicalInformant(const LangDescriptor& l) {
    return Informant([l](Natural t) { return InfoPair{t, l.contains(t)}; }, l, "canonical " + l.key());
}

Informant scheduledInformant(const LangDescriptor& l, const Schedule& sch) {
    return Informant(
        [l, sch](Natural t) {
            const Natural x = sch(t);
            return InfoPair{x, l.contains(x)};
        },
        l, "scheduled " + l.key() + " by " + sch.toJson());
}

}  // namespace goldlab
