#include "goldlab/descriptor.hpp"

#include <algorithm>
#include <numeric>

#include "goldlab/errors.hpp"
#include "goldlab/pairing.hpp"
#include "json.hpp"

namespace goldlab {

using nlohmann::json;

// ---------------------------------------------------------------- PeriodicSet

PeriodicSet::PeriodicSet(std::vector<bool> head, std::vector<bool> cycle)
    : head_(std::move(head)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) throw PreconditionError("periodic set needs a nonempty cycle");
}

PeriodicSet PeriodicSet::tabulate(Natural threshold, Natural period, const std::function<bool(Natural)>& member) {
    std::vector<bool> head(threshold), cycle(period);
    for (Natural x = 0; x < threshold; ++x) head[x] = member(x);
    // cycle[r] is read at x ≡ r (mod period); pick the representative ≥ threshold.
    for (Natural r = 0; r < period; ++r) {
        Natural x = threshold + ((r + period - threshold % period) % period);
        cycle[r] = member(x);
    }
    return PeriodicSet(std::move(head), std::move(cycle));
}

bool PeriodicSet::contains(Natural x) const {
    if (x < head_.size()) return head_[x];
    return cycle_[x % cycle_.size()];
}

namespace {

// Both sets are periodic from n on with a common period p, so [0, n+p) decides.
template <typename F>
bool allUpToJoint(const PeriodicSet& a, const PeriodicSet& b, F pred) {
    const Natural n = std::max(a.threshold(), b.threshold());
    const Natural p = std::lcm(a.period(), b.period());
    for (Natural x = 0; x < n + p; ++x) {
        if (!pred(a.contains(x), b.contains(x))) return false;
    }
    return true;
}

}  // namespace

bool PeriodicSet::operator==(const PeriodicSet& other) const {
    return allUpToJoint(*this, other, [](bool l, bool r) { return l == r; });
}

bool PeriodicSet::subsetOf(const PeriodicSet& other) const {
    return allUpToJoint(*this, other, [](bool l, bool r) { return !l || r; });
}

std::optional<Natural> PeriodicSet::symDiffSize(const PeriodicSet& other) const {
    const Natural n = std::max(threshold(), other.threshold());
    const Natural p = std::lcm(period(), other.period());
    for (Natural x = n; x < n + p; ++x) {
        if (contains(x) != other.contains(x)) return std::nullopt;
    }
    Natural count = 0;
    for (Natural x = 0; x < n; ++x) count += contains(x) != other.contains(x);
    return count;
}

// -------------------------------------------------------------- UniformFamily

UniformFamily::UniformFamily(std::string name, Decider decide, PeriodicForm periodic)
    : name_(std::move(name)), decide_(std::move(decide)), periodic_(std::move(periodic)) {}

std::optional<PeriodicSet> UniformFamily::periodic(Natural index) const {
    if (!periodic_) return std::nullopt;
    return periodic_(index);
}

std::shared_ptr<const UniformFamily> UniformFamily::parityThreshold() {
    static const auto family = std::make_shared<const UniformFamily>(
        "parity-threshold",
        [](Natural x, Natural k) { return x % 2 == 0 ? x <= k : x > k; },
        [](Natural k) {
            return std::optional<PeriodicSet>(PeriodicSet::tabulate(
                k + 1, 2, [k](Natural x) { return x % 2 == 0 ? x <= k : x > k; }));
        });
    return family;
}

std::shared_ptr<const UniformFamily> UniformFamily::anchoredEvens() {
    static const auto family = std::make_shared<const UniformFamily>(
        "anchored-evens",
        [](Natural x, Natural m) { return x == m || (x > m && x % 2 == 0); },
        [](Natural m) {
            return std::optional<PeriodicSet>(PeriodicSet::tabulate(
                m + 1, 2, [m](Natural x) { return x == m || (x > m && x % 2 == 0); }));
        });
    return family;
}

std::shared_ptr<const UniformFamily> UniformFamily::byName(std::string_view name) {
    if (name == "parity-threshold") return parityThreshold();
    if (name == "anchored-evens") return anchoredEvens();
    throw ConfigError("unknown uniform family '" + std::string(name) + "'");
}

// ------------------------------------------------------------- LangDescriptor

struct LangDescriptor::Node {
    Kind kind = Kind::Finite;
    NatSet set;
    bool all = false;
    std::optional<LangDescriptor> base;
    std::optional<Natural> x;
    ExceptionSide side = ExceptionSide::Odd;
    std::optional<FnProgram> program;
    std::shared_ptr<const UniformFamily> family;
    Natural index = 0;
    std::string key;
};

namespace {

json setJson(const NatSet& s) { return json(std::vector<Natural>(s.begin(), s.end())); }

const char* kindTag(LangDescriptor::Kind k) {
    switch (k) {
        case LangDescriptor::Kind::Finite: return "finite";
        case LangDescriptor::Kind::Cofinite: return "cofinite";
        case LangDescriptor::Kind::Evens: return "evens";
        case LangDescriptor::Kind::EvensPlusOne: return "evens-plus-one";
        case LangDescriptor::Kind::Split: return "split";
        case LangDescriptor::Kind::BaseWithException: return "base-with-exception";
        case LangDescriptor::Kind::DoubledPair: return "doubled-pair";
        case LangDescriptor::Kind::Graph: return "graph";
        case LangDescriptor::Kind::Uniform: return "uniform";
    }
    return "?";
}

}  // namespace

LangDescriptor::LangDescriptor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

namespace {

// Keys are built once at construction from the children's keys.
template <typename Node>
void seal(Node& n, json j) {
    j["kind"] = kindTag(n.kind);
    n.key = j.dump();
}

}  // namespace

LangDescriptor LangDescriptor::finite(NatSet x) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Finite;
    n->set = std::move(x);
    seal(*n, {{"X", setJson(n->set)}});
    return LangDescriptor(n);
}

LangDescriptor LangDescriptor::cofinite(NatSet x) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Cofinite;
    n->set = std::move(x);
    seal(*n, {{"X", setJson(n->set)}});
    return LangDescriptor(n);
}

LangDescriptor LangDescriptor::evens() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Evens;
    seal(*n, json::object());
    return LangDescriptor(n);
}

LangDescriptor LangDescriptor::evensPlusOne() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::EvensPlusOne;
    seal(*n, json::object());
    return LangDescriptor(n);
}

LangDescriptor LangDescriptor::split(NatSet x) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Split;
    n->set = std::move(x);
    seal(*n, {{"X", setJson(n->set)}});
    return LangDescriptor(n);
}

LangDescriptor LangDescriptor::splitAll() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Split;
    n->all = true;
    seal(*n, {{"X", "all"}});
    return LangDescriptor(n);
}

LangDescriptor LangDescriptor::withException(LangDescriptor base, Natural x) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::BaseWithException;
    n->base = base;
    n->x = x;
    seal(*n, {{"base", json::parse(base.key())}, {"x", x}});
    return LangDescriptor(n);
}

LangDescriptor LangDescriptor::doubledPair(LangDescriptor base, std::optional<Natural> x, ExceptionSide side) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::DoubledPair;
    n->base = base;
    n->x = x;
    n->side = side;
    seal(*n, {{"base", json::parse(base.key())},
              {"x", x ? json(*x) : json(nullptr)},
              {"side", side == ExceptionSide::Odd ? "odd" : "even"}});
    return LangDescriptor(n);
}

LangDescriptor LangDescriptor::graph(FnProgram f) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Graph;
    n->program = std::move(f);
    seal(*n, {{"program", n->program->name()}});
    return LangDescriptor(n);
}

LangDescriptor LangDescriptor::uniform(std::shared_ptr<const UniformFamily> family, Natural index) {
    if (!family) throw PreconditionError("uniform descriptor needs a family");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Uniform;
    n->family = std::move(family);
    n->index = index;
    seal(*n, {{"family", n->family->name()}, {"index", index}});
    return LangDescriptor(n);
}

LangDescriptor::Kind LangDescriptor::kind() const { return node_->kind; }

const NatSet& LangDescriptor::set() const {
    switch (node_->kind) {
        case Kind::Finite:
        case Kind::Cofinite:
        case Kind::Split:
            return node_->set;
        default:
            throw PreconditionError("descriptor " + key() + " has no set argument");
    }
}

bool LangDescriptor::isSplitAll() const { return node_->kind == Kind::Split && node_->all; }

const LangDescriptor& LangDescriptor::base() const {
    if (!node_->base) throw PreconditionError("descriptor " + key() + " has no base");
    return *node_->base;
}

std::optional<Natural> LangDescriptor::exception() const { return node_->x; }
ExceptionSide LangDescriptor::side() const { return node_->side; }

const FnProgram& LangDescriptor::program() const {
    if (!node_->program) throw PreconditionError("descriptor " + key() + " is not a graph");
    return *node_->program;
}

const UniformFamily& LangDescriptor::family() const { return *familyPtr(); }

std::shared_ptr<const UniformFamily> LangDescriptor::familyPtr() const {
    if (!node_->family) throw PreconditionError("descriptor " + key() + " is not uniform");
    return node_->family;
}

Natural LangDescriptor::index() const { return node_->index; }

const std::string& LangDescriptor::key() const { return node_->key; }

bool LangDescriptor::contains(Natural x) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Finite: return n.set.count(x) > 0;
        case Kind::Cofinite: return n.set.count(x) == 0;
        case Kind::Evens: return x % 2 == 0;
        case Kind::EvensPlusOne: return x % 2 == 0 || x == 1;
        case Kind::Split:
            if (n.all) return x % 2 == 0;
            return (x % 2 == 0) == (n.set.count(x / 2) > 0);
        case Kind::BaseWithException: return x == *n.x || base().contains(x);
        case Kind::DoubledPair: {
            const Natural half = x / 2;
            const bool exceptionalSide = (x % 2 == 1) == (n.side == ExceptionSide::Odd);
            if (exceptionalSide && n.x && half == *n.x) return true;
            return base().contains(half);
        }
        case Kind::Graph: {
            auto [u, v] = pairDecode(x);
            auto y = n.program->evaluate(u);
            return y && *y == v;
        }
        case Kind::Uniform: return n.family->decide(x, n.index);
    }
    return false;
}

std::optional<PeriodicSet> LangDescriptor::periodic() const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Finite: {
            const Natural top = n.set.empty() ? 0 : *n.set.rbegin() + 1;
            return PeriodicSet::tabulate(top, 1, [this](Natural x) { return contains(x); });
        }
        case Kind::Cofinite: {
            const Natural top = n.set.empty() ? 0 : *n.set.rbegin() + 1;
            return PeriodicSet::tabulate(top, 1, [this](Natural x) { return contains(x); });
        }
        case Kind::Evens: return PeriodicSet({}, {true, false});
        case Kind::EvensPlusOne: return PeriodicSet({true, true}, {true, false});
        case Kind::Split: {
            const Natural top = n.all || n.set.empty() ? 0 : 2 * (*n.set.rbegin() + 1);
            return PeriodicSet::tabulate(top, 2, [this](Natural x) { return contains(x); });
        }
        case Kind::BaseWithException: {
            auto b = base().periodic();
            if (!b) return std::nullopt;
            const Natural top = std::max(b->threshold(), *n.x + 1);
            return PeriodicSet::tabulate(top, b->period(),
                                         [&](Natural x) { return x == *n.x || b->contains(x); });
        }
        case Kind::DoubledPair: {
            auto b = base().periodic();
            if (!b) return std::nullopt;
            Natural top = b->threshold();
            if (n.x) top = std::max(top, *n.x + 1);
            const ExceptionSide side = n.side;
            const std::optional<Natural> ex = n.x;
            return PeriodicSet::tabulate(2 * top, 2 * b->period(), [&](Natural x) {
                const Natural half = x / 2;
                const bool exceptionalSide = (x % 2 == 1) == (side == ExceptionSide::Odd);
                if (exceptionalSide && ex && half == *ex) return true;
                return b->contains(half);
            });
        }
        case Kind::Graph: return std::nullopt;
        case Kind::Uniform: return n.family->periodic(n.index);
    }
    return std::nullopt;
}

bool member(const LangDescriptor& d, Natural x) { return d.contains(x); }

namespace {

std::pair<PeriodicSet, PeriodicSet> periodicPair(const LangDescriptor& a, const LangDescriptor& b) {
    auto pa = a.periodic();
    auto pb = b.periodic();
    if (!pa || !pb) {
        throw UndecidedSymbolically("no symbolic rule for " + a.key() + " vs " + b.key());
    }
    return {std::move(*pa), std::move(*pb)};
}

}  // namespace

bool equalExact(const LangDescriptor& a, const LangDescriptor& b) {
    if (a.key() == b.key()) return true;
    auto [pa, pb] = periodicPair(a, b);
    return pa == pb;
}

bool subsetExact(const LangDescriptor& a, const LangDescriptor& b) {
    if (a.key() == b.key()) return true;
    auto [pa, pb] = periodicPair(a, b);
    return pa.subsetOf(pb);
}

// ----------------------------------------------------------------------- JSON

std::string toJson(const LangDescriptor& d) { return d.key(); }

namespace {

NatSet readSet(const json& j) {
    NatSet out;
    for (const auto& v : j) out.insert(v.get<Natural>());
    return out;
}

LangDescriptor fromJsonValue(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ConfigError("descriptor needs a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite") return LangDescriptor::finite(readSet(j.at("X")));
    if (kind == "cofinite") return LangDescriptor::cofinite(readSet(j.at("X")));
    if (kind == "evens") return LangDescriptor::evens();
    if (kind == "evens-plus-one") return LangDescriptor::evensPlusOne();
    if (kind == "split") {
        const json& x = j.at("X");
        if (x.is_string()) {
            if (x.get<std::string>() != "all") throw ConfigError("split X must be a list or \"all\"");
            return LangDescriptor::splitAll();
        }
        return LangDescriptor::split(readSet(x));
    }
    if (kind == "base-with-exception") {
        return LangDescriptor::withException(fromJsonValue(j.at("base")), j.at("x").get<Natural>());
    }
    if (kind == "doubled-pair") {
        std::optional<Natural> x;
        if (j.contains("x") && !j.at("x").is_null()) x = j.at("x").get<Natural>();
        ExceptionSide side = ExceptionSide::Odd;
        if (j.contains("side")) {
            const std::string s = j.at("side").get<std::string>();
            if (s == "even") side = ExceptionSide::Even;
            else if (s != "odd") throw ConfigError("doubled-pair side must be \"odd\" or \"even\"");
        }
        return LangDescriptor::doubledPair(fromJsonValue(j.at("base")), x, side);
    }
    if (kind == "graph") {
        const std::string name = j.at("program").get<std::string>();
        auto p = programs::byName(name);
        if (!p) throw ConfigError("unknown program '" + name + "'");
        return LangDescriptor::graph(*p);
    }
    if (kind == "uniform") {
        return LangDescriptor::uniform(UniformFamily::byName(j.at("family").get<std::string>()),
                                       j.at("index").get<Natural>());
    }
    throw ConfigError("unknown descriptor kind '" + kind + "'");
}

}  // namespace

LangDescriptor descriptorFromJson(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("descriptor JSON: ") + e.what());
    }
    try {
        return fromJsonValue(j);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("descriptor JSON: ") + e.what());
    }
}

}  // namespace goldlab
