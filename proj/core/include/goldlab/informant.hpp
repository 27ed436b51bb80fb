#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "goldlab/descriptor.hpp"
#include "goldlab/prefix.hpp"

namespace goldlab {

// pos(σ) ⊆ A and ng(σ) ∩ A = ∅.
bool consistent(const Prefix& sigma, const LangDescriptor& a);
bool consistent(const Prefix& sigma, const std::function<bool(Natural)>& member);

// Order in which an informant presents values: a composition of closed-form
// rules, each of which is surjective onto ℕ, so coverage holds by construction.
class Schedule {
public:
    static Schedule identity();
    // The same permutation of {0,…,w-1} applied to every block [kw, kw+w).
    static Schedule blockPermutation(std::vector<Natural> perm);
    // A pseudo-random permutation per block of width w, derived from seed.
    static Schedule seededBlocks(Natural width, std::uint64_t seed);
    // Each value repeated `factor` times: t ↦ ⌊t/factor⌋.
    static Schedule duplicate(Natural factor);
    // Value 0 held for lag+1 steps, then the identity shifted by lag.
    static Schedule delay(Natural lag);

    // (a.then(b))(t) = b(a(t)).
    Schedule then(const Schedule& next) const;

    Natural operator()(Natural t) const;
    // JSON form, e.g. {"kind":"duplicate","factor":2}.
    std::string toJson() const;
    static Schedule fromJson(std::string_view text);

    struct Rule;

private:
    explicit Schedule(std::vector<std::shared_ptr<const Rule>> rules);
    std::vector<std::shared_ptr<const Rule>> rules_;
};

class Informant {
public:
    using Generator = std::function<InfoPair(Natural)>;

    Informant(Generator gen, std::optional<LangDescriptor> target, std::string description);

    InfoPair operator()(Natural t) const { return gen_(t); }
    // I[n]: the first n data.
    Prefix prefix(std::size_t n) const;
    const std::optional<LangDescriptor>& target() const { return target_; }
    const std::string& description() const { return description_; }

private:
    Generator gen_;
    std::optional<LangDescriptor> target_;
    std::string description_;
};

Informant canonicalInformant(const LangDescriptor& l);
Informant scheduledInformant(const LangDescriptor& l, const Schedule& sch);

}  // namespace goldlab
