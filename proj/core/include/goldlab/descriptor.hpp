#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goldlab/prefix.hpp"
#include "goldlab/program.hpp"

namespace goldlab {

// An eventually periodic subset of ℕ: below threshold() membership is read from
// the head table, from there on from cycle[x mod period()].  Every descriptor
// outside Graph (and Uniform families without a periodic form) normalizes to one.
class PeriodicSet {
public:
    PeriodicSet(std::vector<bool> head, std::vector<bool> cycle);

    static PeriodicSet tabulate(Natural threshold, Natural period, const std::function<bool(Natural)>& member);

    bool contains(Natural x) const;
    Natural threshold() const { return head_.size(); }
    Natural period() const { return cycle_.size(); }

    bool operator==(const PeriodicSet& other) const;
    bool subsetOf(const PeriodicSet& other) const;
    // |A Δ B|, or nullopt when the difference is infinite.
    std::optional<Natural> symDiffSize(const PeriodicSet& other) const;

private:
    std::vector<bool> head_;
    std::vector<bool> cycle_;
};

// Uniformly decidable family: x ∈ L_i iff decide(x, i).
class UniformFamily {
public:
    using Decider = std::function<bool(Natural x, Natural index)>;
    using PeriodicForm = std::function<std::optional<PeriodicSet>(Natural index)>;

    UniformFamily(std::string name, Decider decide, PeriodicForm periodic = {});

    const std::string& name() const { return name_; }
    bool decide(Natural x, Natural index) const { return decide_(x, index); }
    std::optional<PeriodicSet> periodic(Natural index) const;

    // L_k = {even x ≤ k} ∪ {odd x > k}
    static std::shared_ptr<const UniformFamily> parityThreshold();
    // L_m = {m} ∪ {even x > m}; min(L_m) = m
    static std::shared_ptr<const UniformFamily> anchoredEvens();
    static std::shared_ptr<const UniformFamily> byName(std::string_view name);

private:
    std::string name_;
    Decider decide_;
    PeriodicForm periodic_;
};

enum class ExceptionSide { Odd, Even };

// Symbolic description of a decidable language.  Immutable; copies share the node.
class LangDescriptor {
public:
    enum class Kind { Finite, Cofinite, Evens, EvensPlusOne, Split, BaseWithException, DoubledPair, Graph, Uniform };

    static LangDescriptor finite(NatSet x);
    static LangDescriptor cofinite(NatSet x);
    static LangDescriptor naturals() { return cofinite({}); }
    static LangDescriptor evens();
    static LangDescriptor evensPlusOne();
    // 2X ∪ (2(ℕ∖X)+1)
    static LangDescriptor split(NatSet x);
    // 2ℕ, kept distinct from every split(X) with finite X
    static LangDescriptor splitAll();
    // base ∪ {x}
    static LangDescriptor withException(LangDescriptor base, Natural x);
    // Odd side: 2·base ∪ 2(base∪{x})+1.  Even side: 2(base∪{x}) ∪ 2·base+1.
    // Without x both read 2·base ∪ 2·base+1.
    static LangDescriptor doubledPair(LangDescriptor base, std::optional<Natural> x,
                                      ExceptionSide side = ExceptionSide::Odd);
    static LangDescriptor graph(FnProgram f);
    static LangDescriptor uniform(std::shared_ptr<const UniformFamily> family, Natural index);

    Kind kind() const;
    // Finite/Cofinite/Split set argument.
    const NatSet& set() const;
    bool isSplitAll() const;
    const LangDescriptor& base() const;
    std::optional<Natural> exception() const;
    ExceptionSide side() const;
    const FnProgram& program() const;
    const UniformFamily& family() const;
    std::shared_ptr<const UniformFamily> familyPtr() const;
    Natural index() const;

    bool contains(Natural x) const;
    // Canonical JSON text; equal keys mean structurally identical descriptors.
    const std::string& key() const;
    std::optional<PeriodicSet> periodic() const;

private:
    struct Node;
    explicit LangDescriptor(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

bool member(const LangDescriptor& d, Natural x);
bool equalExact(const LangDescriptor& a, const LangDescriptor& b);
bool subsetExact(const LangDescriptor& a, const LangDescriptor& b);

// Tagged JSON, e.g. {"kind":"cofinite","X":[2]}.
std::string toJson(const LangDescriptor& d);
LangDescriptor descriptorFromJson(std::string_view text);

}  // namespace goldlab
