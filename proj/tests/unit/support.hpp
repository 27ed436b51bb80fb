#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "goldlab/hypothesis.hpp"
#include "goldlab/learner.hpp"

namespace goldlab::testing {

// Canonical informant prefix of L: (0,L(0)), …, (n-1,L(n-1)).
inline Prefix canonicalPrefix(const LangDescriptor& l, std::size_t n) {
    std::vector<InfoPair> items;
    for (Natural x = 0; x < n; ++x) items.push_back({x, l.contains(x)});
    return Prefix(std::move(items));
}

// Membership on [0,b) read straight from the descriptor.
inline std::vector<bool> bits(const LangDescriptor& l, Natural b) {
    std::vector<bool> out(b);
    for (Natural x = 0; x < b; ++x) out[x] = l.contains(x);
    return out;
}

// Membership on [0,b) of an enumerated hypothesis at the given budget.
inline std::vector<bool> bits(const Hypothesis& h, Natural b, Budget budget) {
    std::vector<bool> out(b);
    for (Natural x : h.enumerator().enumUpTo(budget)) {
        if (x < b) out[x] = true;
    }
    return out;
}

// σ reordered by a seeded shuffle, with `extra` repeated items appended.
inline Prefix shuffled(const Prefix& sigma, std::mt19937_64& rng, std::size_t extra) {
    std::vector<InfoPair> items(sigma.begin(), sigma.end());
    std::shuffle(items.begin(), items.end(), rng);
    for (std::size_t i = 0; i < extra && !items.empty(); ++i) items.push_back(items[rng() % items.size()]);
    return Prefix(std::move(items));
}

inline std::vector<Code> codes(const Trace& tr) {
    std::vector<Code> out;
    for (const auto& h : tr.hyps) out.push_back(h.code());
    return out;
}

}  // namespace goldlab::testing
