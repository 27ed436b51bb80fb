#pragma once

#include <cstddef>
#include <unordered_map>

#include "goldlab/prefix.hpp"

namespace goldlab::detail {

// Prefix-keyed cache that drops everything once it holds `cap` entries.
// Callers must tolerate recomputation after a drop.
template <class V>
class PrefixMemo {
public:
    explicit PrefixMemo(std::size_t cap = std::size_t{1} << 17) : cap_(cap) {}

    const V* find(const PrefixKey& k) const {
        auto it = map_.find(k);
        return it == map_.end() ? nullptr : &it->second;
    }

    const V& insert(const PrefixKey& k, V v) {
        if (map_.size() >= cap_) map_.clear();
        return map_.insert_or_assign(k, std::move(v)).first->second;
    }

private:
    std::size_t cap_;
    std::unordered_map<PrefixKey, V, PrefixKeyHash> map_;
};

}  // namespace goldlab::detail
