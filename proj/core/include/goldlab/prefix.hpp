#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <set>
#include <span>
#include <vector>

namespace goldlab {

using Natural = std::uint64_t;
using Budget = std::uint64_t;
using NatSet = std::set<Natural>;

struct InfoPair {
    Natural value = 0;
    bool label = false;

    auto operator<=>(const InfoPair&) const = default;
};

// Identity of a prefix for memo tables: length plus a 128-bit rolling hash.
struct PrefixKey {
    std::size_t size = 0;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    bool operator==(const PrefixKey&) const = default;
};

struct PrefixKeyHash {
    std::size_t operator()(const PrefixKey& k) const noexcept {
        return static_cast<std::size_t>(k.lo ^ (k.hi * 0x9E3779B97F4A7C15ull) ^ k.size);
    }
};

// Finite, contradiction-free sequence of labeled data.  Storage is shared, so
// taking an initial segment is O(1).
class Prefix {
public:
    Prefix();
    explicit Prefix(std::vector<InfoPair> items);
    Prefix(std::initializer_list<InfoPair> items);
    // (0,labels[0]), (1,labels[1]), …; distinct values, so no contradiction check.
    static Prefix canonical(const std::vector<bool>& labels);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    const InfoPair& operator[](std::size_t i) const;
    std::span<const InfoPair> items() const noexcept;
    const InfoPair* begin() const noexcept { return items().data(); }
    const InfoPair* end() const noexcept { return items().data() + size_; }
    const InfoPair& back() const { return (*this)[size_ - 1]; }

    // σ[n]: the first n items.
    Prefix take(std::size_t n) const;
    // σ⁻: all but the last item.
    Prefix withoutLast() const;
    Prefix appended(InfoPair p) const;
    Prefix concat(const Prefix& tail) const;
    bool isPrefixOf(const Prefix& other) const;

    PrefixKey key() const noexcept;
    NatSet pos() const;
    NatSet ng() const;

    bool operator==(const Prefix& other) const;

private:
    struct Storage;
    Prefix(std::shared_ptr<const Storage> storage, std::size_t size);

    std::shared_ptr<const Storage> storage_;
    std::size_t size_ = 0;
};

NatSet posOf(const Prefix& sigma);
NatSet ngOf(const Prefix& sigma);

// Σ(σ): the canonical prefix over the longest initial segment {0,…,s-1} that σ
// labels completely.
Prefix sigmaCanonicalize(const Prefix& sigma);

// Length s of the initial segment Σ(σ) covers.
std::size_t canonicalLength(const Prefix& sigma);

}  // namespace goldlab
