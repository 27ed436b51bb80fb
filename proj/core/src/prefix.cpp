#include "goldlab/prefix.hpp"

#include <string>
#include <unordered_map>

#include "goldlab/errors.hpp"

namespace goldlab {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

PrefixKey extend(const PrefixKey& k, const InfoPair& p) {
    const std::uint64_t enc = (p.value << 1) | (p.label ? 1u : 0u);
    PrefixKey out;
    out.size = k.size + 1;
    out.lo = splitmix(k.lo ^ splitmix(enc));
    out.hi = splitmix(k.hi + 0xD6E8FEB86659FD93ull * (enc + 0x632BE59BD9B4E019ull));
    return out;
}

void requireNoContradiction(const std::vector<InfoPair>& items) {
    std::unordered_map<Natural, bool> seen;
    seen.reserve(items.size());
    for (const auto& p : items) {
        auto [it, fresh] = seen.emplace(p.value, p.label);
        if (!fresh && it->second != p.label) {
            throw ContradictionError("value " + std::to_string(p.value) + " labeled both 0 and 1");
        }
    }
}

}  // namespace

struct Prefix::Storage {
    std::vector<InfoPair> items;
    std::vector<PrefixKey> keys;  // keys[i] identifies items[0..i)

    explicit Storage(std::vector<InfoPair> v) : items(std::move(v)) {
        keys.reserve(items.size() + 1);
        keys.push_back(PrefixKey{});
        for (const auto& p : items) keys.push_back(extend(keys.back(), p));
    }
};

Prefix::Prefix() : Prefix(std::vector<InfoPair>{}) {}

Prefix::Prefix(std::vector<InfoPair> items) {
    requireNoContradiction(items);
    size_ = items.size();
    storage_ = std::make_shared<const Storage>(std::move(items));
}

Prefix::Prefix(std::initializer_list<InfoPair> items) : Prefix(std::vector<InfoPair>(items)) {}

Prefix Prefix::canonical(const std::vector<bool>& labels) {
    std::vector<InfoPair> items;
    items.reserve(labels.size());
    for (std::size_t y = 0; y < labels.size(); ++y) items.push_back({y, labels[y]});
    return Prefix(std::make_shared<const Storage>(std::move(items)), labels.size());
}

Prefix::Prefix(std::shared_ptr<const Storage> storage, std::size_t size)
    : storage_(std::move(storage)), size_(size) {}

const InfoPair& Prefix::operator[](std::size_t i) const {
    if (i >= size_) throw std::out_of_range("prefix index out of range");
    return storage_->items[i];
}

std::span<const InfoPair> Prefix::items() const noexcept {
    return {storage_->items.data(), size_};
}

Prefix Prefix::take(std::size_t n) const {
    if (n > size_) throw std::out_of_range("prefix take beyond length");
    return Prefix(storage_, n);
}

Prefix Prefix::withoutLast() const {
    if (size_ == 0) throw std::out_of_range("empty prefix has no σ⁻");
    return take(size_ - 1);
}

Prefix Prefix::appended(InfoPair p) const {
    std::vector<InfoPair> v(begin(), end());
    v.push_back(p);
    return Prefix(std::move(v));
}

Prefix Prefix::concat(const Prefix& tail) const {
    std::vector<InfoPair> v(begin(), end());
    v.insert(v.end(), tail.begin(), tail.end());
    return Prefix(std::move(v));
}

bool Prefix::isPrefixOf(const Prefix& other) const {
    if (size_ > other.size_) return false;
    for (std::size_t i = 0; i < size_; ++i) {
        if (storage_->items[i] != other.storage_->items[i]) return false;
    }
    return true;
}

PrefixKey Prefix::key() const noexcept { return storage_->keys[size_]; }

NatSet Prefix::pos() const {
    NatSet out;
    for (const auto& p : items()) {
        if (p.label) out.insert(p.value);
    }
    return out;
}

NatSet Prefix::ng() const {
    NatSet out;
    for (const auto& p : items()) {
        if (!p.label) out.insert(p.value);
    }
    return out;
}

bool Prefix::operator==(const Prefix& other) const {
    return size_ == other.size_ && isPrefixOf(other);
}

NatSet posOf(const Prefix& sigma) { return sigma.pos(); }
NatSet ngOf(const Prefix& sigma) { return sigma.ng(); }

std::size_t canonicalLength(const Prefix& sigma) {
    std::vector<bool> seen(sigma.size() + 1, false);
    for (const auto& p : sigma) {
        if (p.value < seen.size()) seen[p.value] = true;
    }
    std::size_t s = 0;
    while (s < seen.size() && seen[s]) ++s;
    return s;
}

Prefix sigmaCanonicalize(const Prefix& sigma) {
    const std::size_t s = canonicalLength(sigma);
    std::vector<bool> labels(s, true);
    for (const auto& p : sigma) {
        if (p.value < s && !p.label) labels[p.value] = false;
    }
    return Prefix::canonical(labels);
}

}  // namespace goldlab
