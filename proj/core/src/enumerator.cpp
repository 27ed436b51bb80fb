#include "goldlab/enumerator.hpp"

namespace goldlab {

const char* provenanceName(Provenance p) {
    switch (p) {
        case Provenance::LiftedExact: return "lifted-exact";
        case Provenance::Guard: return "guard";
        case Provenance::UnionVote: return "union-vote";
        case Provenance::GraphEncode: return "graph-encode";
        case Provenance::ApproxChain: return "approx-chain";
        case Provenance::Snapshot: return "snapshot";
    }
    return "?";
}

Enumerator::Enumerator(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

namespace {

class LiftedExact final : public Enumerator::Impl {
public:
    explicit LiftedExact(LangDescriptor d) : d_(std::move(d)) {}

    bool contains(Natural x, Budget t) const override { return x < t && d_.contains(x); }
    bool haltsWithin(Natural x, Budget s) const override { return x < s && d_.contains(x); }
    std::vector<Natural> enumUpTo(Budget t) const override {
        std::vector<Natural> out;
        for (Natural x = 0; x < t; ++x) {
            if (d_.contains(x)) out.push_back(x);
        }
        return out;
    }
    Provenance provenance() const override { return Provenance::LiftedExact; }
    std::string bound() const override { return "[0,t)"; }

private:
    LangDescriptor d_;
};

class Snapshot final : public Enumerator::Impl {
public:
    Snapshot(NatSet members, Budget takenAt) : members_(std::move(members)), takenAt_(takenAt) {}

    bool contains(Natural x, Budget) const override { return members_.count(x) > 0; }
    std::vector<Natural> enumUpTo(Budget) const override { return {members_.begin(), members_.end()}; }
    Provenance provenance() const override { return Provenance::Snapshot; }
    std::string bound() const override { return "fixed snapshot taken at step " + std::to_string(takenAt_); }

private:
    NatSet members_;
    Budget takenAt_;
};

}  // namespace

Enumerator liftExact(const LangDescriptor& d) { return Enumerator(std::make_shared<LiftedExact>(d)); }

Enumerator snapshotEnumerator(NatSet members, Budget takenAt) {
    return Enumerator(std::make_shared<Snapshot>(std::move(members), takenAt));
}

}  // namespace goldlab
