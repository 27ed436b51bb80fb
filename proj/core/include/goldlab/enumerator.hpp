#pragma once

#include <memory>
#include <string>
#include <vector>

#include "goldlab/descriptor.hpp"
#include "goldlab/prefix.hpp"

namespace goldlab {

enum class Provenance { LiftedExact, Guard, UnionVote, GraphEncode, ApproxChain, Snapshot };

const char* provenanceName(Provenance p);

// Step-bounded enumeration W^t of an r.e.-style language.  For every
// implementation contains(x,t) ⇒ contains(x,t+1), and enumUpTo(t) lists exactly
// the x with contains(x,t), ascending.
class Enumerator {
public:
    class Impl {
    public:
        virtual ~Impl() = default;
        virtual bool contains(Natural x, Budget t) const = 0;
        virtual std::vector<Natural> enumUpTo(Budget t) const = 0;
        // Blum-style halting time query: the x-computation finishes within s steps.
        // Unlike contains, no "x < s" bound applies.
        virtual bool haltsWithin(Natural x, Budget s) const { return contains(x, s); }
        virtual Provenance provenance() const = 0;
        // Human-readable bound function on enumUpTo(t).
        virtual std::string bound() const = 0;
    };

    explicit Enumerator(std::shared_ptr<const Impl> impl);

    bool contains(Natural x, Budget t) const { return impl_->contains(x, t); }
    std::vector<Natural> enumUpTo(Budget t) const { return impl_->enumUpTo(t); }
    bool haltsWithin(Natural x, Budget s) const { return impl_->haltsWithin(x, s); }
    Provenance provenance() const { return impl_->provenance(); }
    std::string bound() const { return impl_->bound(); }

private:
    std::shared_ptr<const Impl> impl_;
};

// enumUpTo(t) = {x < t : x ∈ d}; the x-computation halts after x+1 steps.
Enumerator liftExact(const LangDescriptor& d);

// Fixed finite snapshot, used when a trace is reloaded from disk.
Enumerator snapshotEnumerator(NatSet members, Budget takenAt);

}  // namespace goldlab
