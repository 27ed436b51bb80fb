#pragma once

#include <filesystem>
#include <iosfwd>

#include "goldlab/learner.hpp"

namespace goldlab {

// Trace files are JSON lines, one record {"t","x","label","h"} per step, where
// (x,label) is the datum at index t and h the code of h_t; a divergence adds a
// final {"diverge":{"t","cost"}} record.  The code table sidecar maps every
// code to its key, salt, and either the exact descriptor or a snapshot of
// enumUpTo(snapshotBudget).
struct TraceFiles {
    std::filesystem::path lines;
    std::filesystem::path codes;

    // "<path>" and "<path minus .jsonl>.codes.json".
    static TraceFiles at(const std::filesystem::path& path);
};

void traceDump(const Trace& tr, std::ostream& lines, std::ostream& codes, Budget snapshotBudget);
void traceDump(const Trace& tr, const TraceFiles& files, Budget snapshotBudget);

// Rebuilds the trace and binds its codes in Registry::current(), throwing
// ConfigError on a clash.  Malformed input raises ParseError with the line.
Trace traceLoad(std::istream& lines, std::istream& codes);
Trace traceLoad(const TraceFiles& files);

}  // namespace goldlab
