#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace giclass {

enum class SelftestLevel { Quick, Full };

struct CheckResult {
    std::string name;      // stable identifier, e.g. "oracle-counts"
    bool passed = false;
    std::string detail;    // one line; deterministic for fixed level and seed
    double seconds = 0.0;  // wall time, informational only — never in reports
};

// The built-in verification suite. Quick caps the exhaustive corpora at 5
// vertices and skips the reduction harness and the scale benchmark; Full
// runs everything (corpora to 7 vertices). A check that throws is reported
// as failed with the exception text. Single-threaded and deterministic for a
// fixed (level, seed); the checks, in order:
//
//   oracle-counts            canonical forms partition small graphs into the
//                            known class counts; pairwise route cross-check
//   cograph-canon            cotree build/reconstruct/canonize on every
//                            small graph, with verified P4 witnesses
//   classification-fidelity  exception set, catalog, pinned rows, swap and
//                            complement invariance, open-set shape
//   reduction-harness        split-incidence images and iso preservation
//                            (Full only)
//   dispatch-soundness       specialized algorithms vs. the oracle on every
//                            member pair per polynomial table row
//   graph6-roundtrip         codec identity on labeled corpora and samples
//   cograph-scale            10,000-vertex canonical code inside its time
//                            budget (Full only)
std::vector<CheckResult> run_selftest(SelftestLevel level, std::uint64_t seed = 12345);

// One "[PASS]/[FAIL] name: detail" line per check plus a tally line.
// Byte-identical across runs for fixed inputs (timings are excluded).
std::string selftest_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace giclass
